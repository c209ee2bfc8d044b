//! Bit-exact serialization of a [`HamiltonianState`]: every binary64 value is
//! written as a hexadecimal float literal, so a long run can resume with the
//! identical state it checkpointed.

use crate::normalform::{DerivWeight, Frequencies, HamiltonianState, ResonanceMode};
use crate::polyring::{fmt_hex_f64, parse_hex_f64, HomoPoly};
use crate::rigor::{BoundKind, Interval, LogBound};
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub const FORMAT_HEADER: &str = "birkstab-checkpoint v1";

#[derive(Debug, thiserror::Error)]
#[error("checkpoint parse error at line {line}: {message}")]
pub struct CheckpointError {
    pub line: usize,
    pub message: String,
}

pub fn serialize_state(state: &HamiltonianState) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{FORMAT_HEADER}");
    let _ = writeln!(out, "n {}", state.n);
    match state.mode {
        ResonanceMode::NonResonant => {
            let _ = writeln!(out, "mode nonres");
        }
        ResonanceMode::SingleResonantAngle { angle } => {
            let _ = writeln!(out, "mode res {angle}");
        }
    }
    let _ = writeln!(out, "r_i {}", state.r_i);
    let _ = writeln!(out, "r_ii {}", state.r_ii);
    let _ = writeln!(out, "steps {}", state.steps_done);
    let mut omega_line = format!("omega {}", state.omega.omega.len());
    for w in &state.omega.omega {
        let _ = write!(omega_line, " {} {}", fmt_hex_f64(w.lo()), fmt_hex_f64(w.hi()));
    }
    let _ = writeln!(out, "{omega_line}");
    let _ = writeln!(out, "log_e {}", fmt_hex_f64(state.log_e.logval));
    let _ = writeln!(out, "log_a {}", fmt_hex_f64(state.log_a));
    for (idx, z) in state.z_explicit.iter().enumerate() {
        let _ = writeln!(out, "z {} {} {}", idx, z.degree(), z.len());
        for line in z.to_lines() {
            let _ = writeln!(out, "{line}");
        }
    }
    for (class, poly) in &state.f_explicit {
        let _ = writeln!(out, "f {} {} {}", class, poly.degree(), poly.len());
        for line in poly.to_lines() {
            let _ = writeln!(out, "{line}");
        }
    }
    for (class, lb) in &state.log_z_tail {
        let _ = writeln!(out, "logz {} {}", class, fmt_hex_f64(lb.logval));
    }
    for (class, lb) in &state.log_f {
        let _ = writeln!(out, "logf {} {}", class, fmt_hex_f64(lb.logval));
    }
    for (r, d) in &state.chi_d_history {
        match d {
            DerivWeight::Explicit(iv) => {
                let _ = writeln!(
                    out,
                    "dhist {} explicit {} {}",
                    r,
                    fmt_hex_f64(iv.lo()),
                    fmt_hex_f64(iv.hi())
                );
            }
            DerivWeight::Estimated { log_g } => {
                let _ = writeln!(out, "dhist {} estimated {}", r, fmt_hex_f64(*log_g));
            }
        }
    }
    let _ = writeln!(out, "end");
    out
}

struct Cursor<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self) -> Result<&'a str, CheckpointError> {
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| CheckpointError { line: self.pos + 1, message: "unexpected end of file".into() })?;
        self.pos += 1;
        Ok(line)
    }

    fn err(&self, message: impl Into<String>) -> CheckpointError {
        CheckpointError { line: self.pos, message: message.into() }
    }
}

fn parse_hex(cur: &Cursor<'_>, s: &str) -> Result<f64, CheckpointError> {
    parse_hex_f64(s).map_err(|message| CheckpointError { line: cur.pos, message })
}

pub fn parse_state(text: &str) -> Result<HamiltonianState, CheckpointError> {
    let mut cur = Cursor { lines: text.lines().collect(), pos: 0 };
    if cur.next()? != FORMAT_HEADER {
        return Err(cur.err("bad header"));
    }
    let mut n = 0usize;
    let mut mode = ResonanceMode::NonResonant;
    let (mut r_i, mut r_ii, mut steps) = (0u32, 0u32, 0u32);
    let mut omega: Option<Frequencies> = None;
    let mut log_e = LogBound::zero(BoundKind::Upper);
    let mut log_a = 0.0f64;
    let mut z_explicit: Vec<HomoPoly> = Vec::new();
    let mut f_explicit: BTreeMap<u32, HomoPoly> = BTreeMap::new();
    let mut log_z_tail: BTreeMap<u32, LogBound> = BTreeMap::new();
    let mut log_f: BTreeMap<u32, LogBound> = BTreeMap::new();
    let mut chi_d_history: Vec<(u32, DerivWeight)> = Vec::new();
    let mut finished = false;

    while cur.pos < cur.lines.len() {
        let line = cur.next()?;
        let mut it = line.split_whitespace();
        let tag = match it.next() {
            Some(t) => t,
            None => continue,
        };
        let mut next_field = |cur: &Cursor<'_>| {
            it.next().ok_or_else(|| CheckpointError { line: cur.pos, message: "missing field".into() })
        };
        match tag {
            "n" => n = next_field(&cur)?.parse().map_err(|_| cur.err("bad n"))?,
            "mode" => {
                mode = match next_field(&cur)? {
                    "nonres" => ResonanceMode::NonResonant,
                    "res" => {
                        let angle =
                            next_field(&cur)?.parse().map_err(|_| cur.err("bad angle"))?;
                        ResonanceMode::SingleResonantAngle { angle }
                    }
                    other => return Err(cur.err(format!("unknown mode `{other}`"))),
                }
            }
            "r_i" => r_i = next_field(&cur)?.parse().map_err(|_| cur.err("bad r_i"))?,
            "r_ii" => r_ii = next_field(&cur)?.parse().map_err(|_| cur.err("bad r_ii"))?,
            "steps" => steps = next_field(&cur)?.parse().map_err(|_| cur.err("bad steps"))?,
            "omega" => {
                let count: usize = next_field(&cur)?.parse().map_err(|_| cur.err("bad count"))?;
                let mut ws = Vec::with_capacity(count);
                for _ in 0..count {
                    let lo = parse_hex(&cur, next_field(&cur)?)?;
                    let hi = parse_hex(&cur, next_field(&cur)?)?;
                    ws.push(Interval::new(lo, hi));
                }
                omega = Some(Frequencies::new(ws));
            }
            "log_e" => log_e = LogBound::upper(parse_hex(&cur, next_field(&cur)?)?),
            "log_a" => log_a = parse_hex(&cur, next_field(&cur)?)?,
            "z" | "f" => {
                let idx: u32 = next_field(&cur)?.parse().map_err(|_| cur.err("bad index"))?;
                let degree: u32 =
                    next_field(&cur)?.parse().map_err(|_| cur.err("bad degree"))?;
                let count: usize =
                    next_field(&cur)?.parse().map_err(|_| cur.err("bad term count"))?;
                let mut body = Vec::with_capacity(count);
                for _ in 0..count {
                    body.push(cur.next()?);
                }
                let poly = HomoPoly::from_lines(n, degree, body).map_err(|e| CheckpointError {
                    line: cur.pos,
                    message: e.to_string(),
                })?;
                if tag == "z" {
                    if idx as usize != z_explicit.len() {
                        return Err(cur.err("normal-form terms out of order"));
                    }
                    z_explicit.push(poly);
                } else {
                    f_explicit.insert(idx, poly);
                }
            }
            "logz" => {
                let class: u32 = next_field(&cur)?.parse().map_err(|_| cur.err("bad class"))?;
                log_z_tail.insert(class, LogBound::upper(parse_hex(&cur, next_field(&cur)?)?));
            }
            "logf" => {
                let class: u32 = next_field(&cur)?.parse().map_err(|_| cur.err("bad class"))?;
                log_f.insert(class, LogBound::upper(parse_hex(&cur, next_field(&cur)?)?));
            }
            "dhist" => {
                let r: u32 = next_field(&cur)?.parse().map_err(|_| cur.err("bad order"))?;
                match next_field(&cur)? {
                    "explicit" => {
                        let lo = parse_hex(&cur, next_field(&cur)?)?;
                        let hi = parse_hex(&cur, next_field(&cur)?)?;
                        chi_d_history.push((r, DerivWeight::Explicit(Interval::new(lo, hi))));
                    }
                    "estimated" => {
                        let log_g = parse_hex(&cur, next_field(&cur)?)?;
                        chi_d_history.push((r, DerivWeight::Estimated { log_g }));
                    }
                    other => return Err(cur.err(format!("unknown weight kind `{other}`"))),
                }
            }
            "end" => {
                finished = true;
                break;
            }
            other => return Err(cur.err(format!("unknown record `{other}`"))),
        }
    }
    if !finished {
        return Err(cur.err("truncated checkpoint: missing end record"));
    }
    let omega = omega.ok_or_else(|| cur.err("missing omega record"))?;
    if omega.n() != n || z_explicit.is_empty() {
        return Err(cur.err("inconsistent checkpoint"));
    }
    Ok(HamiltonianState::assemble(
        r_i,
        r_ii,
        steps,
        mode,
        omega,
        z_explicit,
        f_explicit,
        log_z_tail,
        log_f,
        log_e,
        log_a,
        chi_d_history,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::henon_heiles;
    use crate::rigor::{iv_sqrt_down, iv_sqrt_up};

    fn fresh_state() -> HamiltonianState {
        let s2_half = Interval::new(iv_sqrt_down(2.0), iv_sqrt_up(2.0)).div_int(2);
        let omega = Frequencies::new(vec![Interval::ONE, s2_half.neg()]);
        henon_heiles(&omega, 2, 5, ResonanceMode::NonResonant)
    }

    #[test]
    fn fresh_state_round_trips() {
        let state = fresh_state();
        let text = serialize_state(&state);
        let back = parse_state(&text).unwrap();
        assert_eq!(serialize_state(&back), text);
    }

    #[test]
    fn evolved_state_round_trips_bit_exactly() {
        let mut state = fresh_state();
        state.normalization_step().unwrap();
        let text = serialize_state(&state);
        let back = parse_state(&text).unwrap();
        assert_eq!(serialize_state(&back), text);
    }

    #[test]
    fn truncated_file_is_rejected() {
        let state = fresh_state();
        let text = serialize_state(&state);
        let cut = &text[..text.len() / 2];
        assert!(parse_state(cut).is_err());
    }
}
