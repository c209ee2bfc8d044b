//! Flat `key = value` run configuration.

use birkstab::majorant::TailMode;
use birkstab::models::{presets, LagrangePoint, ModelSpec};
use birkstab::normalform::{DerivWeightMode, ResonanceMode};
use birkstab::rigor::{iv_sqrt_down, iv_sqrt_up, Interval};
use std::fmt;
use std::path::PathBuf;

#[derive(Debug)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub model: ModelSpec,
    pub mode: ResonanceMode,
    pub r_i: u32,
    pub r_ii: u32,
    pub rho_grid: Vec<f64>,
    pub beta: f64,
    pub scan_tail: TailMode,
    pub time_tail: TailMode,
    pub deriv_mode: DerivWeightMode,
    pub out_path: Option<PathBuf>,
    pub full_out_path: Option<PathBuf>,
    pub checkpoint_path: Option<PathBuf>,
    pub report_digits: usize,
}

/// Parse a frequency token: a float (outward-enclosed), a rational `p/q`,
/// `sqrt2/2`, or `golden` (the golden-mean ratio (sqrt(5)-1)/2); a leading
/// `-` negates.
pub fn parse_frequency(token: &str) -> Result<Interval, String> {
    let (neg, body) = match token.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, token),
    };
    let value = if body == "sqrt2/2" {
        Interval::new(iv_sqrt_down(2.0), iv_sqrt_up(2.0)).div_int(2)
    } else if body == "golden" {
        Interval::new(iv_sqrt_down(5.0), iv_sqrt_up(5.0))
            .sub(&Interval::ONE)
            .div_int(2)
    } else if let Some((p, q)) = body.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| format!("bad rational `{body}`"))?;
        let q: i64 = q.trim().parse().map_err(|_| format!("bad rational `{body}`"))?;
        if q == 0 {
            return Err("zero denominator".into());
        }
        Interval::point(p as f64).div_int(q)
    } else {
        let v: f64 = body.parse().map_err(|_| format!("bad number `{body}`"))?;
        Interval::outward(v)
    };
    Ok(if neg { value.neg() } else { value })
}

pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut model_kind: Option<String> = None;
    let mut omega1: Option<Interval> = None;
    let mut omega2: Option<Interval> = None;
    let mut mu: Option<Interval> = None;
    let mut point = LagrangePoint::L4;
    let mut mode = ResonanceMode::NonResonant;
    let mut r_i: Option<u32> = None;
    let mut r_ii: Option<u32> = None;
    let mut rho_grid: Vec<f64> = Vec::new();
    let mut beta = 0.9;
    let mut scan_tail = TailMode::Geometric;
    let mut time_tail = TailMode::Truncated;
    let mut deriv_mode = DerivWeightMode::Sharp;
    let mut out_path = None;
    let mut full_out_path = None;
    let mut checkpoint_path = None;
    let mut report_digits = 3usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| ConfigError { line: line_no, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err("expected `key = value`".into()))?;
        let key = key.trim();
        let value = value.trim();
        match key {
            "model" => model_kind = Some(value.to_string()),
            "omega1" => omega1 = Some(parse_frequency(value).map_err(err)?),
            "omega2" => omega2 = Some(parse_frequency(value).map_err(err)?),
            "mu" => {
                mu = Some(match presets::mu_by_name(value) {
                    Some(iv) => iv,
                    None => {
                        let v: f64 =
                            value.parse().map_err(|_| err(format!("bad mu `{value}`")))?;
                        Interval::outward(v)
                    }
                })
            }
            "point" => {
                point = match value {
                    "L4" | "l4" => LagrangePoint::L4,
                    "L5" | "l5" => LagrangePoint::L5,
                    other => return Err(err(format!("unknown point `{other}`"))),
                }
            }
            "mode" => {
                mode = if value == "nonres" {
                    ResonanceMode::NonResonant
                } else if let Some(idx) = value.strip_prefix("resonant:") {
                    let m: usize =
                        idx.parse().map_err(|_| err(format!("bad angle index `{idx}`")))?;
                    if m < 1 {
                        return Err(err("resonant angle index is 1-based".into()));
                    }
                    ResonanceMode::SingleResonantAngle { angle: m - 1 }
                } else {
                    return Err(err(format!("unknown mode `{value}`")));
                }
            }
            "r_i" => r_i = Some(value.parse().map_err(|_| err("bad r_i".into()))?),
            "r_ii" => r_ii = Some(value.parse().map_err(|_| err("bad r_ii".into()))?),
            "rho" => {
                for tok in value.split(',') {
                    let v: f64 =
                        tok.trim().parse().map_err(|_| err(format!("bad rho `{tok}`")))?;
                    rho_grid.push(v);
                }
            }
            "rho_geom" => {
                let parts: Vec<&str> = value.split(',').map(str::trim).collect();
                if parts.len() != 3 {
                    return Err(err("rho_geom wants `start,factor,count`".into()));
                }
                let start: f64 = parts[0].parse().map_err(|_| err("bad start".into()))?;
                let factor: f64 = parts[1].parse().map_err(|_| err("bad factor".into()))?;
                let count: usize = parts[2].parse().map_err(|_| err("bad count".into()))?;
                let mut v = start;
                for _ in 0..count {
                    rho_grid.push(v);
                    v *= factor;
                }
            }
            "beta" => beta = value.parse().map_err(|_| err("bad beta".into()))?,
            "scan_tail" => {
                scan_tail = match value {
                    "geometric" => TailMode::Geometric,
                    "truncated" => TailMode::Truncated,
                    other => return Err(err(format!("unknown tail mode `{other}`"))),
                }
            }
            "time_tail" => {
                time_tail = match value {
                    "geometric" => TailMode::Geometric,
                    "truncated" => TailMode::Truncated,
                    other => return Err(err(format!("unknown tail mode `{other}`"))),
                }
            }
            "deriv_weight" => {
                deriv_mode = match value {
                    "sharp" => DerivWeightMode::Sharp,
                    "poisson_norm" => DerivWeightMode::PoissonNorm,
                    other => return Err(err(format!("unknown weight `{other}`"))),
                }
            }
            "out" => out_path = Some(PathBuf::from(value)),
            "full_out" => full_out_path = Some(PathBuf::from(value)),
            "checkpoint" => checkpoint_path = Some(PathBuf::from(value)),
            "report_digits" => {
                report_digits = value.parse().map_err(|_| err("bad report_digits".into()))?
            }
            other => return Err(err(format!("unknown key `{other}`"))),
        }
    }

    let err0 = |message: &str| ConfigError { line: 0, message: message.into() };
    let r_i = r_i.ok_or_else(|| err0("missing r_i"))?;
    let r_ii = r_ii.ok_or_else(|| err0("missing r_ii"))?;
    if r_i < 1 || r_i > r_ii {
        return Err(err0("need 1 <= r_i <= r_ii"));
    }
    if !(0.0 < beta && beta < 1.0) {
        return Err(err0("beta must lie in (0, 1)"));
    }
    if rho_grid.iter().any(|&r| r <= 0.0) {
        return Err(err0("rho values must be positive"));
    }
    if rho_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(err0("rho grid must be sorted ascending"));
    }
    let model = match model_kind.as_deref() {
        Some("henon_heiles") => {
            let omega1 = omega1.ok_or_else(|| err0("henon_heiles needs omega1"))?;
            let omega2 = omega2.ok_or_else(|| err0("henon_heiles needs omega2"))?;
            ModelSpec::HenonHeiles { omega1, omega2 }
        }
        Some("cprtbp") => {
            let mu = mu.ok_or_else(|| err0("cprtbp needs mu"))?;
            ModelSpec::Cprtbp { mu, point }
        }
        Some(other) => return Err(err0(&format!("unknown model `{other}`"))),
        None => return Err(err0("missing model")),
    };
    Ok(RunConfig {
        model,
        mode,
        r_i,
        r_ii,
        rho_grid,
        beta,
        scan_tail,
        time_tail,
        deriv_mode,
        out_path,
        full_out_path,
        checkpoint_path,
        report_digits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_appendix_config() {
        let text = "\
# tutorial configuration
model = henon_heiles
omega1 = 1
omega2 = -sqrt2/2
mode = nonres
r_i = 2
r_ii = 5
rho = 1e-4
";
        let cfg = parse_config(text).unwrap();
        assert_eq!(cfg.r_i, 2);
        assert_eq!(cfg.rho_grid, vec![1e-4]);
        match cfg.model {
            ModelSpec::HenonHeiles { omega2, .. } => {
                assert!(omega2.contains(-std::f64::consts::SQRT_2 / 2.0));
            }
            _ => panic!("wrong model"),
        }
    }

    #[test]
    fn rejects_bad_beta() {
        let text = "model = henon_heiles\nomega1 = 1\nomega2 = -golden\nr_i = 2\nr_ii = 4\nbeta = 1.5\n";
        assert!(parse_config(text).is_err());
    }

    #[test]
    fn frequency_tokens() {
        assert!(parse_frequency("-golden")
            .unwrap()
            .contains(-(5.0f64.sqrt() - 1.0) / 2.0));
        assert!(parse_frequency("-617/1000").unwrap().contains(-0.617));
        assert!(parse_frequency("0.25").unwrap().contains(0.25));
        assert!(parse_frequency("x").is_err());
    }
}
