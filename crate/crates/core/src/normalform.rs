//! The Birkhoff normalization engine.
//!
//! A [`HamiltonianState`] carries the finite description of the Hamiltonian
//! after `r` normalization steps: explicit polynomials up to class `R_I`,
//! log-domain norm majorants for classes up to `R_II`, and the geometric tail
//! pair `(log E, log a_r)`.  Explicit steps solve the homological equation and
//! push Lie-series contributions through the expansion; estimate-only steps
//! (`R_I < r <= R_II`) advance the same bookkeeping purely on norm bounds,
//! with the generating-function norm estimated through the smallest divisor.

use crate::majorant::{self, ClassBounds};
use crate::polyring::{HomoPoly, MultiIndexPair};
use crate::rigor::{
    dir_add, dir_div, dir_mul, log_plus, BoundKind, ComplexInterval, Dir, Interval, LogBound,
};
use std::collections::BTreeMap;

/// Frequencies of the unperturbed oscillators, as enclosures.
#[derive(Debug, Clone)]
pub struct Frequencies {
    pub omega: Vec<Interval>,
    /// Optional Diophantine constants `(gamma, tau)`; informational.
    pub diophantine: Option<(f64, f64)>,
}

impl Frequencies {
    pub fn new(omega: Vec<Interval>) -> Self {
        Frequencies { omega, diophantine: None }
    }

    pub fn n(&self) -> usize {
        self.omega.len()
    }

    /// Enclosure of `omega . k` for an integer vector `k`.
    pub fn dot(&self, k: &[i64]) -> Interval {
        let mut acc = Interval::ZERO;
        for (w, &kj) in self.omega.iter().zip(k) {
            if kj != 0 {
                acc = acc.add(&w.mul_int(kj));
            }
        }
        acc
    }
}

/// Which monomials the normal form keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResonanceMode {
    /// Keep only action monomials (`l = lt`).
    NonResonant,
    /// Keep monomials with `l_j = lt_j` for every `j != angle`; the angle
    /// conjugate to `I_angle` stays in the normal form (0-based index).
    SingleResonantAngle { angle: usize },
}

impl ResonanceMode {
    pub fn keeps(&self, key: &MultiIndexPair, n: usize) -> bool {
        match self {
            ResonanceMode::NonResonant => (0..n).all(|j| key.diff(j) == 0),
            ResonanceMode::SingleResonantAngle { angle } => {
                (0..n).all(|j| j == *angle || key.diff(j) == 0)
            }
        }
    }

    /// True when the difference vector `k` corresponds to a removed monomial.
    fn removes_k(&self, k: &[i64]) -> bool {
        match self {
            ResonanceMode::NonResonant => k.iter().any(|&kj| kj != 0),
            ResonanceMode::SingleResonantAngle { angle } => {
                k.iter().enumerate().any(|(j, &kj)| j != *angle && kj != 0)
            }
        }
    }
}

/// Errors surfaced by the normalization pipeline.
#[derive(Debug, thiserror::Error)]
pub enum NormalizeError {
    #[error("resonance detected at order {r}: divisor for k = {k:?} contains zero")]
    Resonance { r: u32, k: Vec<i64> },
    #[error("target order {target} exceeds the majorant horizon R_II = {r_ii}")]
    TargetBeyondHorizon { target: u32, r_ii: u32 },
    #[error("estimate-only continuation requires explicit orders first (steps_done = {steps})")]
    OutOfOrder { steps: u32 },
}

/// Smallest divisor `alpha_r`: a lower-bounded enclosure of
/// `min |omega . k|` over all difference vectors `|k| <= r + 2` whose
/// monomials the mode removes.
pub fn smallest_divisor(
    omega: &Frequencies,
    r: u32,
    mode: ResonanceMode,
) -> Result<Interval, NormalizeError> {
    let mut cache = AlphaCache::new();
    cache.up_to(omega, mode, r + 2, r)
}

/// Incremental smallest-divisor scan: shells `|k| = N` are visited once and
/// the running minimum reused for every later order.
#[derive(Debug, Clone, Default)]
pub struct AlphaCache {
    done_norm: u32,
    best: Option<Interval>,
}

impl AlphaCache {
    pub fn new() -> Self {
        AlphaCache::default()
    }

    pub fn up_to(
        &mut self,
        omega: &Frequencies,
        mode: ResonanceMode,
        max_norm: u32,
        r: u32,
    ) -> Result<Interval, NormalizeError> {
        let n = omega.n();
        while self.done_norm < max_norm {
            let norm = self.done_norm + 1;
            let mut k = vec![0i64; n];
            self.shell(omega, mode, &mut k, 0, norm as i64, r)?;
            self.done_norm = norm;
        }
        Ok(self.best.expect("at least one divisor candidate"))
    }

    fn shell(
        &mut self,
        omega: &Frequencies,
        mode: ResonanceMode,
        k: &mut Vec<i64>,
        pos: usize,
        remaining: i64,
        r: u32,
    ) -> Result<(), NormalizeError> {
        let n = omega.n();
        if pos == n - 1 {
            for &last in &[remaining, -remaining] {
                k[pos] = last;
                // Dedupe +-k: the first nonzero component must be positive.
                let first = k.iter().find(|&&v| v != 0).copied().unwrap_or(0);
                if first <= 0 {
                    continue;
                }
                if !mode.removes_k(k) {
                    continue;
                }
                let v = omega.dot(k).abs();
                if v.contains_zero() {
                    return Err(NormalizeError::Resonance { r, k: k.clone() });
                }
                self.best = Some(match &self.best {
                    None => v,
                    Some(b) => Interval::new(b.lo().min(v.lo()), b.hi().min(v.hi())),
                });
                if remaining == 0 {
                    break;
                }
            }
            k[pos] = 0;
            return Ok(());
        }
        let mut mag = 0i64;
        while mag <= remaining {
            for &val in &[mag, -mag] {
                k[pos] = val;
                self.shell(omega, mode, k, pos + 1, remaining - mag, r)?;
                if mag == 0 {
                    break;
                }
            }
            mag += 1;
        }
        k[pos] = 0;
        Ok(())
    }
}

/// Solve the homological equation for the class-`r` term: returns the
/// generating function (coefficients `-c / (i omega.(l - lt))` over the removed
/// set) and the new normal-form term (the kept set, unchanged).
pub fn solve_homological(
    f_r: &HomoPoly,
    omega: &Frequencies,
    mode: ResonanceMode,
) -> Result<(HomoPoly, HomoPoly), NormalizeError> {
    let n = f_r.n();
    let r = f_r.degree().saturating_sub(2);
    let mut chi_terms: Vec<(MultiIndexPair, ComplexInterval)> = Vec::new();
    let mut z_terms: Vec<(MultiIndexPair, ComplexInterval)> = Vec::new();
    for (key, coeff) in f_r.terms() {
        if mode.keeps(key, n) {
            z_terms.push((*key, *coeff));
        } else {
            let k: Vec<i64> = (0..n).map(|j| key.diff(j)).collect();
            let divisor = omega.dot(&k);
            if divisor.contains_zero() {
                return Err(NormalizeError::Resonance { r, k });
            }
            // -c / (i d) = (i c) / d for the real divisor d.
            chi_terms.push((*key, coeff.mul_i().div_re(&divisor)));
        }
    }
    let chi = HomoPoly::from_terms(n, f_r.degree(), chi_terms).expect("degrees preserved");
    let z = HomoPoly::from_terms(n, f_r.degree(), z_terms).expect("degrees preserved");
    Ok((chi, z))
}

/// Residual `L_chi Z0 + f_r - Z_r` with the Lie derivative evaluated as an
/// actual bracket; its norm interval must contain zero.
pub fn homological_residual(
    chi: &HomoPoly,
    z0: &HomoPoly,
    f_r: &HomoPoly,
    z_r: &HomoPoly,
) -> HomoPoly {
    chi.poisson(z0).add(f_r).add(&z_r.neg())
}

/// Which derivative-weight bound a step used.
#[derive(Debug, Clone, PartialEq)]
pub enum DerivWeight {
    /// Explicit expansion: the sharpened weight from the generating function.
    Explicit(Interval),
    /// Estimate-only step: `log` of the generating-function norm bound.
    Estimated { log_g: f64 },
}

/// How the derivative weight of an explicit generating function is bounded.
///
/// Both choices are valid upper bounds for the Lie estimates; the sharpened
/// sum is tighter, the norm product is what large production runs of the
/// reference tables used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DerivWeightMode {
    /// `sum |c| max_j{l_j, lt_j}` over the generating function.
    #[default]
    Sharp,
    /// `(r+2) ||chi_r||`.
    PoissonNorm,
}

/// Finite representation of the Hamiltonian after `steps_done` normalization
/// steps.
#[derive(Debug, Clone)]
pub struct HamiltonianState {
    pub n: usize,
    pub r_i: u32,
    pub r_ii: u32,
    pub steps_done: u32,
    pub mode: ResonanceMode,
    pub omega: Frequencies,
    /// `Z_0 .. Z_min(steps_done, R_I)`; odd or empty entries stored as zero
    /// polynomials so indexing stays uniform.
    pub z_explicit: Vec<HomoPoly>,
    /// Perturbative classes `steps_done+1 ..= R_I`.
    pub f_explicit: BTreeMap<u32, HomoPoly>,
    /// Normal-form norm majorants for classes in `(R_I, min(steps_done, R_II)]`.
    pub log_z_tail: BTreeMap<u32, LogBound>,
    /// Perturbative norm majorants for classes in `(max(steps_done, R_I), R_II]`.
    pub log_f: BTreeMap<u32, LogBound>,
    pub log_e: LogBound,
    /// Upper bound of `log a_r` for the geometric tail.
    pub log_a: f64,
    pub chi_d_history: Vec<(u32, DerivWeight)>,
    /// Derivative-weight bound used at explicit steps.
    pub deriv_mode: DerivWeightMode,
    alpha_cache: AlphaCache,
}

impl HamiltonianState {
    /// Fresh state before any normalization step.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        mode: ResonanceMode,
        omega: Frequencies,
        r_i: u32,
        r_ii: u32,
        z0: HomoPoly,
        f_classes: BTreeMap<u32, HomoPoly>,
        log_f_seed: BTreeMap<u32, LogBound>,
        log_e: LogBound,
        log_a: f64,
    ) -> Self {
        assert!(r_i >= 1 && r_i <= r_ii, "need 1 <= R_I <= R_II");
        let n = omega.n();
        assert_eq!(z0.n(), n);
        let mut log_f = log_f_seed;
        for s in (r_i + 1)..=r_ii {
            log_f.entry(s).or_insert_with(|| LogBound::zero(BoundKind::Upper));
        }
        for s in f_classes.keys() {
            assert!(*s >= 1 && *s <= r_i, "explicit classes must lie in 1..=R_I");
        }
        HamiltonianState {
            n,
            r_i,
            r_ii,
            steps_done: 0,
            mode,
            omega,
            z_explicit: vec![z0],
            f_explicit: f_classes,
            log_z_tail: BTreeMap::new(),
            log_f,
            log_e,
            log_a,
            chi_d_history: Vec::new(),
            deriv_mode: DerivWeightMode::default(),
            alpha_cache: AlphaCache::new(),
        }
    }

    /// Reassemble a state from its serialized parts (checkpoint loading).
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        r_i: u32,
        r_ii: u32,
        steps_done: u32,
        mode: ResonanceMode,
        omega: Frequencies,
        z_explicit: Vec<HomoPoly>,
        f_explicit: BTreeMap<u32, HomoPoly>,
        log_z_tail: BTreeMap<u32, LogBound>,
        log_f: BTreeMap<u32, LogBound>,
        log_e: LogBound,
        log_a: f64,
        chi_d_history: Vec<(u32, DerivWeight)>,
    ) -> Self {
        let n = omega.n();
        HamiltonianState {
            n,
            r_i,
            r_ii,
            steps_done,
            mode,
            omega,
            z_explicit,
            f_explicit,
            log_z_tail,
            log_f,
            log_e,
            log_a,
            chi_d_history,
            deriv_mode: DerivWeightMode::default(),
            alpha_cache: AlphaCache::new(),
        }
    }

    /// Snapshot of every per-class norm bound needed to evaluate remainder,
    /// action-rate and escape-time bounds at a given radius.
    pub fn class_bounds(&self) -> ClassBounds {
        let mut log_f_explicit = BTreeMap::new();
        for (&s, poly) in &self.f_explicit {
            log_f_explicit.insert(s, poly.log_norm_upper());
        }
        let mut log_z_explicit = BTreeMap::new();
        for (s, z) in self.z_explicit.iter().enumerate().skip(1) {
            log_z_explicit.insert(s as u32, z.log_norm_upper());
        }
        ClassBounds {
            r: self.steps_done,
            r_i: self.r_i,
            r_ii: self.r_ii,
            log_f_explicit,
            log_f_table: self.log_f.clone(),
            log_z_explicit,
            log_z_table: self.log_z_tail.clone(),
            log_e: self.log_e,
            log_a: self.log_a,
        }
    }

    /// Majorant sources shared by explicit and estimate-only steps: normal-form
    /// classes below `r` and perturbative classes above `r`.
    fn majorant_sources(&self, r: u32) -> (Vec<(u32, LogBound)>, Vec<(u32, LogBound)>) {
        let mut z_sources = Vec::new();
        for (s, z) in self.z_explicit.iter().enumerate().skip(1) {
            let s = s as u32;
            if s < r {
                z_sources.push((s, z.log_norm_upper()));
            }
        }
        for (&s, &lb) in &self.log_z_tail {
            if s < r {
                z_sources.push((s, lb));
            }
        }
        let mut f_sources = Vec::new();
        for (&s, poly) in &self.f_explicit {
            if s > r {
                f_sources.push((s, poly.log_norm_upper()));
            }
        }
        for (&s, &lb) in &self.log_f {
            if s > r {
                f_sources.push((s, lb));
            }
        }
        (z_sources, f_sources)
    }

    /// One explicit normalization step (`steps_done < R_I`).
    pub fn normalization_step(&mut self) -> Result<(), NormalizeError> {
        let r = self.steps_done + 1;
        assert!(r <= self.r_i, "explicit step beyond R_I");
        let f_r = self
            .f_explicit
            .remove(&r)
            .unwrap_or_else(|| HomoPoly::zero(self.n, r + 2));
        let (chi, z_r) = solve_homological(&f_r, &self.omega, self.mode)?;
        let d_r = chi.deriv_weight();
        let log_d = match self.deriv_mode {
            DerivWeightMode::Sharp => LogBound::from_value_upper(d_r.hi()),
            DerivWeightMode::PoissonNorm => {
                LogBound::from_value_upper(dir_mul(f64::from(r + 2), chi.norm().hi(), Dir::Up))
            }
        };
        let log_f_r = f_r.log_norm_upper();
        let (z_sources, f_sources) = self.majorant_sources(r);

        // Explicit Lie-series contributions, truncated at class R_I.  The Z0
        // chain starts from L_chi Z0 = Z_r - f_r = -(removed part), which the
        // generating function satisfies by construction.
        if !chi.is_empty() {
            let mut contributions: BTreeMap<u32, HomoPoly> = BTreeMap::new();
            let mut push = |cls: u32, p: HomoPoly, acc: &mut BTreeMap<u32, HomoPoly>| {
                if p.is_empty() {
                    return;
                }
                match acc.get_mut(&cls) {
                    Some(e) => *e = e.add(&p),
                    None => {
                        acc.insert(cls, p);
                    }
                }
            };
            let chain = |start: &HomoPoly,
                         base_class: u32,
                         first_j: i64,
                         acc: &mut BTreeMap<u32, HomoPoly>,
                         push: &mut dyn FnMut(u32, HomoPoly, &mut BTreeMap<u32, HomoPoly>)| {
                let mut g = start.clone();
                let mut j = first_j;
                let mut cls = base_class;
                loop {
                    cls += r;
                    if cls > self.r_i {
                        break;
                    }
                    g = chi.poisson(&g).div_int(j);
                    if g.is_empty() {
                        break;
                    }
                    push(cls, g.clone(), acc);
                    j += 1;
                }
            };
            let (_, removed) = {
                let n = self.n;
                f_r.split(|k| self.mode.keeps(k, n))
            };
            // Z0 chain: class r entry is Z_r itself (handled below); the chain
            // contributes from class 2r on.
            chain(&removed.neg(), r, 2, &mut contributions, &mut push);
            // f_r chain.
            chain(&f_r, r, 1, &mut contributions, &mut push);
            // Z_m chains (explicit normal-form sources).
            for m in 1..r {
                let zm = self.z_explicit[m as usize].clone();
                if !zm.is_empty() {
                    chain(&zm, m, 1, &mut contributions, &mut push);
                }
            }
            // f_s chains for s > r.
            let classes: Vec<u32> = self.f_explicit.keys().copied().collect();
            for s in classes {
                let fs = self.f_explicit[&s].clone();
                if !fs.is_empty() {
                    chain(&fs, s, 1, &mut contributions, &mut push);
                }
            }
            for (cls, p) in contributions {
                match self.f_explicit.get_mut(&cls) {
                    Some(e) => *e = e.add(&p),
                    None => {
                        self.f_explicit.insert(cls, p);
                    }
                }
            }
        }

        majorant::iterate_majorants(
            &mut self.log_f,
            r,
            log_d,
            log_f_r,
            &z_sources,
            &f_sources,
            self.r_i.max(r) + 1,
            self.r_ii,
        );
        self.log_a = majorant::update_tail(self.log_a, r, log_d);
        self.z_explicit.push(z_r);
        self.chi_d_history.push((r, DerivWeight::Explicit(d_r)));
        self.steps_done = r;
        Ok(())
    }

    /// One estimate-only step (`R_I <= steps_done < R_II`): the class-`r`
    /// majorant is converted into a generating-function bound through the
    /// smallest divisor and everything proceeds on norm bounds alone.
    pub fn estimate_step(&mut self) -> Result<(), NormalizeError> {
        let r = self.steps_done + 1;
        if r <= self.r_i {
            return Err(NormalizeError::OutOfOrder { steps: self.steps_done });
        }
        if r > self.r_ii {
            return Err(NormalizeError::TargetBeyondHorizon { target: r, r_ii: self.r_ii });
        }
        let log_f_r = self
            .log_f
            .remove(&r)
            .unwrap_or_else(|| LogBound::zero(BoundKind::Upper));
        let log_d = if log_f_r.is_zero_sentinel() {
            LogBound::zero(BoundKind::Upper)
        } else {
            let alpha = self.alpha_cache.up_to(&self.omega, self.mode, r + 2, r)?;
            let inv_alpha = dir_div(1.0, alpha.lo(), Dir::Up);
            let log_g =
                dir_add(log_f_r.logval, log_plus(inv_alpha), Dir::Up);
            self.chi_d_history.push((r, DerivWeight::Estimated { log_g }));
            LogBound::upper(dir_add(log_plus(f64::from(r + 2)), log_g, Dir::Up))
        };
        if log_d.is_zero_sentinel() {
            self.chi_d_history.push((r, DerivWeight::Estimated { log_g: crate::rigor::LOG_ZERO_SENTINEL }));
        }
        let (z_sources, f_sources) = self.majorant_sources(r);
        majorant::iterate_majorants(
            &mut self.log_f,
            r,
            log_d,
            log_f_r,
            &z_sources,
            &f_sources,
            r + 1,
            self.r_ii,
        );
        self.log_a = majorant::update_tail(self.log_a, r, log_d);
        // The norm of the new normal-form term cannot exceed the class bound.
        self.log_z_tail.insert(r, log_f_r);
        self.steps_done = r;
        Ok(())
    }

    /// Run steps until `steps_done == target_r`, explicit through `R_I` and
    /// estimate-only beyond.
    pub fn normalize(&mut self, target_r: u32) -> Result<(), NormalizeError> {
        if target_r > self.r_ii {
            return Err(NormalizeError::TargetBeyondHorizon { target: target_r, r_ii: self.r_ii });
        }
        while self.steps_done < target_r {
            if self.steps_done < self.r_i {
                self.normalization_step()?;
            } else {
                self.estimate_step()?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigor::{iv_sqrt_down, iv_sqrt_up};

    fn omega_hh() -> Frequencies {
        let s2_half = Interval::new(iv_sqrt_down(2.0), iv_sqrt_up(2.0)).div_int(2);
        Frequencies::new(vec![Interval::ONE, s2_half.neg()])
    }

    #[test]
    fn smallest_divisor_golden_mean() {
        // omega = (1, -(sqrt(5)-1)/2), r = 1: the minimum over |k| <= 3 is
        // |2 w2 + w1| = ... = sqrt(5) - 2.
        let s5 = Interval::new(iv_sqrt_down(5.0), iv_sqrt_up(5.0));
        let w2 = s5.sub(&Interval::ONE).div_int(2).neg();
        let omega = Frequencies::new(vec![Interval::ONE, w2]);
        let alpha = smallest_divisor(&omega, 1, ResonanceMode::NonResonant).unwrap();
        let expected = 5.0f64.sqrt() - 2.0;
        assert!(alpha.contains(expected), "{alpha:?}");
        assert!(alpha.width() < 1e-12);
    }

    #[test]
    fn smallest_divisor_matches_brute_force() {
        let omega = omega_hh();
        for r in 1..=6u32 {
            let alpha = smallest_divisor(&omega, r, ResonanceMode::NonResonant).unwrap();
            // Brute force with plain floats over the same candidate set.
            let deg = (r + 2) as i64;
            let mut best = f64::INFINITY;
            for k1 in -deg..=deg {
                for k2 in -deg..=deg {
                    if k1 == 0 && k2 == 0 || k1.abs() + k2.abs() > deg {
                        continue;
                    }
                    let v = (k1 as f64 - k2 as f64 * std::f64::consts::SQRT_2 / 2.0).abs();
                    best = best.min(v);
                }
            }
            assert!(alpha.contains(best), "r={r}: {alpha:?} vs {best}");
        }
    }

    #[test]
    fn divisor_for_k21() {
        let omega = omega_hh();
        let v = omega.dot(&[2, 1]).abs();
        assert!(v.contains(2.0 - std::f64::consts::SQRT_2 / 2.0));
    }

    #[test]
    fn exact_resonance_detected() {
        let omega = Frequencies::new(vec![Interval::ONE, Interval::ONE.neg()]);
        let err = smallest_divisor(&omega, 1, ResonanceMode::NonResonant).unwrap_err();
        match err {
            NormalizeError::Resonance { .. } => {}
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn resonant_mode_keeps_dedicated_angle() {
        // With the resonant angle on index 1, k = (0, t) candidates are kept,
        // so omega = (1, -1) is no longer flagged through order 1 unless a
        // mixed k hits zero; (1,-1) has k=(1,1) -> 1 - 1 = 0 still resonant.
        let omega = Frequencies::new(vec![Interval::ONE, Interval::ONE.neg()]);
        let err =
            smallest_divisor(&omega, 1, ResonanceMode::SingleResonantAngle { angle: 1 });
        assert!(err.is_err());
        // Pure second-angle harmonics are excluded: omega = (1, 0)-like would
        // only fail through k with k1 != 0.
        let omega = Frequencies::new(vec![
            Interval::ONE,
            Interval::new(-1e-9, 1e-9),
        ]);
        let alpha =
            smallest_divisor(&omega, 1, ResonanceMode::SingleResonantAngle { angle: 1 });
        // k = (1, -2) etc. have |1 + small| >= 1 - eps: no resonance.
        assert!(alpha.is_ok());
    }

    #[test]
    fn homological_solution_kept_input() {
        // Input already in normal form: chi = 0, Z = input.
        let omega = omega_hh();
        let f = HomoPoly::monomial(
            2,
            MultiIndexPair::new(&[1, 1], &[1, 1]),
            ComplexInterval::point(0.5, 0.25),
        );
        let (chi, z) = solve_homological(&f, &omega, ResonanceMode::NonResonant).unwrap();
        assert!(chi.is_empty());
        assert_eq!(z, f);
    }
}
