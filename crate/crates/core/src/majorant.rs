//! The estimate engine: iterated norm majorants, geometric tails, remainder
//! and action-rate bounds, escape-time lower bounds, and the optimal-step
//! scan.
//!
//! All norm bookkeeping lives in the log domain (see [`LogBound`]): the
//! majorants grow roughly factorially with the normalization order and leave
//! the floating-point safe range long before the horizon `R_II`.

use crate::normalform::{Frequencies, HamiltonianState, NormalizeError};
use crate::rigor::{
    dir_add, dir_div, dir_mul, dir_sub, exp_upper, log_add_upper, log_minus, log_plus, BoundKind,
    Dir, Interval, LogBound,
};
use std::collections::BTreeMap;

/// Marker logval for an unbounded escape time (zero perturbation).
pub const LOG_UNBOUNDED: f64 = 1.0e4;

/// How the infinite geometric tail beyond `R_II` enters a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMode {
    /// Add the closed-form geometric series (requires `a_r * rho < 1`).
    Geometric,
    /// Treat `R_II` as the truncation horizon and omit the tail, as the
    /// reference production runs do once the common ratio approaches one.
    Truncated,
}

#[derive(Debug, thiserror::Error)]
pub enum MajorantError {
    #[error("geometric tail divergent at rho = {rho}: a_r * rho >= 1")]
    TailDivergent { rho: f64 },
    #[error("no stable regime at rho = {rho}: remainder bound never decreases")]
    NoStableRegime { rho: f64 },
    #[error("resonant action not confinable: Delta I exceeds rho^2")]
    NotConfinable,
    #[error("no admissible rho0 in (0, rho) for the requested beta")]
    NoRho0Solution,
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
}

/// Per-class norm bounds frozen at one normalization step; everything the
/// radius-dependent estimates need.
#[derive(Debug, Clone)]
pub struct ClassBounds {
    pub r: u32,
    pub r_i: u32,
    pub r_ii: u32,
    /// Log bounds of the full norms of explicit perturbative classes (`> r`).
    pub log_f_explicit: BTreeMap<u32, LogBound>,
    /// Iterated majorants for classes above the explicit range.
    pub log_f_table: BTreeMap<u32, LogBound>,
    /// Log bounds of the norms of explicit normal-form terms `Z_1..`.
    pub log_z_explicit: BTreeMap<u32, LogBound>,
    /// Normal-form majorants beyond `R_I`.
    pub log_z_table: BTreeMap<u32, LogBound>,
    pub log_e: LogBound,
    pub log_a: f64,
}

/// Proposition-style redefinitions of the majorant table at step `r`.
///
/// Every source class `s` feeds targets `s + j r` with the coefficient
/// `prod_{i=0}^{j-1}(s + i r + 2) / j!` and one factor of the derivative
/// weight per application.  The class being normalized enters through the
/// homological identity with its full norm; the quadratic part never appears
/// as a source.
#[allow(clippy::too_many_arguments)]
pub fn iterate_majorants(
    table: &mut BTreeMap<u32, LogBound>,
    r: u32,
    log_d: LogBound,
    class_r_norm: LogBound,
    z_sources: &[(u32, LogBound)],
    f_sources: &[(u32, LogBound)],
    target_min: u32,
    r_ii: u32,
) {
    if log_d.is_zero_sentinel() {
        return;
    }
    let mut updates: BTreeMap<u32, LogBound> = BTreeMap::new();
    let mut add_source = |s: u32, log_src: LogBound| {
        if log_src.is_zero_sentinel() {
            return;
        }
        let mut log_coef = 0.0_f64;
        let mut log_d_sum = 0.0_f64;
        let mut j = 0u32;
        loop {
            j += 1;
            let target = s + j * r;
            if target > r_ii {
                break;
            }
            let factor = f64::from(s + (j - 1) * r + 2);
            log_coef = dir_sub(
                dir_add(log_coef, log_plus(factor), Dir::Up),
                log_minus(f64::from(j)),
                Dir::Up,
            );
            log_d_sum = dir_add(log_d_sum, log_d.logval, Dir::Up);
            if target < target_min {
                continue;
            }
            let contribution = LogBound::upper(dir_add(
                dir_add(log_coef, log_d_sum, Dir::Up),
                log_src.logval,
                Dir::Up,
            ));
            let entry = updates.entry(target).or_insert_with(|| LogBound::zero(BoundKind::Upper));
            *entry = log_add_upper(*entry, contribution);
        }
    };
    add_source(r, class_r_norm);
    for &(s, lb) in z_sources {
        add_source(s, lb);
    }
    for &(s, lb) in f_sources {
        add_source(s, lb);
    }
    for (target, update) in updates {
        let entry = table.entry(target).or_insert_with(|| LogBound::zero(BoundKind::Upper));
        *entry = log_add_upper(*entry, update);
    }
}

/// Geometric-tail update: `log a_r = log((a_{r-1}^r + (r+1) D_r)^{1/r})`,
/// monotone non-decreasing by construction.
pub fn update_tail(log_a_prev: f64, r: u32, log_d: LogBound) -> f64 {
    if log_d.is_zero_sentinel() {
        return log_a_prev;
    }
    let lx = dir_mul(f64::from(r), log_a_prev, Dir::Up);
    let ly = dir_add(log_plus(f64::from(r + 1)), log_d.logval, Dir::Up);
    let combined = log_add_upper(LogBound::upper(lx), LogBound::upper(ly));
    dir_div(combined.logval, f64::from(r), Dir::Up)
}

/// `log(bound * rho^{degree})` with everything upper-rounded.
fn weighted(log_bound: LogBound, degree: u32, log_rho_up: f64) -> LogBound {
    if log_bound.is_zero_sentinel() {
        return LogBound::zero(BoundKind::Upper);
    }
    LogBound::upper(dir_add(
        log_bound.logval,
        dir_mul(f64::from(degree), log_rho_up, Dir::Up),
        Dir::Up,
    ))
}

/// Remainder pieces at radius `rho`: the truncated class sums and, when
/// convergent, the closed-form geometric tail.
#[derive(Debug, Clone)]
pub struct RemainderParts {
    pub truncated: LogBound,
    pub geometric_tail: Option<LogBound>,
    pub tail_divergent: bool,
}

impl RemainderParts {
    /// The bound under a given tail mode plus a divergence flag.
    pub fn value(&self, mode: TailMode) -> (LogBound, bool) {
        match mode {
            TailMode::Truncated => (self.truncated, false),
            TailMode::Geometric => match self.geometric_tail {
                Some(tail) => (log_add_upper(self.truncated, tail), false),
                None => (self.truncated, true),
            },
        }
    }
}

fn tail_pieces(b: &ClassBounds, rho: f64, weight_factor: bool) -> Option<LogBound> {
    if b.log_e.is_zero_sentinel() {
        // A zero scale factor annihilates the tail whatever the ratio does.
        return Some(LogBound::zero(BoundKind::Upper));
    }
    // log(a rho), upper.
    let la = dir_add(b.log_a, log_plus(rho), Dir::Up);
    if la >= 0.0 {
        return None;
    }
    // Lower bound of 1 - a rho.
    let upper_arho = exp_upper(la);
    let denom = dir_sub(1.0, upper_arho, Dir::Down);
    if denom <= 0.0 {
        return None;
    }
    let m = f64::from(b.r_ii + 3);
    // E (a rho)^{R_II+3} / (1 - a rho), with an extra (R_II+4)/(1-a rho)
    // factor when the terms carry the degree weight s+2.
    let mut logval = dir_add(dir_mul(m, la, Dir::Up), log_plus(dir_div(1.0, denom, Dir::Up)), Dir::Up);
    if weight_factor {
        logval = dir_add(
            logval,
            dir_add(log_plus(m + 1.0), log_plus(dir_div(1.0, denom, Dir::Up)), Dir::Up),
            Dir::Up,
        );
    }
    Some(LogBound::upper(dir_add(logval, b.log_e.logval, Dir::Up)))
}

fn class_sum(b: &ClassBounds, rho: f64, rate_weight: bool) -> LogBound {
    let log_rho = log_plus(rho);
    let mut acc = LogBound::zero(BoundKind::Upper);
    let mut add = |s: u32, lb: LogBound| {
        if s <= b.r || lb.is_zero_sentinel() {
            return;
        }
        let mut term = weighted(lb, s + 2, log_rho);
        if rate_weight {
            term = LogBound::upper(dir_add(term.logval, log_plus(f64::from(s + 2)), Dir::Up));
        }
        acc = log_add_upper(acc, term);
    };
    for (&s, &lb) in &b.log_f_explicit {
        add(s, lb);
    }
    for (&s, &lb) in &b.log_f_table {
        add(s, lb);
    }
    acc
}

/// Remainder sup-norm pieces on the ball of radius `rho`.
pub fn remainder_parts(b: &ClassBounds, rho: f64) -> RemainderParts {
    let truncated = class_sum(b, rho, false);
    let geometric_tail = tail_pieces(b, rho, false);
    let tail_divergent = geometric_tail.is_none();
    RemainderParts { truncated, geometric_tail, tail_divergent }
}

/// Full remainder bound including the geometric tail; errors when the tail is
/// divergent at this radius.
pub fn remainder_bound(b: &ClassBounds, rho: f64) -> Result<LogBound, MajorantError> {
    let parts = remainder_parts(b, rho);
    match parts.geometric_tail {
        Some(tail) => Ok(log_add_upper(parts.truncated, tail)),
        None => Err(MajorantError::TailDivergent { rho }),
    }
}

/// Action-rate pieces: the remainder sums with the extra `(s+2)` derivative
/// weight (the sharpened `{I_j, .}` estimate carries no factor 2).
pub fn action_rate_parts(b: &ClassBounds, rho: f64) -> RemainderParts {
    let truncated = class_sum(b, rho, true);
    let geometric_tail = tail_pieces(b, rho, true);
    let tail_divergent = geometric_tail.is_none();
    RemainderParts { truncated, geometric_tail, tail_divergent }
}

/// Upper bound of `max_j |dI_j/dt|` on the ball of radius `rho` under the
/// given tail mode.
pub fn action_rate_bound(
    b: &ClassBounds,
    rho: f64,
    mode: TailMode,
) -> Result<LogBound, MajorantError> {
    let parts = action_rate_parts(b, rho);
    let (value, divergent) = parts.value(mode);
    if divergent {
        return Err(MajorantError::TailDivergent { rho });
    }
    Ok(value)
}

/// Certified lower bound of the escape time from the ball of radius `rho`
/// for motions starting inside radius `rho0`: numerator rounded down,
/// denominator rounded up.
pub fn escape_time(
    b: &ClassBounds,
    rho: f64,
    rho0: f64,
    mode: TailMode,
) -> Result<LogBound, MajorantError> {
    assert!(0.0 < rho0 && rho0 < rho, "need 0 < rho0 < rho");
    let rho_sq = dir_mul(rho, rho, Dir::Down);
    let rho0_sq = dir_mul(rho0, rho0, Dir::Up);
    let gap = dir_sub(rho_sq, rho0_sq, Dir::Down);
    assert!(gap > 0.0, "rho0 too close to rho for a certified gap");
    let log_num = log_minus(gap);
    let rate = action_rate_bound(b, rho, mode)?;
    if rate.is_zero_sentinel() {
        return Ok(LogBound::lower(LOG_UNBOUNDED));
    }
    Ok(LogBound::lower(dir_sub(log_num, rate.logval, Dir::Down)))
}

/// The radius ratio optimizing the escape-time bound:
/// `rho0 = sqrt((r+1)/(r+3)) rho`, rounded down (a smaller starting ball only
/// weakens the claim).
pub fn rho0_optimal(rho: f64, r_opt: u32) -> f64 {
    assert!(r_opt >= 1);
    let frac = dir_div(f64::from(r_opt + 1), f64::from(r_opt + 3), Dir::Down);
    dir_mul(crate::rigor::iv_sqrt_down(frac), rho, Dir::Down)
}

/// One stability report row.
#[derive(Debug, Clone)]
pub struct StabilityResult {
    pub rho: f64,
    pub rho0: f64,
    pub r_opt: u32,
    /// Upper bound of the tail ratio `a_r` at the optimal step.
    pub a_r: f64,
    pub log_remainder: LogBound,
    pub log_action_rate: LogBound,
    pub log_t: LogBound,
    /// `(r, log |R^(r)|_rho)` for every step the scan evaluated.
    pub trace: Vec<(u32, f64)>,
    /// The geometric tail was divergent at the reported step.
    pub tail_divergent: bool,
    /// The scan hit the horizon `R_II` with the remainder still decreasing.
    pub hit_horizon: bool,
    /// Class bounds frozen at the optimal step, for follow-up estimates
    /// (resonant pipelines recompute the time with their own radius).
    pub bounds_at_opt: ClassBounds,
}

/// Scan driver shared by the single-radius and grid entry points: evolves the
/// state step by step and keeps, per radius, the best remainder seen so far
/// together with the bounds snapshot that produced it.
struct RadiusTracker {
    rho: f64,
    active: bool,
    trace: Vec<(u32, f64)>,
    best: Option<(u32, f64, ClassBounds, bool)>,
}

impl RadiusTracker {
    fn observe(&mut self, r: u32, bounds: &ClassBounds, scan_tail: TailMode) {
        let parts = remainder_parts(bounds, self.rho);
        let (value, _) = parts.value(scan_tail);
        let divergent = parts.tail_divergent;
        let effective = if scan_tail == TailMode::Geometric && divergent {
            // Treat a divergent tail as an unbounded remainder for the scan.
            LOG_UNBOUNDED
        } else {
            value.logval
        };
        self.trace.push((r, effective));
        match &self.best {
            Some((_, best_val, _, _)) if effective > *best_val => {
                // First increase: freeze the minimum.
                self.active = false;
            }
            Some((_, best_val, _, _)) if effective == *best_val => {
                // A plateau is not an increase; keep the earlier step.
            }
            _ => {
                self.best = Some((r, effective, bounds.clone(), divergent));
            }
        }
    }
}

fn finish_tracker(
    t: RadiusTracker,
    hit_horizon: bool,
    time_tail: TailMode,
) -> Result<StabilityResult, MajorantError> {
    let (r_opt, min_val, bounds, divergent) = match t.best {
        Some(best) if best.1 < LOG_UNBOUNDED => best,
        _ => return Err(MajorantError::NoStableRegime { rho: t.rho }),
    };
    let rho0 = rho0_optimal(t.rho, r_opt);
    let log_t = escape_time(&bounds, t.rho, rho0, time_tail)?;
    let rate = action_rate_bound(&bounds, t.rho, time_tail)?;
    let a_r = exp_upper(bounds.log_a);
    Ok(StabilityResult {
        rho: t.rho,
        rho0,
        r_opt,
        a_r,
        log_remainder: LogBound::upper(min_val),
        log_action_rate: rate,
        log_t,
        trace: t.trace,
        tail_divergent: divergent,
        hit_horizon,
        bounds_at_opt: bounds,
    })
}

/// Per-radius result of a grid scan.
pub type RadiusOutcome = Result<StabilityResult, MajorantError>;

/// Run the normalization radius by radius over a shared state evolution: the
/// state sequence is radius-independent, so one pass serves the whole grid.
/// Each radius stops at its own first remainder increase.
pub fn scan_grid(
    state: &mut HamiltonianState,
    rhos: &[f64],
    scan_tail: TailMode,
    time_tail: TailMode,
) -> Vec<RadiusOutcome> {
    let stepper = |s: &mut HamiltonianState| {
        if s.steps_done < s.r_i {
            s.normalization_step()
        } else {
            s.estimate_step()
        }
    };
    scan_grid_with(state, rhos, scan_tail, time_tail, stepper, &mut |_| Ok(()))
        .expect("hookless scan cannot fail")
}

/// [`scan_grid`] with a custom stepper and a per-step hook (checkpointing);
/// hook errors abort the whole scan.
pub fn scan_grid_with(
    state: &mut HamiltonianState,
    rhos: &[f64],
    scan_tail: TailMode,
    time_tail: TailMode,
    mut stepper: impl FnMut(&mut HamiltonianState) -> Result<(), NormalizeError>,
    after_step: &mut dyn FnMut(&HamiltonianState) -> Result<(), String>,
) -> Result<Vec<RadiusOutcome>, String> {
    let mut trackers: Vec<RadiusTracker> = rhos
        .iter()
        .map(|&rho| RadiusTracker { rho, active: true, trace: Vec::new(), best: None })
        .collect();
    let mut hit_horizon = false;
    let mut evolution_error: Option<NormalizeError> = None;
    while trackers.iter().any(|t| t.active) {
        if state.steps_done >= state.r_ii {
            hit_horizon = true;
            break;
        }
        if let Err(e) = stepper(state) {
            evolution_error = Some(e);
            break;
        }
        after_step(state)?;
        let bounds = state.class_bounds();
        for t in trackers.iter_mut().filter(|t| t.active) {
            t.observe(state.steps_done, &bounds, scan_tail);
        }
    }
    Ok(trackers
        .into_iter()
        .map(|t| {
            if t.active {
                // A radius still scanning when the evolution died cannot
                // report a certified optimum.
                if let Some(e) = &evolution_error {
                    return Err(MajorantError::Normalize(clone_normalize_error(e)));
                }
            }
            let horizon = t.active && hit_horizon;
            finish_tracker(t, horizon, time_tail)
        })
        .collect())
}

fn clone_normalize_error(e: &NormalizeError) -> NormalizeError {
    match e {
        NormalizeError::Resonance { r, k } => NormalizeError::Resonance { r: *r, k: k.clone() },
        NormalizeError::TargetBeyondHorizon { target, r_ii } => {
            NormalizeError::TargetBeyondHorizon { target: *target, r_ii: *r_ii }
        }
        NormalizeError::OutOfOrder { steps } => NormalizeError::OutOfOrder { steps: *steps },
    }
}

/// Normalize step by step, evaluating the remainder after each step, stopping
/// at the first increase; returns the full report row at the optimal step.
pub fn optimal_scan(
    state: &mut HamiltonianState,
    rho: f64,
    scan_tail: TailMode,
    time_tail: TailMode,
) -> Result<StabilityResult, MajorantError> {
    scan_grid(state, &[rho], scan_tail, time_tail).pop().expect("one radius in, one result out")
}

/// The starting radius for a resonant run, from the balance parameter `beta`:
/// the unique solution of `beta rho^2 = rho^2 + nu_1 (rho^2 - rho0^2)/nu_m`
/// in `(0, rho)`, rounded down.
pub fn resonant_rho0(
    rho: f64,
    beta: f64,
    nu: &Frequencies,
    m: usize,
) -> Result<f64, MajorantError> {
    assert!((0.0..1.0).contains(&beta) && beta > 0.0, "beta must lie in (0, 1)");
    let nu1 = &nu.omega[0];
    let num = &nu.omega[m];
    // Opposite signs required: the ratio nu_m / nu_1 must be negative.
    let ratio = num.div(nu1);
    if ratio.hi() >= 0.0 {
        return Err(MajorantError::NoRho0Solution);
    }
    let one_minus_beta = dir_sub(1.0, beta, Dir::Up);
    // factor = 1 + (1-beta) nu_m/nu_1, taken from below.
    let factor_lo = dir_add(1.0, dir_mul(one_minus_beta, ratio.lo(), Dir::Down), Dir::Down);
    if factor_lo <= 0.0 {
        return Err(MajorantError::NoRho0Solution);
    }
    let rho_sq = dir_mul(rho, rho, Dir::Down);
    let rho0 = crate::rigor::iv_sqrt_down(dir_mul(rho_sq, factor_lo, Dir::Down));
    if rho0 <= 0.0 || rho0 >= rho {
        return Err(MajorantError::NoRho0Solution);
    }
    Ok(rho0)
}

/// Bound on the excursion of the resonant action from energy conservation:
/// `Delta I_m <= [sum_{j!=m} |nu_j| (rho^2 - rho0^2) + 2 (sup|Zbar_1| + |R|)] / |nu_m|`,
/// where `Zbar_1` collects every normal-form term beyond the linear one.
/// Returns the bound and `(rho*_m)^2 = rho^2 - Delta I_m`, rounded down.
pub fn resonant_excursion(
    b: &ClassBounds,
    nu: &Frequencies,
    m: usize,
    rho: f64,
    rho0: f64,
) -> Result<(LogBound, f64), MajorantError> {
    // Non-resonant action drift over the confinement window.
    let gap = dir_sub(dir_mul(rho, rho, Dir::Up), dir_mul(rho0, rho0, Dir::Down), Dir::Up);
    let mut nu_sum = 0.0;
    for (j, w) in nu.omega.iter().enumerate() {
        if j != m {
            nu_sum = dir_add(nu_sum, w.mag(), Dir::Up);
        }
    }
    let drift = dir_mul(nu_sum, gap, Dir::Up);
    // sup |Zbar_1| on the ball: explicit normal-form norms plus tail majorants.
    let log_rho = log_plus(rho);
    let mut z_sup = LogBound::zero(BoundKind::Upper);
    for (&s, &lb) in b.log_z_explicit.iter().chain(b.log_z_table.iter()) {
        if s >= 1 && !lb.is_zero_sentinel() {
            z_sup = log_add_upper(z_sup, weighted(lb, s + 2, log_rho));
        }
    }
    let remainder = remainder_bound(b, rho)?;
    let modulation = log_add_upper(z_sup, remainder);
    let modulation_linear =
        if modulation.is_zero_sentinel() { 0.0 } else { exp_upper(modulation.logval.min(350.0)) };
    let numerator = dir_add(drift, dir_mul(2.0, modulation_linear, Dir::Up), Dir::Up);
    let nu_m_low = nu.omega[m].mig();
    assert!(nu_m_low > 0.0, "resonant frequency enclosure touches zero");
    let delta = dir_div(numerator, nu_m_low, Dir::Up);
    let rho_star_sq = dir_sub(dir_mul(rho, rho, Dir::Down), delta, Dir::Down);
    if rho_star_sq <= 0.0 {
        return Err(MajorantError::NotConfinable);
    }
    Ok((LogBound::from_value_upper(delta), rho_star_sq))
}

/// Linear-regression R^2 of `log10 T` against `1/sqrt(rho)`; the diagnostic for
/// the exponential-stability trend.
pub fn trend_r_squared(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for &(x, y) in points {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
        syy += (y - mean_y) * (y - mean_y);
    }
    if sxx == 0.0 || syy == 0.0 {
        return 1.0;
    }
    (sxy * sxy) / (sxx * syy)
}

/// Enclosure of `ln 10` for log-base conversions.
pub fn ln10() -> Interval {
    Interval::outward(std::f64::consts::LN_10)
}

/// Convert a natural-log bound to base 10, preserving its one-sided direction.
pub fn log10_of(bound: LogBound) -> f64 {
    let l10 = ln10();
    match bound.kind {
        BoundKind::Upper => {
            if bound.logval >= 0.0 {
                dir_div(bound.logval, l10.lo(), Dir::Up)
            } else {
                dir_div(bound.logval, l10.hi(), Dir::Up)
            }
        }
        BoundKind::Lower => {
            if bound.logval >= 0.0 {
                dir_div(bound.logval, l10.hi(), Dir::Down)
            } else {
                dir_div(bound.logval, l10.lo(), Dir::Down)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigor::LOG_ZERO_SENTINEL;

    fn empty_bounds(r: u32, r_i: u32, r_ii: u32, log_a: f64) -> ClassBounds {
        ClassBounds {
            r,
            r_i,
            r_ii,
            log_f_explicit: BTreeMap::new(),
            log_f_table: BTreeMap::new(),
            log_z_explicit: BTreeMap::new(),
            log_z_table: BTreeMap::new(),
            log_e: LogBound::upper(0.0),
            log_a,
        }
    }

    #[test]
    fn zero_weight_is_identity() {
        let mut table = BTreeMap::new();
        table.insert(4u32, LogBound::upper(2.0));
        let before = table.clone();
        iterate_majorants(
            &mut table,
            1,
            LogBound::zero(BoundKind::Upper),
            LogBound::upper(1.0),
            &[],
            &[],
            3,
            5,
        );
        assert_eq!(table, before);
        assert_eq!(update_tail(1.5, 3, LogBound::zero(BoundKind::Upper)), 1.5);
    }

    #[test]
    fn single_source_single_step() {
        // Only class s finite, one j = 1 contribution:
        // logF_{s+r} = log(s+2) + logD + logF_s up to rounding.
        let mut table = BTreeMap::new();
        let log_d = LogBound::upper(0.7);
        let log_f3 = LogBound::upper(2.0);
        iterate_majorants(&mut table, 2, log_d, LogBound::zero(BoundKind::Upper), &[], &[(3, log_f3)], 4, 5);
        let got = table[&5].logval;
        let expected = (5.0f64).ln() + 0.7 + 2.0;
        assert!((got - expected).abs() < 1e-12, "{got} vs {expected}");
    }

    #[test]
    fn tail_monotone() {
        let mut log_a = 0.44;
        for r in 1..=20 {
            let next = update_tail(log_a, r, LogBound::upper(1.0 + f64::from(r)));
            assert!(next >= log_a);
            log_a = next;
        }
    }

    #[test]
    fn remainder_zero_state_is_sentinel() {
        let b = empty_bounds(1, 2, 5, LOG_ZERO_SENTINEL - 1.0);
        // With no classes and a sentinel-scale log_a, both pieces vanish.
        let parts = remainder_parts(&b, 1e-4);
        assert!(parts.truncated.is_zero_sentinel());
    }

    #[test]
    fn escape_time_limit_at_rho0_to_rho() {
        let mut b = empty_bounds(3, 3, 5, 0.0);
        b.log_f_table.insert(4, LogBound::upper(9.0));
        b.log_f_table.insert(5, LogBound::upper(13.0));
        let rho = 1e-3;
        let t_far = escape_time(&b, rho, 0.5e-3, TailMode::Truncated).unwrap();
        let t_near = escape_time(&b, rho, 0.999e-3, TailMode::Truncated).unwrap();
        assert!(t_far.logval > t_near.logval);
    }

    #[test]
    fn rho0_optimal_values() {
        let r = rho0_optimal(1e-4, 3);
        assert!((r - 8.165e-5).abs() < 1e-8);
        // r_opt -> infinity pushes rho0 -> rho.
        let near = rho0_optimal(1.0, 100000);
        assert!(near > 0.99998 && near < 1.0);
        let row1 = rho0_optimal(1.00e-3, 232);
        assert!((row1 - 9.96e-4).abs() < 5e-7, "{row1}");
    }

    #[test]
    fn resonant_rho0_algebra() {
        // nu1 = 1, nu2 = -0.5, beta = 0.9, rho^2 = 1 -> rho0^2 = 0.95.
        let nu = Frequencies::new(vec![Interval::ONE, Interval::point(-0.5)]);
        let rho0 = resonant_rho0(1.0, 0.9, &nu, 1).unwrap();
        assert!((rho0 * rho0 - 0.95).abs() < 1e-12, "{}", rho0 * rho0);
        // beta -> 1 pushes rho0 -> rho.
        let near = resonant_rho0(1.0, 0.999999, &nu, 1).unwrap();
        assert!(near > 0.999_999 * 1.0f64 && near < 1.0);
    }

    #[test]
    fn resonant_excursion_linear_dominance() {
        // No normal form beyond linear, no remainder: Delta I = nu1 gap / |nu2|.
        let nu = Frequencies::new(vec![Interval::ONE, Interval::point(-0.5)]);
        let b = empty_bounds(3, 3, 5, LOG_ZERO_SENTINEL - 1.0);
        let mut b = b;
        b.log_e = LogBound::zero(BoundKind::Upper);
        let rho = 1e-2;
        let rho0 = 0.9e-2;
        let (delta, rho_star_sq) = resonant_excursion(&b, &nu, 1, rho, rho0).unwrap();
        let gap = rho * rho - rho0 * rho0;
        let expected = 1.0 * gap / 0.5;
        let got = exp_upper(delta.logval);
        assert!((got - expected).abs() / expected < 1e-9, "{got} vs {expected}");
        assert!((rho_star_sq - (rho * rho - expected)).abs() < 1e-12);
    }

    #[test]
    fn trend_fit_perfect_line() {
        let pts: Vec<(f64, f64)> = (1..10).map(|i| (i as f64, 3.0 * i as f64 + 1.0)).collect();
        assert!((trend_r_squared(&pts) - 1.0).abs() < 1e-12);
    }
}
