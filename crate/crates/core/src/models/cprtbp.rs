//! Circular planar restricted three-body problem around the triangular
//! Lagrangian points: frequency enclosures, the Taylor expansion of the local
//! Hamiltonian, the symplectic reduction of its quadratic part, and the
//! analyticity-based seed for the geometric tail majorants.

use super::series::{
    cos_minus_one_coeffs, inv_one_plus, inv_one_plus_sq, inv_sqrt_coeffs, sin_coeffs, Series2,
};
use super::symplectic::{symplectic_diagonalize, Mat4, SymplecticError};
use super::ModelError;
use crate::normalform::{Frequencies, HamiltonianState, ResonanceMode};
use crate::polyring::{HomoPoly, MultiIndexPair};
use crate::rigor::{
    dir_add, dir_div, dir_mul, dir_sub, exp_lower, exp_upper, iv_sqrt_down, log_plus,
    ComplexInterval, Dir, Interval, LogBound,
};
use std::collections::BTreeMap;

/// Routh–Gascheau critical mass ratio `(9 - sqrt(69))/18` as an enclosure.
pub fn routh_critical_mu() -> Interval {
    Interval::point(9.0)
        .sub(&Interval::point(69.0).sqrt())
        .div_int(18)
}

/// Angular velocities at the triangular points:
/// `nu1 = sqrt((1 + sqrt(27 mu^2 - 27 mu + 1))/2)`,
/// `nu2 = -sqrt((1 - sqrt(...))/2)`.
pub fn cprtbp_frequencies(mu: &Interval) -> Result<(Interval, Interval), ModelError> {
    if mu.lo() <= 0.0 {
        return Err(ModelError::MassRatio("mu must be positive".into()));
    }
    let disc = Interval::point(27.0)
        .mul(&mu.mul(mu))
        .sub(&Interval::point(27.0).mul(mu))
        .add(&Interval::ONE);
    if disc.lo() <= 0.0 {
        return Err(ModelError::MassRatio(
            "mu at or above the Routh critical value: linearly unstable".into(),
        ));
    }
    let inner = disc.sqrt();
    let nu1 = Interval::ONE.add(&inner).div_int(2).sqrt();
    let one_minus = Interval::ONE.sub(&inner);
    if one_minus.lo() < 0.0 {
        return Err(ModelError::MassRatio("frequency radicand enclosure reaches below zero".into()));
    }
    let nu2 = one_minus.div_int(2).sqrt().neg();
    Ok((nu1, nu2))
}

/// Which triangular point the expansion is centered on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LagrangePoint {
    L4,
    L5,
}

/// The Hamiltonian split by momentum powers: `H = sum PX^a PY^b S_ab(X, Y)`.
struct MomentumGroups {
    groups: Vec<(u8, u8, Series2)>,
}

fn build_groups(mu: &Interval, point: LagrangePoint, degree: u32) -> MomentumGroups {
    let d = degree;
    let x = Series2::var_x(d);
    let y = Series2::var_y(d);
    let inv2 = x.compose_univariate(&inv_one_plus_sq(d));
    let inv1 = x.compose_univariate(&inv_one_plus(d));
    let cosym1 = y.compose_univariate(&cos_minus_one_coeffs(d));
    let siny = y.compose_univariate(&sin_coeffs(d));
    let half = Interval::point(0.5);
    let s3_half = Interval::point(3.0).sqrt().div_int(2);
    let sin_factor = match point {
        LagrangePoint::L4 => s3_half,
        LagrangePoint::L5 => s3_half.neg(),
    };
    // c = cos(Y -+ 2pi/3) = -cos(Y)/2 +- sqrt(3)/2 sin(Y).  Built through
    // cos(Y) - 1 so that c + 1/2 is exactly constant-free: the interval
    // products never see the cancellation, the series structure carries it.
    let c_half = cosym1.scale(&half.neg()).add(&siny.scale(&sin_factor));
    let c = c_half.add(&Series2::constant(d, half.neg()));
    let mut one_plus_x = Series2::constant(d, Interval::ONE);
    one_plus_x.insert((1, 0), Interval::ONE);
    let w = x
        .mul(&x)
        .add(&x)
        .add(&one_plus_x.mul(&c_half).scale(&Interval::point(2.0)));
    debug_assert!(w.min_degree().map_or(true, |m| m >= 1));
    let invsq = w.compose_univariate(&inv_sqrt_coeffs(d));

    let one_minus_mu = Interval::ONE.sub(mu);
    // (0,0): inv2/2 - mu (X+1) c - (1-mu)/(X+1) - mu/sqrt(u).
    let s00 = inv2
        .scale(&half)
        .add(&one_plus_x.mul(&c).scale(&mu.neg()))
        .add(&inv1.scale(&one_minus_mu.neg()))
        .add(&invsq.scale(&mu.neg()));
    // (0,1): inv2 - 1 (the -PY term merged in).
    let s01 = inv2.add(&Series2::constant(d, Interval::ONE.neg()));
    let s02 = inv2.scale(&half);
    let s20 = Series2::constant(d, half);
    MomentumGroups { groups: vec![(2, 0, s20), (0, 2, s02), (0, 1, s01), (0, 0, s00)] }
}

/// Quadratic part as the Hessian matrix `Q` with `H_2 = v^T Q v / 2` in the
/// order `(PX, PY, X, Y)`.
fn quadratic_matrix(groups: &MomentumGroups) -> Mat4 {
    let mut q = [[Interval::ZERO; 4]; 4];
    for (a, b, s) in &groups.groups {
        match (a, b) {
            (2, 0) => q[0][0] = s.coeff((0, 0)).mul_int(2),
            (0, 2) => q[1][1] = s.coeff((0, 0)).mul_int(2),
            (0, 1) => {
                q[1][2] = s.coeff((1, 0));
                q[2][1] = s.coeff((1, 0));
                q[1][3] = s.coeff((0, 1));
                q[3][1] = s.coeff((0, 1));
            }
            (0, 0) => {
                q[2][2] = s.coeff((2, 0)).mul_int(2);
                q[3][3] = s.coeff((0, 2)).mul_int(2);
                q[2][3] = s.coeff((1, 1));
                q[3][2] = s.coeff((1, 1));
            }
            _ => unreachable!("unexpected momentum group"),
        }
    }
    q
}

/// Complex linear forms of the four local variables after the symplectic
/// transform and the complexification `y_j = (xi_j + i eta_j)/sqrt2`,
/// `x_j = (i xi_j + eta_j)/sqrt2`.
fn linear_forms(c: &Mat4) -> [HomoPoly; 4] {
    let s2inv = Interval::ONE.div(&Interval::point(2.0).sqrt());
    let mut basis = Vec::new(); // y1, y2, x1, x2 as degree-1 polynomials
    for j in 0..2 {
        let mut zk = [0u8; 2];
        zk[j] = 1;
        let mut ck = [0u8; 2];
        ck[j] = 1;
        let xi = MultiIndexPair::new(&zk, &[0, 0]);
        let eta = MultiIndexPair::new(&[0, 0], &ck);
        // y_j
        let y = HomoPoly::monomial(2, xi, ComplexInterval::from_re(s2inv)).add(&HomoPoly::monomial(
            2,
            eta,
            ComplexInterval::new(Interval::ZERO, s2inv),
        ));
        basis.push(y);
    }
    for j in 0..2 {
        let mut zk = [0u8; 2];
        zk[j] = 1;
        let mut ck = [0u8; 2];
        ck[j] = 1;
        let xi = MultiIndexPair::new(&zk, &[0, 0]);
        let eta = MultiIndexPair::new(&[0, 0], &ck);
        let x = HomoPoly::monomial(2, xi, ComplexInterval::new(Interval::ZERO, s2inv)).add(
            &HomoPoly::monomial(2, eta, ComplexInterval::from_re(s2inv)),
        );
        basis.push(x);
    }
    let mut out: Vec<HomoPoly> = Vec::with_capacity(4);
    for i in 0..4 {
        let mut lf = HomoPoly::zero(2, 1);
        for (j, base) in basis.iter().enumerate() {
            if !(c[i][j].is_exact_zero()) {
                lf = lf.add(&base.scale(&c[i][j]));
            }
        }
        out.push(lf);
    }
    out.try_into().expect("four linear forms")
}

fn powers(p: &HomoPoly, max: u32) -> Vec<HomoPoly> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(HomoPoly::monomial(
        2,
        MultiIndexPair::new(&[0, 0], &[0, 0]),
        ComplexInterval::from_re(Interval::ONE),
    ));
    for k in 1..=max {
        let next = out[k as usize - 1].mul(p);
        out.push(next);
    }
    out
}

/// Analyticity-based seed `(log E, log a0)` for the geometric tail: on the
/// polydisk `|xi_j|, |eta_j| <= t` every local variable is bounded by a linear
/// function of `t`, and composing the absolute-coefficient majorants of the
/// elementary series yields a scalar majorant `M(t)` of every class norm:
/// `||f_s|| <= M(t)/t^{s+2}`.
fn tail_seed(c: &Mat4, mu: &Interval) -> Result<(LogBound, f64), ModelError> {
    // |v_i| <= sqrt(2) * sum_j |C_ij| * t
    let s2 = 2.0f64.sqrt() * (1.0 + 1e-15);
    let mut l = [0.0f64; 4];
    for i in 0..4 {
        let mut acc = 0.0;
        for j in 0..4 {
            acc = dir_add(acc, c[i][j].mag(), Dir::Up);
        }
        l[i] = dir_mul(acc, s2, Dir::Up);
    }
    let eval = |t: f64| -> Option<f64> {
        let px = dir_mul(l[0], t, Dir::Up);
        let py = dir_mul(l[1], t, Dir::Up);
        let x = dir_mul(l[2], t, Dir::Up);
        let yv = dir_mul(l[3], t, Dir::Up);
        if x >= 0.5 || yv >= 1.0 {
            return None;
        }
        // cosh/sinh majorants via exponentials.
        let ey = exp_upper(yv);
        let eyn = exp_lower(-yv);
        let cosh_m1 = dir_mul(0.5, dir_sub(dir_add(ey, eyn, Dir::Up), 2.0, Dir::Up).max(0.0), Dir::Up);
        let sinh = dir_mul(0.5, dir_sub(ey, eyn, Dir::Up), Dir::Up);
        let s3h = dir_div(crate::rigor::iv_sqrt_up(3.0), 2.0, Dir::Up);
        // g majorizes |c + 1/2| coefficientwise.
        let g = dir_add(dir_mul(0.5, cosh_m1, Dir::Up), dir_mul(s3h, sinh, Dir::Up), Dir::Up);
        let ch = dir_add(dir_mul(0.5, dir_add(cosh_m1, 2.0, Dir::Up), Dir::Up), dir_mul(s3h, sinh, Dir::Up), Dir::Up);
        // wmaj = x^2 + x + 2(1+x) g
        let wmaj = dir_add(
            dir_add(dir_mul(x, x, Dir::Up), x, Dir::Up),
            dir_mul(2.0, dir_mul(dir_add(1.0, x, Dir::Up), g, Dir::Up), Dir::Up),
            Dir::Up,
        );
        if wmaj >= 0.8 {
            return None;
        }
        let inv1 = dir_div(1.0, dir_sub(1.0, x, Dir::Down), Dir::Up);
        let inv2 = dir_mul(inv1, inv1, Dir::Up);
        let mu_up = mu.hi();
        let one_minus_mu = dir_sub(1.0, mu.lo(), Dir::Up);
        let inv_sqrt = dir_div(1.0, iv_sqrt_down(dir_sub(1.0, wmaj, Dir::Down)), Dir::Up);
        let mut m = dir_mul(0.5, dir_mul(px, px, Dir::Up), Dir::Up);
        let py1 = dir_add(py, 1.0, Dir::Up);
        m = dir_add(m, dir_mul(0.5, dir_mul(dir_mul(py1, py1, Dir::Up), inv2, Dir::Up), Dir::Up), Dir::Up);
        m = dir_add(m, py, Dir::Up);
        m = dir_add(m, dir_mul(mu_up, dir_mul(dir_add(1.0, x, Dir::Up), ch, Dir::Up), Dir::Up), Dir::Up);
        m = dir_add(m, dir_mul(one_minus_mu, inv1, Dir::Up), Dir::Up);
        m = dir_add(m, dir_mul(mu_up, inv_sqrt, Dir::Up), Dir::Up);
        Some(m)
    };
    // Take the largest feasible radius from a gentle grid.
    let l_max = l.iter().cloned().fold(0.0, f64::max).max(1e-9);
    let mut t = 0.45 / l_max;
    for _ in 0..60 {
        if let Some(e) = eval(t) {
            let log_e = LogBound::from_value_upper(e);
            let log_a = log_plus(dir_div(1.0, t, Dir::Up));
            return Ok((log_e, log_a));
        }
        t *= 0.8;
    }
    Err(ModelError::Analyticity("no feasible majorant radius found".into()))
}

/// Build the initial state for the triangular-point expansion: Taylor classes
/// to total degree `r_i + 2`, a verified symplectic reduction of the quadratic
/// part, and analyticity-based tail parameters.
pub fn cprtbp_hamiltonian(
    mu: &Interval,
    point: LagrangePoint,
    r_i: u32,
    r_ii: u32,
    mode: ResonanceMode,
) -> Result<HamiltonianState, ModelError> {
    let degree = r_i + 2;
    let (nu1, nu2) = cprtbp_frequencies(mu)?;
    let groups = build_groups(mu, point, degree);
    let q = quadratic_matrix(&groups);
    let diag = symplectic_diagonalize(&q, &[nu1, nu2])?;
    let lf = linear_forms(&diag.transform);
    // Power tables for the positional variables.
    let lx_pows = powers(&lf[2], degree);
    let ly_pows = powers(&lf[3], degree);
    let px_pows = powers(&lf[0], 2);
    let py_pows = powers(&lf[1], 2);

    let mut classes: BTreeMap<u32, HomoPoly> = BTreeMap::new();
    let mut quadratic = HomoPoly::zero(2, 2);
    let mut linear_check = HomoPoly::zero(2, 1);
    for (a, b, s) in &groups.groups {
        let base = px_pows[*a as usize].mul(&py_pows[*b as usize]);
        for (&(cx, cy), coeff) in &s.terms {
            let total = u32::from(*a) + u32::from(*b) + cx + cy;
            if total > degree {
                continue;
            }
            let coeff_c = ComplexInterval::from_re(*coeff);
            let term = base.mul(&lx_pows[cx as usize]).mul(&ly_pows[cy as usize]).scale_complex(&coeff_c);
            match total {
                0 => {} // energy offset, skipped
                1 => linear_check = linear_check.add(&term),
                2 => quadratic = quadratic.add(&term),
                d => {
                    let class = d - 2;
                    match classes.get_mut(&class) {
                        Some(e) => *e = e.add(&term),
                        None => {
                            classes.insert(class, term);
                        }
                    }
                }
            }
        }
    }
    // The expansion point is an equilibrium: the linear part must enclose zero.
    for (key, coeff) in linear_check.terms() {
        if !coeff.contains_zero() {
            return Err(ModelError::Expansion(format!(
                "linear term {key:?} does not enclose zero"
            )));
        }
    }
    // The reduced quadratic must be i nu_j on the action monomials and zero on
    // the rest; keep the enclosure structure by dropping verified-zero terms.
    let mut z0 = HomoPoly::zero(2, 2);
    for (key, coeff) in quadratic.terms() {
        if key.is_action_monomial() {
            let j = (0..2).find(|&j| key.z_pow[j] == 1).expect("degree-2 action monomial");
            let nu = if j == 0 { nu1 } else { nu2 };
            if !coeff.re.contains_zero() {
                return Err(ModelError::Expansion(
                    "action coefficient of the quadratic part has a real component".into(),
                ));
            }
            if coeff.im.lo() > nu.hi() || coeff.im.hi() < nu.lo() {
                return Err(ModelError::Expansion(format!(
                    "quadratic action coefficient {:?} does not match the frequency {:?}",
                    coeff.im, nu
                )));
            }
            z0 = z0.add(&HomoPoly::monomial(2, *key, *coeff));
        } else if !coeff.contains_zero() {
            return Err(ModelError::Expansion(format!(
                "cross term {key:?} of the reduced quadratic does not enclose zero"
            )));
        }
    }
    let (log_e, log_a) = tail_seed(&diag.transform, mu)?;
    let mut log_f_seed = BTreeMap::new();
    for s in (r_i + 1)..=r_ii {
        let lb = LogBound::upper(dir_add(
            log_e.logval,
            dir_mul(f64::from(s + 2), log_a, Dir::Up),
            Dir::Up,
        ));
        log_f_seed.insert(s, lb);
    }
    let omega = Frequencies::new(vec![nu1, nu2]);
    Ok(HamiltonianState::new(
        mode,
        omega,
        r_i,
        r_ii,
        z0,
        classes,
        log_f_seed,
        log_e,
        log_a,
    ))
}

impl From<SymplecticError> for ModelError {
    fn from(e: SymplecticError) -> Self {
        ModelError::Symplectic(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frequencies_limits() {
        // mu -> 0: nu1 -> 1, nu2 -> 0-.
        let mu = Interval::point(1e-12);
        let (nu1, nu2) = cprtbp_frequencies(&mu).unwrap();
        assert!(nu1.contains(1.0) || (nu1.hi() - 1.0).abs() < 1e-10);
        assert!(nu2.hi() <= 0.0 && nu2.lo() > -1e-5);
    }

    #[test]
    fn frequencies_jupiter() {
        let mu = Interval::point(9.54e-4);
        let (nu1, nu2) = cprtbp_frequencies(&mu).unwrap();
        assert!((nu1.mid() - 0.99676).abs() < 1e-4, "{nu1:?}");
        assert!((nu2.mid() + 0.08046).abs() < 1e-4, "{nu2:?}");
    }

    #[test]
    fn routh_rejected() {
        let routh = routh_critical_mu();
        let mu = Interval::point(routh.hi() * 1.0000001);
        assert!(cprtbp_frequencies(&mu).is_err());
        let mu = Interval::point(0.039);
        assert!(cprtbp_frequencies(&mu).is_err());
    }

    #[test]
    fn jupiter_expansion_small_degree() {
        let mu = Interval::outward(9.54e-4);
        let state = cprtbp_hamiltonian(&mu, LagrangePoint::L4, 4, 8, ResonanceMode::NonResonant)
            .expect("expansion succeeds");
        assert_eq!(state.z_explicit.len(), 1);
        assert!(state.f_explicit.contains_key(&1));
        // Cubic terms exist (the triangular point is a genuinely nonlinear
        // equilibrium).
        assert!(!state.f_explicit[&1].is_empty());
        assert!(state.log_a > 0.0 || state.log_a <= 0.0); // finite
    }
}
