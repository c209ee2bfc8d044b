//! Model ingestion: initial [`HamiltonianState`]s for the Hénon–Heiles
//! oscillator and the circular planar restricted three-body problem.

pub mod cprtbp;
pub mod series;
pub mod symplectic;

pub use cprtbp::{cprtbp_frequencies, cprtbp_hamiltonian, routh_critical_mu, LagrangePoint};

use crate::normalform::{Frequencies, HamiltonianState, ResonanceMode};
use crate::polyring::{HomoPoly, MultiIndexPair};
use crate::rigor::{dir_div, ComplexInterval, Dir, Interval, LogBound};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum ModelError {
    #[error("mass ratio rejected: {0}")]
    MassRatio(String),
    #[error("symplectic reduction failed: {0}")]
    Symplectic(String),
    #[error("expansion inconsistency: {0}")]
    Expansion(String),
    #[error("analyticity bound failed: {0}")]
    Analyticity(String),
}

/// Which model a run builds.
#[derive(Debug, Clone)]
pub enum ModelSpec {
    HenonHeiles { omega1: Interval, omega2: Interval },
    Cprtbp { mu: Interval, point: LagrangePoint },
}

impl ModelSpec {
    pub fn build(
        &self,
        mode: ResonanceMode,
        r_i: u32,
        r_ii: u32,
    ) -> Result<HamiltonianState, ModelError> {
        match self {
            ModelSpec::HenonHeiles { omega1, omega2 } => {
                let omega = Frequencies::new(vec![*omega1, *omega2]);
                Ok(henon_heiles(&omega, r_i, r_ii, mode))
            }
            ModelSpec::Cprtbp { mu, point } => cprtbp_hamiltonian(mu, *point, r_i, r_ii, mode),
        }
    }
}

/// The quadratic part `Z0 = sum_j i w_j (-i z_j) conj(z_j)`.
pub fn quadratic_part(omega: &Frequencies) -> HomoPoly {
    let n = omega.n();
    let mut z0 = HomoPoly::zero(n, 2);
    for (j, w) in omega.omega.iter().enumerate() {
        let mut zk = vec![0u8; n];
        zk[j] = 1;
        let key = MultiIndexPair::new(&zk, &zk);
        z0 = z0.add(&HomoPoly::monomial(n, key, ComplexInterval::new(Interval::ZERO, *w)));
    }
    z0
}

/// Degree-1 polynomials for the real canonical variables under
/// `z_j = -sqrt(I_j) e^{-i phi_j}`: `x_j = (i xi_j + eta_j)/sqrt2`,
/// `y_j = (xi_j + i eta_j)/sqrt2` with `xi_j = -i z_j`, `eta_j = conj(z_j)`.
pub fn complexified_position(n: usize, j: usize) -> HomoPoly {
    let s2inv = Interval::ONE.div(&Interval::point(2.0).sqrt());
    let mut zk = vec![0u8; n];
    zk[j] = 1;
    let mut ck = vec![0u8; n];
    ck[j] = 1;
    let zeros = vec![0u8; n];
    HomoPoly::monomial(
        n,
        MultiIndexPair::new(&zk, &zeros),
        ComplexInterval::new(Interval::ZERO, s2inv),
    )
    .add(&HomoPoly::monomial(
        n,
        MultiIndexPair::new(&zeros, &ck),
        ComplexInterval::from_re(s2inv),
    ))
}

/// Initial state for the Hénon–Heiles model: the quadratic part plus the
/// complexified cubic `x1^2 x2 - x2^3/3`; the tail seed records the relative
/// size of the cubic (`log E = 0`, `log a0 = log||f1||/3`).
pub fn henon_heiles(
    omega: &Frequencies,
    r_i: u32,
    r_ii: u32,
    mode: ResonanceMode,
) -> HamiltonianState {
    assert_eq!(omega.n(), 2, "the cubic model has two degrees of freedom");
    let z0 = quadratic_part(omega);
    let x1 = complexified_position(2, 0);
    let x2 = complexified_position(2, 1);
    let f1 = x1
        .mul(&x1)
        .mul(&x2)
        .add(&x2.mul(&x2).mul(&x2).div_int(-3));
    let log_a = dir_div(f1.log_norm_upper().logval, 3.0, Dir::Up);
    let mut classes = BTreeMap::new();
    classes.insert(1, f1);
    HamiltonianState::new(
        mode,
        omega.clone(),
        r_i,
        r_ii,
        z0,
        classes,
        BTreeMap::new(),
        LogBound::upper(0.0),
        log_a,
    )
}

/// Mass ratios of the studied primary pairs.
pub mod presets {
    use crate::rigor::Interval;

    pub const MU_JUPITER: f64 = 9.54e-4;
    pub const MU_URANUS: f64 = 4.36e-5;
    pub const MU_MARS: f64 = 3.21e-7;
    pub const MU_JANUS: f64 = 3.36e-9;

    /// Orbital periods of the smaller primary in years, for the expected
    /// lifetime normalization.
    pub const PERIOD_JUPITER_YR: f64 = 11.862;
    pub const PERIOD_URANUS_YR: f64 = 84.011;
    pub const PERIOD_MARS_YR: f64 = 1.8808;
    pub const PERIOD_JANUS_YR: f64 = 0.0019013;

    pub fn mu_by_name(name: &str) -> Option<Interval> {
        let v = match name {
            "jupiter" => MU_JUPITER,
            "uranus" => MU_URANUS,
            "mars" => MU_MARS,
            "janus" => MU_JANUS,
            _ => return None,
        };
        Some(Interval::outward(v))
    }

    pub fn period_by_name(name: &str) -> Option<f64> {
        Some(match name {
            "jupiter" => PERIOD_JUPITER_YR,
            "uranus" => PERIOD_URANUS_YR,
            "mars" => PERIOD_MARS_YR,
            "janus" => PERIOD_JANUS_YR,
            _ => return None,
        })
    }

    /// Expected lifetime `(6 Gyr) nu1 / (2 pi)` in model revolutions:
    /// `6e9 * nu1 / period_years`.
    pub fn expected_lifetime(nu1: f64, period_years: f64) -> f64 {
        6.0e9 * nu1 / period_years
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigor::{iv_sqrt_down, iv_sqrt_up};

    fn omega_app_b() -> Frequencies {
        let s2_half = Interval::new(iv_sqrt_down(2.0), iv_sqrt_up(2.0)).div_int(2);
        Frequencies::new(vec![Interval::ONE, s2_half.neg()])
    }

    #[test]
    fn cubic_coefficients_match_reference() {
        let state = henon_heiles(&omega_app_b(), 2, 5, ResonanceMode::NonResonant);
        let f1 = &state.f_explicit[&1];
        assert_eq!(f1.len(), 10, "the complexified cubic has ten monomials");
        // coefficient of (-i z1)^2 (-i z2): -i 0.353553390593273731
        let c = f1.coeff(&MultiIndexPair::new(&[2, 1], &[0, 0])).unwrap();
        assert!(c.re.contains_zero());
        assert!(c.im.contains(-0.35355339059327373));
        // coefficient of conj(z2)^3: -0.117851130197757920
        let c = f1.coeff(&MultiIndexPair::new(&[0, 0], &[0, 3])).unwrap();
        assert!(c.re.contains(-0.11785113019775792));
        assert!(c.im.contains_zero());
        // norm encloses 8 sqrt(2)/3
        let n = f1.norm();
        assert!(n.contains(8.0 * std::f64::consts::SQRT_2 / 3.0));
        // tail seed
        assert!(state.log_a <= 0.4424677 && state.log_a >= 0.4424675, "{}", state.log_a);
        assert_eq!(state.log_e.logval, 0.0);
    }

    #[test]
    fn complexification_round_trip() {
        // Substituting z_j = -sqrt(I_j) e^{-i phi_j} back, the complexified
        // Hamiltonian reproduces the real one at sampled points.
        let omega = omega_app_b();
        let state = henon_heiles(&omega, 2, 5, ResonanceMode::NonResonant);
        let f1 = &state.f_explicit[&1];
        let samples = [(0.04, 0.09, 0.3, -1.2), (0.002, 0.013, 2.0, 0.7)];
        for &(i1, i2, p1, p2) in &samples {
            let z1 = num_complex(i1, p1);
            let z2 = num_complex(i2, p2);
            // xi = -i z, eta = conj z
            let xi = [(z1.1, -z1.0), (z2.1, -z2.0)];
            let eta = [(z1.0, -z1.1), (z2.0, -z2.1)];
            let mut acc = (0.0f64, 0.0f64);
            for (key, coeff) in f1.terms() {
                let mut term = (coeff.re.mid(), coeff.im.mid());
                for j in 0..2 {
                    for _ in 0..key.z_pow[j] {
                        term = cmul(term, xi[j]);
                    }
                    for _ in 0..key.conj_pow[j] {
                        term = cmul(term, eta[j]);
                    }
                }
                acc = (acc.0 + term.0, acc.1 + term.1);
            }
            // Real expected value via x_j = -sqrt(2 I_j) cos(phi_j).
            let x1 = -(2.0 * i1).sqrt() * p1.cos();
            let x2 = -(2.0 * i2).sqrt() * p2.cos();
            let expected = x1 * x1 * x2 - x2 * x2 * x2 / 3.0;
            assert!((acc.0 - expected).abs() < 1e-12, "{} vs {}", acc.0, expected);
            assert!(acc.1.abs() < 1e-12, "imaginary residue {}", acc.1);
        }
    }

    fn num_complex(action: f64, phi: f64) -> (f64, f64) {
        // z = -sqrt(I) e^{-i phi}
        let r = action.sqrt();
        (-r * phi.cos(), r * phi.sin())
    }

    fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
        (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
    }
}
