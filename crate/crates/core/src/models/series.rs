//! Truncated bivariate power series with interval coefficients, used to
//! Taylor-expand the restricted-problem Hamiltonian in the local positional
//! variables before the momenta and the linear change of coordinates enter.

use crate::rigor::{Interval, LOG_ZERO_SENTINEL};
use std::collections::BTreeMap;

/// Real series in two variables truncated at total degree `max_degree`.
#[derive(Debug, Clone)]
pub struct Series2 {
    pub max_degree: u32,
    pub terms: BTreeMap<(u32, u32), Interval>,
}

impl Series2 {
    pub fn zero(max_degree: u32) -> Self {
        Series2 { max_degree, terms: BTreeMap::new() }
    }

    pub fn constant(max_degree: u32, c: Interval) -> Self {
        let mut s = Self::zero(max_degree);
        s.insert((0, 0), c);
        s
    }

    /// The first variable as a series.
    pub fn var_x(max_degree: u32) -> Self {
        let mut s = Self::zero(max_degree);
        s.insert((1, 0), Interval::ONE);
        s
    }

    /// The second variable as a series.
    pub fn var_y(max_degree: u32) -> Self {
        let mut s = Self::zero(max_degree);
        s.insert((0, 1), Interval::ONE);
        s
    }

    pub fn insert(&mut self, key: (u32, u32), c: Interval) {
        if key.0 + key.1 > self.max_degree || c.is_exact_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_exact_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn coeff(&self, key: (u32, u32)) -> Interval {
        self.terms.get(&key).copied().unwrap_or(Interval::ZERO)
    }

    pub fn add(&self, o: &Series2) -> Series2 {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert(*k, *c);
        }
        out
    }

    pub fn sub(&self, o: &Series2) -> Series2 {
        self.add(&o.scale(&Interval::ONE.neg()))
    }

    pub fn scale(&self, s: &Interval) -> Series2 {
        let mut out = Series2::zero(self.max_degree);
        for (k, c) in &self.terms {
            out.insert(*k, c.mul(s));
        }
        out
    }

    pub fn mul(&self, o: &Series2) -> Series2 {
        let mut out = Series2::zero(self.max_degree);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                let key = (ka.0 + kb.0, ka.1 + kb.1);
                if key.0 + key.1 > self.max_degree {
                    continue;
                }
                out.insert(key, ca.mul(cb));
            }
        }
        out
    }

    /// Lowest total degree with a stored coefficient.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0 + k.1).min()
    }

    /// `sum_k coeffs[k] * self^k`, truncated; requires a zero constant term so
    /// the composition stays polynomial at every truncation order.
    pub fn compose_univariate(&self, coeffs: &[Interval]) -> Series2 {
        assert!(
            self.min_degree().map_or(true, |d| d >= 1),
            "composition argument must have zero constant term"
        );
        let mut out = Series2::zero(self.max_degree);
        if let Some(c0) = coeffs.first() {
            out.insert((0, 0), *c0);
        }
        let mut power = Series2::constant(self.max_degree, Interval::ONE);
        for ck in coeffs.iter().skip(1) {
            power = power.mul(self);
            if power.terms.is_empty() {
                break;
            }
            out = out.add(&power.scale(ck));
        }
        out
    }

    /// Largest absolute-value log of any coefficient (diagnostic only).
    pub fn log_mag(&self) -> f64 {
        self.terms
            .values()
            .map(|c| c.mag().abs().ln())
            .fold(LOG_ZERO_SENTINEL, f64::max)
    }
}

/// Coefficients of `1/(1+x)` up to degree `d`: `(-1)^k` (exact).
pub fn inv_one_plus(d: u32) -> Vec<Interval> {
    (0..=d).map(|k| Interval::point(if k % 2 == 0 { 1.0 } else { -1.0 })).collect()
}

/// Coefficients of `1/(1+x)^2`: `(-1)^k (k+1)` (exact).
pub fn inv_one_plus_sq(d: u32) -> Vec<Interval> {
    (0..=d)
        .map(|k| {
            let v = f64::from(k + 1);
            Interval::point(if k % 2 == 0 { v } else { -v })
        })
        .collect()
}

/// Coefficients of `cos x`: alternating inverse factorials.
pub fn cos_coeffs(d: u32) -> Vec<Interval> {
    inv_factorial_signs(d, true)
}

/// Coefficients of `cos x - 1`: exactly constant-free, so compositions built
/// on it keep an exactly-zero constant term.
pub fn cos_minus_one_coeffs(d: u32) -> Vec<Interval> {
    let mut c = inv_factorial_signs(d, true);
    if !c.is_empty() {
        c[0] = Interval::ZERO;
    }
    c
}

/// Coefficients of `sin x`.
pub fn sin_coeffs(d: u32) -> Vec<Interval> {
    inv_factorial_signs(d, false)
}

fn inv_factorial_signs(d: u32, even: bool) -> Vec<Interval> {
    let mut out = Vec::with_capacity(d as usize + 1);
    let mut factorial = Interval::ONE;
    for k in 0..=d {
        if k > 0 {
            factorial = factorial.mul_int(i64::from(k));
        }
        let active = (k % 2 == 0) == even;
        if !active {
            out.push(Interval::ZERO);
            continue;
        }
        let base = Interval::ONE.div(&factorial);
        let sign_flip = (k / 2) % 2 == 1;
        out.push(if sign_flip { base.neg() } else { base });
    }
    out
}

/// Coefficients of `(1+x)^(-1/2)`: `b_0 = 1`, `b_k = -b_{k-1} (2k-1)/(2k)`.
pub fn inv_sqrt_coeffs(d: u32) -> Vec<Interval> {
    let mut out = Vec::with_capacity(d as usize + 1);
    let mut b = Interval::ONE;
    out.push(b);
    for k in 1..=d {
        b = b.mul_int(-(2 * i64::from(k) - 1)).div_int(2 * i64::from(k));
        out.push(b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_times_one_plus_x() {
        let d = 8;
        let x = Series2::var_x(d);
        let inv = x.compose_univariate(&inv_one_plus(d));
        let mut one_plus = Series2::constant(d, Interval::ONE);
        one_plus.insert((1, 0), Interval::ONE);
        let prod = inv.mul(&one_plus);
        // 1/(1+x) * (1+x) = 1 up to the truncation-order term.
        assert!(prod.coeff((0, 0)).contains(1.0));
        for k in 1..d {
            assert!(prod.coeff((k, 0)).contains_zero(), "degree {k}");
        }
    }

    #[test]
    fn cos_squared_plus_sin_squared() {
        let d = 9;
        let y = Series2::var_y(d);
        let c = y.compose_univariate(&cos_coeffs(d));
        let s = y.compose_univariate(&sin_coeffs(d));
        let unit = c.mul(&c).add(&s.mul(&s));
        assert!(unit.coeff((0, 0)).contains(1.0));
        for k in 1..=d {
            assert!(unit.coeff((0, k)).contains_zero(), "degree {k}");
        }
    }

    #[test]
    fn inv_sqrt_square_is_inverse() {
        let d = 8;
        let x = Series2::var_x(d);
        let r = x.compose_univariate(&inv_sqrt_coeffs(d));
        let sq = r.mul(&r);
        let mut one_plus = Series2::constant(d, Interval::ONE);
        one_plus.insert((1, 0), Interval::ONE);
        let prod = sq.mul(&one_plus);
        assert!(prod.coeff((0, 0)).contains(1.0));
        for k in 1..d {
            assert!(prod.coeff((k, 0)).contains_zero(), "degree {k}");
        }
    }
}
