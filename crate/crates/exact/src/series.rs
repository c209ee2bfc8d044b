//! Rational enclosures of `exp`, `ln` and related values, with explicit
//! truncation-error bounds.

use crate::{rat, Rat, RatBounds};
use num_traits::{One, Signed};

/// Enclosure of `exp(x)` for rational `x` with `|x| <= 400`.
pub fn exp_bounds(x: &Rat, terms: usize) -> RatBounds {
    // Halve until |y| <= 1/4, sum the Taylor series exactly, square back.
    let mut m = 0u32;
    let quarter = rat(1, 4);
    let mut y = x.clone();
    while y.abs() > quarter {
        y /= rat(2, 1);
        m += 1;
        assert!(m < 16, "argument out of supported range");
    }
    let mut sum = Rat::one();
    let mut term = Rat::one();
    for i in 1..=terms {
        term = term * &y / rat(i as i64, 1);
        sum += &term;
    }
    // |tail| <= |y|^{N+1}/(N+1)! * 1/(1-|y|)
    let tail_num = term.abs() * y.abs() / rat(terms as i64 + 1, 1);
    let tail = tail_num / (Rat::one() - y.abs());
    let mut lo = &sum - &tail;
    let mut hi = &sum + &tail;
    assert!(lo.is_positive(), "need more terms for exp enclosure");
    for _ in 0..m {
        lo = &lo * &lo;
        hi = &hi * &hi;
    }
    RatBounds { lo, hi }
}

fn atanh_bounds(u: &Rat, terms: usize) -> RatBounds {
    // atanh(u) = sum u^{2k+1}/(2k+1), |u| < 1/2 here.
    debug_assert!(u.abs() < rat(1, 2));
    let u2 = u * u;
    let mut sum = u.clone();
    let mut pow = u.clone();
    for k in 1..=terms {
        pow = pow * &u2;
        sum += &pow / rat(2 * k as i64 + 1, 1);
    }
    // |tail| <= |u|^{2N+3}/((2N+3)(1-u^2))
    let tail = pow.abs() * &u2 / rat(2 * terms as i64 + 3, 1) / (Rat::one() - &u2);
    RatBounds { lo: &sum - &tail, hi: &sum + &tail }
}

/// Enclosure of `ln 2`.
pub fn ln2_bounds(terms: usize) -> RatBounds {
    atanh_bounds(&rat(1, 3), terms).scale_int(2)
}

/// Enclosure of `ln(x)` for positive rational `x`.
pub fn ln_bounds(x: &Rat, terms: usize) -> RatBounds {
    assert!(x.is_positive(), "ln of non-positive rational");
    // Reduce to y in [3/4, 3/2] by exact powers of two.
    let mut y = x.clone();
    let mut m: i64 = 0;
    let hi_lim = rat(3, 2);
    let lo_lim = rat(3, 4);
    while y > hi_lim {
        y /= rat(2, 1);
        m += 1;
    }
    while y < lo_lim {
        y *= rat(2, 1);
        m -= 1;
    }
    let u = (&y - Rat::one()) / (&y + Rat::one());
    let lny = atanh_bounds(&u, terms).scale_int(2);
    let ln2 = ln2_bounds(terms).scale_int(m);
    lny.add(&ln2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_from_f64;

    #[test]
    fn exp_of_one() {
        let b = exp_bounds(&Rat::one(), 30);
        let e = rat_from_f64(std::f64::consts::E);
        assert!(b.lo < e && e < b.hi);
        assert!(b.width() < rat(1, 1_000_000_000_000_000));
    }

    #[test]
    fn ln_checks() {
        let b = ln_bounds(&rat(2, 1), 30);
        let ln2 = rat_from_f64(std::f64::consts::LN_2);
        assert!(b.lo < ln2 && ln2 < b.hi);

        let b = ln_bounds(&rat(1, 10), 40);
        let expected = rat_from_f64((0.1f64).ln());
        assert!((b.lo.clone() - &expected).abs() < rat(1, 1_000_000_000_000));
        assert!(b.contains(&expected) || b.width() < rat(1, 1_000_000_000_000));
    }
}
