//! Exact rational arithmetic used as an independent oracle in tests.
//!
//! Everything here is deliberately slow and simple: `BigRational` numbers,
//! explicit truncation-error bounds for the transcendental functions, and an
//! exact complex-rational polynomial algebra mirroring the normalization
//! pipeline.  None of it shares code with the interval implementation it
//! checks.

pub mod poly;
pub mod series;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact rational value of a finite binary64 number.
pub fn rat_from_f64(x: f64) -> Rat {
    Rat::from_f64(x).expect("finite float")
}

/// Largest f64 that is `<=` the rational (round toward negative infinity).
pub fn to_f64_down(x: &Rat) -> f64 {
    let approx = x.to_f64().expect("rational in f64 range");
    let mut candidate = approx;
    // Nudge until the exact comparison holds; the float approximation is within
    // one ulp so a couple of steps suffice.
    while rat_from_f64(candidate) > *x {
        candidate = next_down(candidate);
    }
    while rat_from_f64(next_up(candidate)) <= *x {
        candidate = next_up(candidate);
    }
    candidate
}

/// Smallest f64 that is `>=` the rational.
pub fn to_f64_up(x: &Rat) -> f64 {
    let approx = x.to_f64().expect("rational in f64 range");
    let mut candidate = approx;
    while rat_from_f64(candidate) < *x {
        candidate = next_up(candidate);
    }
    while rat_from_f64(next_down(candidate)) >= *x {
        candidate = next_down(candidate);
    }
    candidate
}

pub fn next_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    let bits = x.to_bits();
    let next = if x == 0.0 {
        1
    } else if x > 0.0 {
        bits + 1
    } else {
        bits - 1
    };
    f64::from_bits(next)
}

pub fn next_down(x: f64) -> f64 {
    -next_up(-x)
}

/// Pair of rationals bracketing a real value.
#[derive(Debug, Clone)]
pub struct RatBounds {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatBounds {
    pub fn point(x: Rat) -> Self {
        RatBounds { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn add(&self, o: &RatBounds) -> RatBounds {
        RatBounds { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn scale_int(&self, k: i64) -> RatBounds {
        let kr = rat(k, 1);
        if k >= 0 {
            RatBounds { lo: &self.lo * &kr, hi: &self.hi * &kr }
        } else {
            RatBounds { lo: &self.hi * &kr, hi: &self.lo * &kr }
        }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        self.lo <= *x && *x <= self.hi
    }
}

/// Floor of the square root of a nonnegative rational, to `bits` fractional
/// bits: returns `(lo, hi)` with `lo^2 <= x <= hi^2` and `hi - lo = 2^-bits`.
pub fn sqrt_bounds(x: &Rat, bits: u32) -> RatBounds {
    assert!(!x.is_negative(), "sqrt of negative rational");
    if x.is_zero() {
        return RatBounds::point(Rat::zero());
    }
    let scale = BigInt::one() << bits;
    let p = x.numer() * &scale * &scale * x.denom();
    let f = p.sqrt(); // floor integer sqrt
    let denom = x.denom() * &scale;
    let lo = Rat::new(f.clone(), denom.clone());
    let hi = Rat::new(f + BigInt::one(), denom);
    RatBounds { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_conversion_directions() {
        let third = rat(1, 3);
        let d = to_f64_down(&third);
        let u = to_f64_up(&third);
        assert!(rat_from_f64(d) <= third);
        assert!(rat_from_f64(u) >= third);
        assert!(u > d);
        assert_eq!(next_up(d), u);

        let exact = rat(3, 4);
        assert_eq!(to_f64_down(&exact), 0.75);
        assert_eq!(to_f64_up(&exact), 0.75);
    }

    #[test]
    fn sqrt_two() {
        let b = sqrt_bounds(&rat(2, 1), 80);
        assert!(&b.lo * &b.lo <= rat(2, 1));
        assert!(&b.hi * &b.hi >= rat(2, 1));
        assert!(b.width() < rat(1, 1_000_000_000_000_000_000));
    }
}
