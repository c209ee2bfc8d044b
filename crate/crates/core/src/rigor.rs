//! Validated-numerics kernel: directed-rounded binary64 arithmetic, rectangular
//! complex intervals, and log-domain bound arithmetic.
//!
//! Directed rounding is realized by post-multiplication with `1 ± 2^-52`: the
//! IEEE result of an elementary operation on safe-range operands is correct to
//! the last bit, so nudging it by one unit in the last place yields a guaranteed
//! one-sided bound.  Every produced value is required to stay inside the safe
//! range `S = {0} ∪ {x : 2^-511 <= |x| <= 2^511}`; leaving it aborts the
//! computation (see [`SafeRangeViolation`]).

use std::panic::panic_any;

/// Smallest positive magnitude of the safe range (2^-511).
pub const SAFE_MIN: f64 = f64::from_bits(512u64 << 52);
/// Largest magnitude of the safe range (2^511).
pub const SAFE_MAX: f64 = f64::from_bits(1534u64 << 52);
/// Machine epsilon for binary64 (2^-52).
pub const EPS: f64 = f64::EPSILON;
/// Sentinel `logval` standing for an exact zero quantity (overestimated by
/// `e^-10000`).
pub const LOG_ZERO_SENTINEL: f64 = -1.0e4;

/// Panic payload raised when a directed operation leaves the safe range.
///
/// The abort is not recoverable inside the algorithm; the CLI catches it at the
/// top level and maps it to a dedicated exit status.
#[derive(Debug, Clone)]
pub struct SafeRangeViolation {
    pub value: f64,
}

#[inline]
fn in_safe_range(x: f64) -> bool {
    x == 0.0 || (SAFE_MIN..=SAFE_MAX).contains(&x.abs())
}

#[inline]
fn check_safe(x: f64) -> f64 {
    if in_safe_range(x) {
        x
    } else {
        panic_any(SafeRangeViolation { value: x })
    }
}

/// Rounding direction of a directed operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Up,
    Down,
}

impl Dir {
    #[inline]
    pub fn flip(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }
}

/// Elementary arithmetic operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[inline]
fn nudge(x: f64, dir: Dir) -> f64 {
    // (1+eps) grows the magnitude by at least one ulp, (1-eps) shrinks it.
    let up = matches!(dir, Dir::Up);
    let factor = if (x >= 0.0) == up { 1.0 + EPS } else { 1.0 - EPS };
    x * factor
}

/// Directed elementary operation: `Up` returns a value `>= a op b`, `Down`
/// a value `<= a op b`.  Division by zero is a hard error; leaving the safe
/// range aborts.
#[inline]
pub fn dir_op(op: ArithOp, a: f64, b: f64, dir: Dir) -> f64 {
    let raw = match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            assert!(b != 0.0, "directed division by zero");
            a / b
        }
    };
    // Inside the safe range an exact-zero result means the true value is zero.
    if raw == 0.0 {
        0.0
    } else {
        check_safe(nudge(raw, dir))
    }
}

#[inline]
pub fn dir_add(a: f64, b: f64, dir: Dir) -> f64 {
    dir_op(ArithOp::Add, a, b, dir)
}
#[inline]
pub fn dir_sub(a: f64, b: f64, dir: Dir) -> f64 {
    dir_op(ArithOp::Sub, a, b, dir)
}
#[inline]
pub fn dir_mul(a: f64, b: f64, dir: Dir) -> f64 {
    dir_op(ArithOp::Mul, a, b, dir)
}
#[inline]
pub fn dir_div(a: f64, b: f64, dir: Dir) -> f64 {
    dir_op(ArithOp::Div, a, b, dir)
}

/// Upper bound of `sqrt(x)`; the IEEE square root is correctly rounded, so the
/// same one-ulp nudge applies.
pub fn iv_sqrt_up(x: f64) -> f64 {
    assert!(x >= 0.0, "square root of a negative number");
    if x == 0.0 {
        return 0.0;
    }
    check_safe(nudge(x.sqrt(), Dir::Up))
}

/// Lower bound of `sqrt(x)`.
pub fn iv_sqrt_down(x: f64) -> f64 {
    assert!(x >= 0.0, "square root of a negative number");
    if x == 0.0 {
        return 0.0;
    }
    check_safe(nudge(x.sqrt(), Dir::Down))
}

#[inline]
fn sqrt_dir(x: f64, dir: Dir) -> f64 {
    match dir {
        Dir::Up => iv_sqrt_up(x),
        Dir::Down => iv_sqrt_down(x),
    }
}

/// Directed bound of `log(1+u)` for `u` in `[0, 0.0101]`: alternating Taylor
/// sum with a geometric bound on the dropped tail.
fn log1p_small(u: f64, dir: Dir) -> f64 {
    debug_assert!((0.0..=0.0102).contains(&u));
    if u == 0.0 {
        return 0.0;
    }
    // Two power chains keep u^k bracketed from both sides so each signed term
    // can be bounded in the right direction.
    let mut pow_up = 1.0;
    let mut pow_dn = 1.0;
    let mut sum = 0.0;
    let mut k = 0_i32;
    loop {
        k += 1;
        pow_up = dir_mul(pow_up, u, Dir::Up);
        pow_dn = dir_mul(pow_dn, u, Dir::Down);
        let mag_up = dir_div(pow_up, f64::from(k), Dir::Up);
        let mag_dn = dir_div(pow_dn, f64::from(k), Dir::Down);
        let positive = k % 2 == 1;
        let signed = match (positive, dir) {
            (true, Dir::Up) => mag_up,
            (true, Dir::Down) => mag_dn,
            (false, Dir::Up) => -mag_dn,
            (false, Dir::Down) => -mag_up,
        };
        sum = dir_add(sum, signed, dir);
        if mag_up <= EPS * u {
            // |tail| <= u^{k+1} / ((k+1)(1-u)).
            let num = dir_mul(pow_up, u, Dir::Up);
            let tail =
                dir_div(dir_div(num, f64::from(k + 1), Dir::Up), dir_sub(1.0, u, Dir::Down), Dir::Up);
            return match dir {
                Dir::Up => dir_add(sum, tail, Dir::Up),
                Dir::Down => dir_sub(sum, tail, Dir::Down),
            };
        }
    }
}

fn log_dir_ge1(x: f64, dir: Dir) -> f64 {
    debug_assert!(x >= 1.0);
    if x == 1.0 {
        return 0.0;
    }
    // Repeated directed square roots until the argument lands in [1, 1.01].
    let mut xi = x;
    let mut n = 0u32;
    while xi > 1.01 {
        xi = sqrt_dir(xi, dir);
        n += 1;
    }
    let u = match dir {
        Dir::Up => dir_sub(xi, 1.0, Dir::Up).max(0.0),
        Dir::Down => dir_sub(xi, 1.0, Dir::Down).max(0.0),
    };
    let t = log1p_small(u, dir);
    if n == 0 {
        t
    } else if t == 0.0 {
        0.0
    } else {
        dir_mul(f64::powi(2.0, n as i32), t, dir)
    }
}

fn log_dir(x: f64, dir: Dir) -> f64 {
    assert!(x > 0.0, "logarithm of a non-positive number");
    check_safe(x);
    if x >= 1.0 {
        log_dir_ge1(x, dir)
    } else {
        // log x = -log(1/x): for an upper bound of log x take a lower bound of
        // log(1/x) evaluated at a downward-rounded reciprocal.
        let inv = dir_div(1.0, x, dir.flip());
        -log_dir_ge1(inv, dir.flip())
    }
}

/// Upper bound of the natural logarithm.
pub fn log_plus(x: f64) -> f64 {
    log_dir(x, Dir::Up)
}

/// Lower bound of the natural logarithm.
pub fn log_minus(x: f64) -> f64 {
    log_dir(x, Dir::Down)
}

const FACTORIALS: [f64; 21] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
];

/// Directed bound of `exp(xi)` for `xi` in `[0, 0.03]`: Taylor sum to the first
/// term below machine epsilon, plus (for upper bounds) a geometric remainder.
fn exp_taylor_small(xi: f64, dir: Dir) -> f64 {
    debug_assert!((0.0..=0.031).contains(&xi));
    let mut sum = 1.0;
    let mut pow = 1.0;
    let mut i = 0usize;
    loop {
        i += 1;
        assert!(i < FACTORIALS.len());
        pow = dir_mul(pow, xi, dir);
        if pow == 0.0 {
            // xi == 0: the series terminates exactly.
            return sum;
        }
        let term = dir_div(pow, FACTORIALS[i], dir);
        sum = dir_add(sum, term, dir);
        if term <= EPS {
            if dir == Dir::Up {
                let tail = dir_div(term, dir_sub(1.0, xi, Dir::Down), Dir::Up);
                sum = dir_add(sum, tail, Dir::Up);
            }
            return sum;
        }
    }
}

fn exp_dir_ext(x: f64, dir: Dir) -> f64 {
    debug_assert!(x >= 0.0);
    let mut n = 0u32;
    let mut xi = x;
    while xi > 0.03 || n == 0 {
        n += 1;
        xi = dir_div(x, f64::powi(2.0, n as i32), dir);
        if xi == 0.0 {
            break;
        }
    }
    let mut e = exp_taylor_small(xi, dir);
    for _ in 0..n {
        e = dir_mul(e, e, dir);
    }
    e
}

/// Upper bound of `exp(x)` on `[0, 1]` (the range needed by the log-sum
/// machinery); arguments outside the range are a hard error.
pub fn exp_plus(x: f64) -> f64 {
    assert!((0.0..=1.0).contains(&x), "exp_plus argument outside [0, 1]");
    exp_dir_ext(x, Dir::Up)
}

/// Upper bound of `exp(x)` for `|x|` up to roughly 350 (the safe-range limit
/// on the value).  Arguments below -350 are clamped: `e^-350` is still a valid
/// upper bound of anything smaller.
pub fn exp_upper(x: f64) -> f64 {
    assert!(x <= 350.0, "exp_upper argument too large for the safe range");
    if x >= 0.0 {
        exp_dir_ext(x, Dir::Up)
    } else {
        let mag = (-x).min(350.0);
        dir_div(1.0, exp_dir_ext(mag, Dir::Down), Dir::Up)
    }
}

/// Lower bound of `exp(x)` on the same range; arguments below -350 return 0.
pub fn exp_lower(x: f64) -> f64 {
    assert!(x <= 350.0, "exp_lower argument too large for the safe range");
    if x >= 0.0 {
        exp_dir_ext(x, Dir::Down)
    } else if x < -350.0 {
        0.0
    } else {
        dir_div(1.0, exp_dir_ext(-x, Dir::Up), Dir::Down)
    }
}

/// Kind of one-sided bound carried by a [`LogBound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Upper,
    Lower,
}

/// A bound on a nonnegative quantity stored as its natural logarithm.
///
/// The exact-zero quantity is represented by the sentinel `logval = -1e4`: an
/// overestimate of zero small enough never to matter downstream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBound {
    pub logval: f64,
    pub kind: BoundKind,
}

impl LogBound {
    pub fn upper(logval: f64) -> Self {
        LogBound { logval, kind: BoundKind::Upper }
    }

    pub fn lower(logval: f64) -> Self {
        LogBound { logval, kind: BoundKind::Lower }
    }

    /// Sentinel bound for an exactly-zero quantity.
    pub fn zero(kind: BoundKind) -> Self {
        LogBound { logval: LOG_ZERO_SENTINEL, kind }
    }

    pub fn is_zero_sentinel(&self) -> bool {
        self.logval <= LOG_ZERO_SENTINEL
    }

    /// Upper bound of the log of a nonnegative value.
    pub fn from_value_upper(x: f64) -> Self {
        if x == 0.0 {
            Self::zero(BoundKind::Upper)
        } else {
            Self::upper(log_plus(x))
        }
    }

    /// Log bound of a product of nonnegative quantities: logs add, rounded
    /// along the bound kind.  A zero factor makes the product exactly zero.
    pub fn mul(self, other: LogBound) -> LogBound {
        debug_assert_eq!(self.kind, other.kind);
        if self.is_zero_sentinel() || other.is_zero_sentinel() {
            return LogBound::zero(self.kind);
        }
        let dir = match self.kind {
            BoundKind::Upper => Dir::Up,
            BoundKind::Lower => Dir::Down,
        };
        LogBound { logval: dir_add(self.logval, other.logval, dir), kind: self.kind }
    }
}

/// Upper log bound of `x + y` from upper log bounds of `x` and `y`:
/// `log(x+y) = log x̄ + log(1 + exp(log ȳ - log x̄))`, evaluated with upward
/// rounding throughout.  Zero sentinels are absorbed exactly.
pub fn log_add_upper(lx: LogBound, ly: LogBound) -> LogBound {
    debug_assert_eq!(lx.kind, BoundKind::Upper);
    debug_assert_eq!(ly.kind, BoundKind::Upper);
    if lx.is_zero_sentinel() {
        return ly;
    }
    if ly.is_zero_sentinel() {
        return lx;
    }
    let (hi, lo) = if lx.logval >= ly.logval { (lx.logval, ly.logval) } else { (ly.logval, lx.logval) };
    // Gap rounded down so exp(-gap) is overestimated.
    let gap = dir_sub(hi, lo, Dir::Down).max(0.0);
    let logval = if gap > 300.0 {
        // log(1 + e^-gap) <= e^-gap <= e^-300 < 1e-130.
        dir_add(hi, 1.0e-130, Dir::Up)
    } else {
        let e_gap = exp_dir_ext(gap, Dir::Down);
        let q = dir_div(1.0, e_gap, Dir::Up);
        let s = dir_add(1.0, q, Dir::Up);
        dir_add(hi, log_plus(s), Dir::Up)
    };
    LogBound::upper(logval)
}

/// Closed real interval with safe-range endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        check_safe(lo);
        check_safe(hi);
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Self::new(x, x)
    }

    /// Smallest interval around `x` with both endpoints nudged outward by one
    /// ulp; encloses any real the float `x` approximates to nearest.
    pub fn outward(x: f64) -> Self {
        if x == 0.0 {
            return Interval::ZERO;
        }
        Interval::new(nudge(x, Dir::Down), nudge(x, Dir::Up))
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        dir_sub(self.hi, self.lo, Dir::Up)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0.0 && 0.0 <= self.hi
    }

    pub fn is_exact_zero(&self) -> bool {
        self.lo == 0.0 && self.hi == 0.0
    }

    pub fn neg(&self) -> Self {
        Interval { lo: -self.hi, hi: -self.lo }
    }

    /// Largest absolute value over the interval.
    pub fn mag(&self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value over the interval (0 if it straddles zero).
    pub fn mig(&self) -> f64 {
        if self.contains_zero() {
            0.0
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: dir_add(self.lo, o.lo, Dir::Down), hi: dir_add(self.hi, o.hi, Dir::Up) }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: dir_sub(self.lo, o.hi, Dir::Down), hi: dir_sub(self.hi, o.lo, Dir::Up) }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &a in &[self.lo, self.hi] {
            for &b in &[o.lo, o.hi] {
                let raw = a * b;
                if raw == 0.0 {
                    lo = lo.min(0.0);
                    hi = hi.max(0.0);
                } else {
                    lo = lo.min(nudge(raw, Dir::Down));
                    hi = hi.max(nudge(raw, Dir::Up));
                }
            }
        }
        Interval { lo: check_safe(lo), hi: check_safe(hi) }
    }

    pub fn div(&self, o: &Interval) -> Interval {
        assert!(!o.contains_zero(), "division by interval containing zero");
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for &a in &[self.lo, self.hi] {
            for &b in &[o.lo, o.hi] {
                let raw = a / b;
                if raw == 0.0 {
                    lo = lo.min(0.0);
                    hi = hi.max(0.0);
                } else {
                    lo = lo.min(nudge(raw, Dir::Down));
                    hi = hi.max(nudge(raw, Dir::Up));
                }
            }
        }
        Interval { lo: check_safe(lo), hi: check_safe(hi) }
    }

    /// Division by the exact integer `k`.
    pub fn div_int(&self, k: i64) -> Interval {
        assert!(k != 0);
        let kf = k as f64;
        if k > 0 {
            Interval { lo: dir_div(self.lo, kf, Dir::Down), hi: dir_div(self.hi, kf, Dir::Up) }
        } else {
            Interval { lo: dir_div(self.hi, kf, Dir::Down), hi: dir_div(self.lo, kf, Dir::Up) }
        }
    }

    /// Multiplication by the exact integer `k`.
    pub fn mul_int(&self, k: i64) -> Interval {
        let kf = k as f64;
        if k >= 0 {
            Interval { lo: dir_mul(self.lo, kf, Dir::Down), hi: dir_mul(self.hi, kf, Dir::Up) }
        } else {
            Interval::new(dir_mul(self.hi, kf, Dir::Down), dir_mul(self.lo, kf, Dir::Up))
        }
    }

    /// Interval square root; requires `lo >= 0`.
    pub fn sqrt(&self) -> Interval {
        assert!(self.lo >= 0.0, "square root of an interval reaching below zero");
        Interval { lo: iv_sqrt_down(self.lo), hi: iv_sqrt_up(self.hi) }
    }

    /// Enclosure of |x| over the interval.
    pub fn abs(&self) -> Interval {
        Interval { lo: self.mig(), hi: self.mag() }
    }

    pub fn hull(&self, o: &Interval) -> Interval {
        Interval { lo: self.lo.min(o.lo), hi: self.hi.max(o.hi) }
    }

    /// Midpoint (non-rigorous; used only to steer pivot choices).
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

/// Generic interval arithmetic entry point mirroring the elementary-operation
/// table; division by an interval containing zero is a hard error.
pub fn iv_arith(op: ArithOp, a: &Interval, b: &Interval) -> Interval {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b),
    }
}

/// Rectangular complex interval: independent enclosures of the real and
/// imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub const ZERO: ComplexInterval = ComplexInterval { re: Interval::ZERO, im: Interval::ZERO };

    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexInterval { re, im }
    }

    pub fn from_re(re: Interval) -> Self {
        ComplexInterval { re, im: Interval::ZERO }
    }

    pub fn point(re: f64, im: f64) -> Self {
        ComplexInterval { re: Interval::point(re), im: Interval::point(im) }
    }

    pub fn is_exact_zero(&self) -> bool {
        self.re.is_exact_zero() && self.im.is_exact_zero()
    }

    pub fn add(&self, o: &ComplexInterval) -> ComplexInterval {
        ComplexInterval { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &ComplexInterval) -> ComplexInterval {
        ComplexInterval { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn neg(&self) -> ComplexInterval {
        ComplexInterval { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul(&self, o: &ComplexInterval) -> ComplexInterval {
        let ac = self.re.mul(&o.re);
        let bd = self.im.mul(&o.im);
        let ad = self.re.mul(&o.im);
        let bc = self.im.mul(&o.re);
        ComplexInterval { re: ac.sub(&bd), im: ad.add(&bc) }
    }

    /// Multiplication by the imaginary unit (exact).
    pub fn mul_i(&self) -> ComplexInterval {
        ComplexInterval { re: self.im.neg(), im: self.re }
    }

    /// Scaling by a real interval.
    pub fn scale(&self, s: &Interval) -> ComplexInterval {
        ComplexInterval { re: self.re.mul(s), im: self.im.mul(s) }
    }

    pub fn mul_int(&self, k: i64) -> ComplexInterval {
        ComplexInterval { re: self.re.mul_int(k), im: self.im.mul_int(k) }
    }

    pub fn div_int(&self, k: i64) -> ComplexInterval {
        ComplexInterval { re: self.re.div_int(k), im: self.im.div_int(k) }
    }

    /// Division by a real interval not containing zero.
    pub fn div_re(&self, d: &Interval) -> ComplexInterval {
        ComplexInterval { re: self.re.div(d), im: self.im.div(d) }
    }

    /// Full complex division through the conjugate; the divisor's modulus
    /// enclosure must stay away from zero.
    pub fn div(&self, d: &ComplexInterval) -> ComplexInterval {
        let denom = d.re.mul(&d.re).add(&d.im.mul(&d.im));
        let conj = ComplexInterval { re: d.re, im: d.im.neg() };
        self.mul(&conj).div_re(&denom)
    }

    /// Rigorous upper bound of the complex modulus over the rectangle.
    pub fn modulus_upper(&self) -> f64 {
        let a = self.re.mag();
        let b = self.im.mag();
        if a == 0.0 && b == 0.0 {
            return 0.0;
        }
        iv_sqrt_up(dir_add(dir_mul(a, a, Dir::Up), dir_mul(b, b, Dir::Up), Dir::Up))
    }

    /// Rigorous lower bound of the complex modulus over the rectangle.
    pub fn modulus_lower(&self) -> f64 {
        let a = self.re.mig();
        let b = self.im.mig();
        if a == 0.0 && b == 0.0 {
            return 0.0;
        }
        iv_sqrt_down(dir_add(dir_mul(a, a, Dir::Down), dir_mul(b, b, Dir::Down), Dir::Down))
    }

    /// Enclosure of the modulus.
    pub fn modulus(&self) -> Interval {
        Interval::new(self.modulus_lower(), self.modulus_upper())
    }

    pub fn contains(&self, re: f64, im: f64) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dir_add_exact_then_inflated() {
        // 1+1 is exact; Up inflates by one ulp.
        assert_eq!(dir_add(1.0, 1.0, Dir::Up), 2.0 * (1.0 + EPS));
        assert_eq!(dir_add(1.0, 1.0, Dir::Down), 2.0 * (1.0 - EPS));
    }

    #[test]
    fn dir_mul_underflow_aborts() {
        let result = std::panic::catch_unwind(|| dir_mul(SAFE_MIN, 0.5, Dir::Down));
        let payload = result.expect_err("expected safe-range abort");
        assert!(payload.downcast_ref::<SafeRangeViolation>().is_some());
    }

    #[test]
    fn dir_div_brackets_one_third() {
        let up = dir_div(1.0, 3.0, Dir::Up);
        let down = dir_div(1.0, 3.0, Dir::Down);
        assert!(down < up);
        assert!(down <= 1.0 / 3.0 && 1.0 / 3.0 <= up);
        // Up and Down differ by at most 2 ulps.
        assert!(up - down <= 2.0 * EPS);
    }

    #[test]
    #[should_panic(expected = "directed division by zero")]
    fn dir_div_by_zero_is_hard_error() {
        dir_div(1.0, 0.0, Dir::Up);
    }

    #[test]
    fn sqrt_bounds() {
        assert_eq!(iv_sqrt_up(4.0), 2.0 * (1.0 + EPS));
        assert!(iv_sqrt_down(4.0) <= 2.0);
        assert!(iv_sqrt_up(2.0) >= 1.41421356237309);
        assert!(iv_sqrt_down(2.0) <= 1.41421356237310);
        assert_eq!(iv_sqrt_up(0.0), 0.0);
    }

    #[test]
    fn log_plus_at_one() {
        let v = log_plus(1.0);
        assert!(v >= 0.0 && v <= 1e-12);
    }

    #[test]
    fn log_plus_appendix_seed() {
        // log(8*sqrt(2)/3)/3 as used to seed the geometric tail.
        let norm = dir_div(dir_mul(8.0, iv_sqrt_up(2.0), Dir::Up), 3.0, Dir::Up);
        let v = dir_div(log_plus(norm), 3.0, Dir::Up);
        assert!(v <= 0.4424677, "{v}");
        assert!(v >= 0.4424675, "{v}");
    }

    #[test]
    fn exp_plus_small_values() {
        let e0 = exp_plus(0.0);
        assert!(e0 >= 1.0 && e0 <= 1.0 + 1e-14);
        let e1 = exp_plus(1.0);
        assert!(e1 >= std::f64::consts::E);
        assert!(e1 <= std::f64::consts::E * (1.0 + 1e-10));
        assert!(exp_plus(0.03) >= 1.030454);
    }

    #[test]
    #[should_panic(expected = "exp_plus argument outside")]
    fn exp_plus_domain() {
        exp_plus(1.5);
    }

    #[test]
    fn log_add_basics() {
        let two = log_add_upper(LogBound::upper(0.0), LogBound::upper(0.0));
        assert!(two.logval >= std::f64::consts::LN_2);
        assert!(two.logval <= std::f64::consts::LN_2 + 1e-10);

        let z = LogBound::zero(BoundKind::Upper);
        let kept = log_add_upper(LogBound::upper(0.0), z);
        assert_eq!(kept.logval, 0.0);

        let big = log_add_upper(LogBound::upper(10.0), LogBound::upper(10.0));
        assert!(big.logval >= 10.0 + std::f64::consts::LN_2);
        assert!(big.logval <= 10.0 + std::f64::consts::LN_2 + 1e-8);
    }

    #[test]
    fn log_add_huge_gap() {
        let v = log_add_upper(LogBound::upper(5.0), LogBound::upper(-9000.0));
        assert!(v.logval >= 5.0 && v.logval <= 5.0 + 1e-13);
    }

    #[test]
    fn zero_sentinel_multiplicative() {
        let z = LogBound::zero(BoundKind::Upper);
        let p = z.mul(LogBound::upper(50.0));
        assert!(p.is_zero_sentinel());
    }

    #[test]
    fn interval_products() {
        let a = Interval::new(1.0, 2.0);
        let b = Interval::new(3.0, 4.0);
        let p = a.mul(&b);
        assert!(p.lo() <= 3.0 && p.hi() >= 8.0);

        let c = Interval::new(-1.0, 1.0);
        let s = c.add(&c);
        assert!(s.lo() <= -2.0 && s.hi() >= 2.0);

        let third = Interval::point(1.0).div(&Interval::point(3.0));
        assert!(third.contains(1.0 / 3.0));
        assert!(third.width() <= 4.0 * EPS);
    }

    #[test]
    #[should_panic(expected = "division by interval containing zero")]
    fn interval_division_by_zero_interval() {
        let _ = Interval::new(1.0, 1.0).div(&Interval::new(-1.0, 1.0));
    }

    #[test]
    fn complex_modulus_bounds() {
        let c = ComplexInterval::point(3.0, 4.0);
        assert!(c.modulus_upper() >= 5.0);
        assert!(c.modulus_lower() <= 5.0);
        assert!(c.modulus_upper() - c.modulus_lower() <= 1e-14);
        // mul_i is exact
        let rot = c.mul_i();
        assert!(rot.contains(-4.0, 3.0));
    }

    #[test]
    fn directed_monotonicity_sweep() {
        let values = [-7.5, -1.0, -0.001, 0.25, 1.0, 3.0, 1e8];
        for &a in &values {
            for &b in &values {
                for op in [ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div] {
                    let d = dir_op(op, a, b, Dir::Down);
                    let u = dir_op(op, a, b, Dir::Up);
                    assert!(d <= u, "{op:?} {a} {b}");
                }
            }
        }
    }
}
