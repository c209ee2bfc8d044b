//! Sparse homogeneous polynomials in the complexified variables
//! `(-i z_1, ..., -i z_n, conj(z_1), ..., conj(z_n))` with rectangular
//! complex-interval coefficients.
//!
//! The slots of `-i z_j` play the role of coordinates and those of `conj(z_j)`
//! the role of momenta in the Poisson bracket, which makes the homological
//! relation `{m, Z0} = i w.(l - lt) m` hold for every monomial
//! `m = (-i z)^l conj(z)^lt` with `Z0 = sum_j i w_j (-i z_j) conj(z_j)`.

use crate::rigor::{
    dir_add, dir_mul, log_plus, BoundKind, ComplexInterval, Dir, Interval, LogBound,
    LOG_ZERO_SENTINEL,
};
use std::collections::BTreeMap;
use std::fmt;

/// Hard cap on the supported degrees of freedom (the models use n = 2).
pub const MAX_DOF: usize = 4;

/// Exponent pair of one monomial: `z_pow[j]` is the exponent of `-i z_j`,
/// `conj_pow[j]` the exponent of `conj(z_j)`.  Ordering is lexicographic in
/// `(z_pow, conj_pow)`, which fixes the canonical reduction order everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndexPair {
    pub z_pow: [u8; MAX_DOF],
    pub conj_pow: [u8; MAX_DOF],
}

impl MultiIndexPair {
    pub fn new(z_pow: &[u8], conj_pow: &[u8]) -> Self {
        assert!(z_pow.len() == conj_pow.len() && z_pow.len() <= MAX_DOF);
        let mut z = [0u8; MAX_DOF];
        let mut c = [0u8; MAX_DOF];
        z[..z_pow.len()].copy_from_slice(z_pow);
        c[..conj_pow.len()].copy_from_slice(conj_pow);
        MultiIndexPair { z_pow: z, conj_pow: c }
    }

    pub fn degree(&self) -> u32 {
        self.z_pow.iter().chain(self.conj_pow.iter()).map(|&e| u32::from(e)).sum()
    }

    /// Difference vector `l - lt` entry by entry.
    pub fn diff(&self, j: usize) -> i64 {
        i64::from(self.z_pow[j]) - i64::from(self.conj_pow[j])
    }

    /// Largest single exponent, the weight in the sharpened Lie estimate.
    pub fn max_exponent(&self) -> u32 {
        self.z_pow.iter().chain(self.conj_pow.iter()).map(|&e| u32::from(e)).max().unwrap_or(0)
    }

    /// True when the monomial depends on the actions only (`l = lt`).
    pub fn is_action_monomial(&self) -> bool {
        self.z_pow == self.conj_pow
    }
}

/// Homogeneous polynomial of a fixed total degree, in canonical sparse form:
/// keys sorted, exact-zero coefficients dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct HomoPoly {
    n: usize,
    degree: u32,
    terms: Vec<(MultiIndexPair, ComplexInterval)>,
}

#[derive(Debug, thiserror::Error)]
pub enum PolyError {
    #[error("mismatched degrees of freedom: {0} vs {1}")]
    DofMismatch(usize, usize),
    #[error("monomial degree {found} does not match polynomial degree {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl HomoPoly {
    pub fn zero(n: usize, degree: u32) -> Self {
        assert!(n >= 1 && n <= MAX_DOF);
        HomoPoly { n, degree, terms: Vec::new() }
    }

    pub fn monomial(n: usize, key: MultiIndexPair, coeff: ComplexInterval) -> Self {
        let mut p = HomoPoly::zero(n, key.degree());
        if !coeff.is_exact_zero() {
            p.terms.push((key, coeff));
        }
        p
    }

    pub fn from_terms(
        n: usize,
        degree: u32,
        entries: impl IntoIterator<Item = (MultiIndexPair, ComplexInterval)>,
    ) -> Result<Self, PolyError> {
        let mut acc: BTreeMap<MultiIndexPair, ComplexInterval> = BTreeMap::new();
        for (key, coeff) in entries {
            if key.degree() != degree {
                return Err(PolyError::DegreeMismatch { expected: degree, found: key.degree() });
            }
            match acc.get_mut(&key) {
                Some(c) => *c = c.add(&coeff),
                None => {
                    acc.insert(key, coeff);
                }
            }
        }
        Ok(Self::from_map(n, degree, acc))
    }

    fn from_map(n: usize, degree: u32, map: BTreeMap<MultiIndexPair, ComplexInterval>) -> Self {
        let terms = map.into_iter().filter(|(_, c)| !c.is_exact_zero()).collect();
        HomoPoly { n, degree, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &(MultiIndexPair, ComplexInterval)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &MultiIndexPair) -> Option<&ComplexInterval> {
        self.terms.binary_search_by(|(k, _)| k.cmp(key)).ok().map(|i| &self.terms[i].1)
    }

    pub fn add(&self, other: &HomoPoly) -> HomoPoly {
        assert_eq!(self.n, other.n);
        assert!(
            self.is_empty() || other.is_empty() || self.degree == other.degree,
            "adding polynomials of degrees {} and {}",
            self.degree,
            other.degree
        );
        let degree = if self.is_empty() { other.degree } else { self.degree };
        let mut acc: BTreeMap<MultiIndexPair, ComplexInterval> =
            self.terms.iter().cloned().collect();
        for (k, c) in &other.terms {
            match acc.get_mut(k) {
                Some(e) => *e = e.add(c),
                None => {
                    acc.insert(*k, *c);
                }
            }
        }
        Self::from_map(self.n, degree, acc)
    }

    pub fn neg(&self) -> HomoPoly {
        HomoPoly {
            n: self.n,
            degree: self.degree,
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Interval) -> HomoPoly {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (*k, c.scale(s)))
            .filter(|(_, c)| !c.is_exact_zero())
            .collect();
        HomoPoly { n: self.n, degree: self.degree, terms }
    }

    pub fn scale_complex(&self, s: &ComplexInterval) -> HomoPoly {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (*k, c.mul(s)))
            .filter(|(_, c)| !c.is_exact_zero())
            .collect();
        HomoPoly { n: self.n, degree: self.degree, terms }
    }

    pub fn div_int(&self, k: i64) -> HomoPoly {
        let terms = self.terms.iter().map(|(key, c)| (*key, c.div_int(k))).collect();
        HomoPoly { n: self.n, degree: self.degree, terms }
    }

    /// Exact product of homogeneous polynomials (degrees add).
    pub fn mul(&self, other: &HomoPoly) -> HomoPoly {
        assert_eq!(self.n, other.n);
        let mut acc: BTreeMap<MultiIndexPair, ComplexInterval> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut z = [0u8; MAX_DOF];
                let mut c = [0u8; MAX_DOF];
                for j in 0..MAX_DOF {
                    z[j] = ka.z_pow[j] + kb.z_pow[j];
                    c[j] = ka.conj_pow[j] + kb.conj_pow[j];
                }
                let key = MultiIndexPair { z_pow: z, conj_pow: c };
                let prod = ca.mul(cb);
                match acc.get_mut(&key) {
                    Some(e) => *e = e.add(&prod),
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        Self::from_map(self.n, self.degree + other.degree, acc)
    }

    /// Poisson bracket `{self, other}`.  Inputs of degrees `s+2` and `r+2`
    /// produce degree `s+r+2`.
    pub fn poisson(&self, other: &HomoPoly) -> HomoPoly {
        assert_eq!(self.n, other.n, "mismatched degrees of freedom");
        let out_degree = (self.degree + other.degree).saturating_sub(2);
        let mut acc: BTreeMap<MultiIndexPair, ComplexInterval> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                for j in 0..self.n {
                    let factor = i64::from(ka.z_pow[j]) * i64::from(kb.conj_pow[j])
                        - i64::from(ka.conj_pow[j]) * i64::from(kb.z_pow[j]);
                    if factor == 0 {
                        continue;
                    }
                    let mut z = [0u8; MAX_DOF];
                    let mut c = [0u8; MAX_DOF];
                    for i in 0..MAX_DOF {
                        z[i] = ka.z_pow[i] + kb.z_pow[i];
                        c[i] = ka.conj_pow[i] + kb.conj_pow[i];
                    }
                    z[j] -= 1;
                    c[j] -= 1;
                    let key = MultiIndexPair { z_pow: z, conj_pow: c };
                    let contrib = ca.mul(cb).mul_int(factor);
                    match acc.get_mut(&key) {
                        Some(e) => *e = e.add(&contrib),
                        None => {
                            acc.insert(key, contrib);
                        }
                    }
                }
            }
        }
        Self::from_map(self.n, out_degree, acc)
    }

    /// Enclosure of the coefficient-modulus sum (the functional norm).
    pub fn norm(&self) -> Interval {
        let mut lo = 0.0;
        let mut hi = 0.0;
        for (_, c) in &self.terms {
            lo = dir_add(lo, c.modulus_lower(), Dir::Down);
            hi = dir_add(hi, c.modulus_upper(), Dir::Up);
        }
        Interval::new(lo, hi)
    }

    /// Upper log bound of the norm.
    pub fn log_norm_upper(&self) -> LogBound {
        LogBound::from_value_upper(self.norm().hi())
    }

    /// Upper log bound of the sup norm on the ball of radius `rho`:
    /// `rho^degree * ||f||`.
    pub fn sup_norm_bound(&self, rho: f64) -> LogBound {
        assert!(rho > 0.0);
        let log_norm = self.log_norm_upper();
        if log_norm.is_zero_sentinel() {
            return LogBound::zero(BoundKind::Upper);
        }
        let log_rho_term = dir_mul(f64::from(self.degree), log_plus(rho), Dir::Up);
        LogBound::upper(dir_add(log_norm.logval, log_rho_term, Dir::Up))
    }

    /// Upper bound of the derivative-weighted modulus sum
    /// `sum |c| max_j {l_j, lt_j}` used by the sharpened Lie estimate.
    pub fn deriv_weight(&self) -> Interval {
        let mut lo = 0.0;
        let mut hi = 0.0;
        for (k, c) in &self.terms {
            let w = f64::from(k.max_exponent());
            lo = dir_add(lo, dir_mul(c.modulus_lower(), w, Dir::Down), Dir::Down);
            hi = dir_add(hi, dir_mul(c.modulus_upper(), w, Dir::Up), Dir::Up);
        }
        Interval::new(lo, hi)
    }

    /// Split into the part satisfying `keep` and the rest.
    pub fn split(&self, keep: impl Fn(&MultiIndexPair) -> bool) -> (HomoPoly, HomoPoly) {
        let mut kept = Vec::new();
        let mut removed = Vec::new();
        for (k, c) in &self.terms {
            if keep(k) {
                kept.push((*k, *c));
            } else {
                removed.push((*k, *c));
            }
        }
        (
            HomoPoly { n: self.n, degree: self.degree, terms: kept },
            HomoPoly { n: self.n, degree: self.degree, terms: removed },
        )
    }

    /// Coefficient-wise check that `other - self` encloses the zero polynomial.
    pub fn difference_contains_zero(&self, other: &HomoPoly) -> bool {
        let diff = self.neg().add(other);
        diff.terms.iter().all(|(_, c)| c.contains_zero())
    }
}

/// Terms `(1/j!) L_chi^j g` for `j = 0, 1, ...` while the degree stays within
/// `max_degree`.  `chi` of degree `r+2` raises the degree by `r` per
/// application; contributions beyond `max_degree` are left to the majorant
/// bookkeeping.
pub fn lie_apply(chi: &HomoPoly, g: &HomoPoly, max_degree: u32) -> Vec<HomoPoly> {
    assert!(chi.degree() >= 3, "generating function must have degree >= 3");
    let step = chi.degree() - 2;
    let mut out = Vec::new();
    if g.degree() > max_degree {
        return out;
    }
    out.push(g.clone());
    let mut current = g.clone();
    let mut j = 1i64;
    while current.degree() + step <= max_degree {
        current = chi.poisson(&current).div_int(j);
        out.push(current.clone());
        if current.is_empty() {
            break;
        }
        j += 1;
    }
    out
}

// --- fixture text format -------------------------------------------------
//
// One line per monomial: `l-vector lt-vector re_lo re_hi im_lo im_hi`, the
// vectors comma-separated, the endpoints hexadecimal float literals.

/// Format a binary64 value as a C99-style hexadecimal float literal.
pub fn fmt_hex_f64(x: f64) -> String {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { "-" } else { "" };
    let exp_field = ((bits >> 52) & 0x7ff) as i64;
    let mantissa = bits & 0xf_ffff_ffff_ffff;
    if exp_field == 0 {
        if mantissa == 0 {
            return format!("{sign}0x0p+0");
        }
        return format!("{sign}0x0.{mantissa:013x}p-1022");
    }
    assert!(exp_field != 0x7ff, "non-finite value in checkpoint");
    let exp = exp_field - 1023;
    let e_sign = if exp >= 0 { "+" } else { "" };
    format!("{sign}0x1.{mantissa:013x}p{e_sign}{exp}")
}

/// Parse a hexadecimal float literal produced by [`fmt_hex_f64`] (bit-exact).
pub fn parse_hex_f64(s: &str) -> Result<f64, String> {
    let (neg, rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let rest = rest.strip_prefix("0x").ok_or_else(|| format!("missing 0x prefix in `{s}`"))?;
    let (mant_str, exp_str) =
        rest.split_once('p').ok_or_else(|| format!("missing exponent in `{s}`"))?;
    let exp: i64 = exp_str.parse().map_err(|_| format!("bad exponent in `{s}`"))?;
    let (lead, frac) = match mant_str.split_once('.') {
        Some((l, f)) => (l, f),
        None => (mant_str, ""),
    };
    let mut mantissa: u64 = 0;
    if !frac.is_empty() {
        if frac.len() != 13 {
            return Err(format!("expected 13 mantissa digits in `{s}`"));
        }
        mantissa = u64::from_str_radix(frac, 16).map_err(|_| format!("bad mantissa in `{s}`"))?;
    }
    let bits = match lead {
        "0" => {
            if mantissa == 0 {
                0u64
            } else {
                if exp != -1022 {
                    return Err(format!("subnormal exponent must be -1022 in `{s}`"));
                }
                mantissa
            }
        }
        "1" => {
            let exp_field = exp + 1023;
            if !(1..=2046).contains(&exp_field) {
                return Err(format!("exponent out of range in `{s}`"));
            }
            ((exp_field as u64) << 52) | mantissa
        }
        _ => return Err(format!("bad leading digit in `{s}`")),
    };
    let value = f64::from_bits(bits);
    Ok(if neg { -value } else { value })
}

fn fmt_exponents(v: &[u8], n: usize) -> String {
    v[..n].iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
}

impl HomoPoly {
    /// One fixture line per monomial.
    pub fn to_lines(&self) -> Vec<String> {
        self.terms
            .iter()
            .map(|(k, c)| {
                format!(
                    "{} {} {} {} {} {}",
                    fmt_exponents(&k.z_pow, self.n),
                    fmt_exponents(&k.conj_pow, self.n),
                    fmt_hex_f64(c.re.lo()),
                    fmt_hex_f64(c.re.hi()),
                    fmt_hex_f64(c.im.lo()),
                    fmt_hex_f64(c.im.hi()),
                )
            })
            .collect()
    }

    pub fn from_lines<'a>(
        n: usize,
        degree: u32,
        lines: impl IntoIterator<Item = &'a str>,
    ) -> Result<Self, PolyError> {
        let mut entries = Vec::new();
        for (idx, line) in lines.into_iter().enumerate() {
            let parse = |msg: &str| PolyError::Parse { line: idx + 1, message: msg.to_string() };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 6 {
                return Err(parse("expected 6 fields"));
            }
            let read_vec = |s: &str| -> Result<Vec<u8>, PolyError> {
                s.split(',')
                    .map(|t| t.parse::<u8>().map_err(|_| parse("bad exponent")))
                    .collect()
            };
            let z = read_vec(fields[0])?;
            let c = read_vec(fields[1])?;
            if z.len() != n || c.len() != n {
                return Err(parse("wrong number of exponents"));
            }
            let mut ends = [0.0f64; 4];
            for (i, f) in fields[2..].iter().enumerate() {
                ends[i] = parse_hex_f64(f)
                    .map_err(|e| PolyError::Parse { line: idx + 1, message: e })?;
            }
            let coeff = ComplexInterval::new(
                Interval::new(ends[0], ends[1]),
                Interval::new(ends[2], ends[3]),
            );
            entries.push((MultiIndexPair::new(&z, &c), coeff));
        }
        Self::from_terms(n, degree, entries)
    }
}

impl fmt::Display for HomoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(
                f,
                "[{:.6e},{:.6e}]+i[{:.6e},{:.6e}] ",
                c.re.lo(),
                c.re.hi(),
                c.im.lo(),
                c.im.hi()
            )?;
            for j in 0..self.n {
                if k.z_pow[j] > 0 {
                    write!(f, "x{}^{}", j + 1, k.z_pow[j])?;
                }
            }
            for j in 0..self.n {
                if k.conj_pow[j] > 0 {
                    write!(f, "y{}^{}", j + 1, k.conj_pow[j])?;
                }
            }
        }
        Ok(())
    }
}

/// Sentinel-aware helper: log of the value `hi` endpoint if positive, else the
/// zero sentinel.  Shared by the majorant bookkeeping.
pub fn log_upper_or_sentinel(x: f64) -> f64 {
    if x <= 0.0 {
        LOG_ZERO_SENTINEL
    } else {
        log_plus(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rigor::iv_sqrt_up;

    fn s2_half() -> Interval {
        // sqrt(2)/2 as an enclosure
        Interval::new(crate::rigor::iv_sqrt_down(2.0), iv_sqrt_up(2.0)).div_int(2)
    }

    /// Z0 for omega = (1, -sqrt(2)/2).
    fn z0() -> HomoPoly {
        let w2 = s2_half().neg();
        let p = HomoPoly::monomial(
            2,
            MultiIndexPair::new(&[1, 0], &[1, 0]),
            ComplexInterval::new(Interval::ZERO, Interval::ONE),
        );
        p.add(&HomoPoly::monomial(
            2,
            MultiIndexPair::new(&[0, 1], &[0, 1]),
            ComplexInterval::new(Interval::ZERO, w2),
        ))
    }

    #[test]
    fn action_monomials_commute_with_z0() {
        let z0 = z0();
        // I1 = i (-iz1)(cz1): bracket with Z0 must be the zero polynomial.
        let i1 = HomoPoly::monomial(
            2,
            MultiIndexPair::new(&[1, 0], &[1, 0]),
            ComplexInterval::new(Interval::ZERO, Interval::ONE),
        );
        let b = i1.poisson(&z0);
        assert!(b.is_empty(), "{b}");
    }

    #[test]
    fn bracket_with_z0_multiplies_by_divisor() {
        // {(-iz1)^2 (-iz2), Z0} = i (2 w1 + w2) (-iz1)^2 (-iz2)
        let z0 = z0();
        let m = HomoPoly::monomial(
            2,
            MultiIndexPair::new(&[2, 1], &[0, 0]),
            ComplexInterval::new(Interval::ONE, Interval::ZERO),
        );
        let b = m.poisson(&z0);
        assert_eq!(b.len(), 1);
        let c = b.coeff(&MultiIndexPair::new(&[2, 1], &[0, 0])).unwrap();
        // divisor = 2 - sqrt(2)/2 = 1.2928932...
        assert!(c.re.contains_zero());
        assert!(c.im.contains(2.0 - std::f64::consts::SQRT_2 / 2.0));
        assert!(c.im.width() < 1e-14);
    }

    #[test]
    fn lie_apply_degree_bookkeeping() {
        let chi = HomoPoly::monomial(
            2,
            MultiIndexPair::new(&[2, 1], &[0, 0]),
            ComplexInterval::point(0.25, 0.0),
        );
        let g = HomoPoly::monomial(
            2,
            MultiIndexPair::new(&[0, 0], &[1, 2]),
            ComplexInterval::point(1.0, 0.0),
        );
        let terms = lie_apply(&chi, &g, 7);
        let degrees: Vec<u32> = terms.iter().map(|t| t.degree()).collect();
        assert_eq!(degrees, vec![3, 4, 5, 6, 7]);
        // j = 0 term is g itself
        assert_eq!(terms[0], g);
    }

    #[test]
    fn norm_of_zero() {
        let z = HomoPoly::zero(2, 3);
        let n = z.norm();
        assert_eq!((n.lo(), n.hi()), (0.0, 0.0));
    }

    #[test]
    fn deriv_weight_single_monomial() {
        // chi = c (-iz1)^3: weight 3|c|
        let chi = HomoPoly::monomial(
            2,
            MultiIndexPair::new(&[3, 0], &[0, 0]),
            ComplexInterval::point(0.5, 0.0),
        );
        let d = chi.deriv_weight();
        assert!(d.contains(1.5));
        assert!(d.width() < 1e-14);
    }

    #[test]
    fn sup_norm_scaling_law() {
        let f = HomoPoly::monomial(
            2,
            MultiIndexPair::new(&[1, 1], &[1, 0]),
            ComplexInterval::point(1.0, 0.0),
        );
        let b1 = f.sup_norm_bound(0.1);
        assert!((b1.logval - (0.001f64).ln()).abs() < 1e-12);
        let b2 = f.sup_norm_bound(0.01);
        // bound(rho) - bound(rho/10) = degree * log 10 up to rounding slack
        assert!((b1.logval - b2.logval - 3.0 * (10.0f64).ln()).abs() < 1e-10);
    }

    #[test]
    fn hex_float_round_trip() {
        for &x in &[0.0, 1.0, -1.0, 0.1, std::f64::consts::PI, 2.0f64.powi(-300), -3.5e208] {
            let s = fmt_hex_f64(x);
            let back = parse_hex_f64(&s).unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }

    #[test]
    fn fixture_lines_round_trip() {
        let f = HomoPoly::from_terms(
            2,
            3,
            vec![
                (
                    MultiIndexPair::new(&[2, 1], &[0, 0]),
                    ComplexInterval::new(
                        Interval::new(0.25, 0.2500001),
                        Interval::new(-0.1, -0.0999999),
                    ),
                ),
                (
                    MultiIndexPair::new(&[0, 0], &[0, 3]),
                    ComplexInterval::point(-0.11785113019775792, 0.0),
                ),
            ],
        )
        .unwrap();
        let lines = f.to_lines();
        let joined: Vec<&str> = lines.iter().map(String::as_str).collect();
        let back = HomoPoly::from_lines(2, 3, joined).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn truncated_fixture_is_an_error() {
        let err = HomoPoly::from_lines(2, 3, vec!["2,1 0,0 0x1p+0"]).unwrap_err();
        match err {
            PolyError::Parse { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected: {other}"),
        }
    }
}
