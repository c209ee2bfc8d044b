//! Exact polynomial algebra over the field Q[sqrt(2)] with complex
//! coefficients, plus a reference normalization pipeline.
//!
//! The Hénon–Heiles complexification introduces one factor 1/sqrt(2) per
//! degree, so with rational frequencies every coefficient generated by the
//! normalization algorithm stays inside Q[sqrt(2)].  This module runs the whole
//! explicit construction in that field, with no rounding anywhere; enclosures
//! are produced only at the very end when a norm is requested.

use crate::{rat, sqrt_bounds, Rat, RatBounds};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// Element a + b*sqrt(2) of Q[sqrt(2)].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q2 {
    pub a: Rat,
    pub b: Rat,
}

impl Q2 {
    pub fn zero() -> Self {
        Q2 { a: Rat::zero(), b: Rat::zero() }
    }

    pub fn from_rat(a: Rat) -> Self {
        Q2 { a, b: Rat::zero() }
    }

    pub fn sqrt2_times(b: Rat) -> Self {
        Q2 { a: Rat::zero(), b }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Q2) -> Q2 {
        Q2 { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &Q2) -> Q2 {
        Q2 { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn mul(&self, o: &Q2) -> Q2 {
        Q2 {
            a: &self.a * &o.a + rat(2, 1) * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }

    pub fn neg(&self) -> Q2 {
        Q2 { a: -self.a.clone(), b: -self.b.clone() }
    }

    pub fn scale(&self, s: &Rat) -> Q2 {
        Q2 { a: &self.a * s, b: &self.b * s }
    }

    pub fn div_rat(&self, s: &Rat) -> Q2 {
        Q2 { a: &self.a / s, b: &self.b / s }
    }

    /// Rational enclosure of the real value a + b*sqrt(2).
    pub fn bounds(&self, bits: u32) -> RatBounds {
        let s2 = sqrt_bounds(&rat(2, 1), bits);
        let (blo, bhi) = if self.b.is_negative() {
            (&self.b * &s2.hi, &self.b * &s2.lo)
        } else {
            (&self.b * &s2.lo, &self.b * &s2.hi)
        };
        RatBounds { lo: &self.a + blo, hi: &self.a + bhi }
    }
}

/// Complex number over Q[sqrt(2)].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CQ2 {
    pub re: Q2,
    pub im: Q2,
}

impl CQ2 {
    pub fn zero() -> Self {
        CQ2 { re: Q2::zero(), im: Q2::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &CQ2) -> CQ2 {
        CQ2 { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &CQ2) -> CQ2 {
        CQ2 { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &CQ2) -> CQ2 {
        CQ2 {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn neg(&self) -> CQ2 {
        CQ2 { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn mul_i(&self) -> CQ2 {
        CQ2 { re: self.im.neg(), im: self.re.clone() }
    }

    pub fn scale_rat(&self, s: &Rat) -> CQ2 {
        CQ2 { re: self.re.scale(s), im: self.im.scale(s) }
    }

    pub fn div_rat(&self, s: &Rat) -> CQ2 {
        CQ2 { re: self.re.div_rat(s), im: self.im.div_rat(s) }
    }

    pub fn mul_int(&self, k: i64) -> CQ2 {
        self.scale_rat(&rat(k, 1))
    }

    /// Enclosure of |re|^2 + |im|^2.
    fn modulus_sq_bounds(&self, bits: u32) -> RatBounds {
        let r = self.re.bounds(bits);
        let i = self.im.bounds(bits);
        let sq = |b: &RatBounds| -> RatBounds {
            // Both endpoints may be negative; the square's range over [lo, hi].
            let c = [&b.lo * &b.lo, &b.lo * &b.hi, &b.hi * &b.hi];
            let mut lo = c[0].clone();
            let mut hi = c[0].clone();
            for v in &c[1..] {
                if *v < lo {
                    lo = v.clone();
                }
                if *v > hi {
                    hi = v.clone();
                }
            }
            if b.lo.is_negative() && !b.hi.is_negative() {
                lo = Rat::zero();
            }
            RatBounds { lo: lo.max(Rat::zero()), hi }
        };
        sq(&r).add(&sq(&i))
    }

    /// Enclosure of the complex modulus.
    pub fn modulus_bounds(&self, bits: u32) -> RatBounds {
        let sq = self.modulus_sq_bounds(bits);
        let lo = sqrt_bounds(&sq.lo, bits).lo;
        let hi = sqrt_bounds(&sq.hi, bits).hi;
        RatBounds { lo, hi }
    }
}

pub type Key = ([u8; 2], [u8; 2]);

/// Sparse homogeneous polynomial in the two complexified degrees of freedom.
#[derive(Debug, Clone, Default)]
pub struct XPoly {
    pub terms: BTreeMap<Key, CQ2>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn insert(&mut self, key: Key, c: CQ2) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(CQ2::zero);
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, o: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.insert(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> XPoly {
        XPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect() }
    }

    pub fn scale_rat(&self, s: &Rat) -> XPoly {
        if s.is_zero() {
            return XPoly::zero();
        }
        XPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.scale_rat(s))).collect() }
    }

    pub fn div_rat(&self, s: &Rat) -> XPoly {
        XPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.div_rat(s))).collect() }
    }

    pub fn mul(&self, o: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for ((la, ta), ca) in &self.terms {
            for ((lb, tb), cb) in &o.terms {
                let key = ([la[0] + lb[0], la[1] + lb[1]], [ta[0] + tb[0], ta[1] + tb[1]]);
                out.insert(key, ca.mul(cb));
            }
        }
        out
    }

    /// Poisson bracket with the slots of (-i z_j) as coordinates and those of
    /// conj(z_j) as momenta.
    pub fn poisson(&self, o: &XPoly) -> XPoly {
        let mut out = XPoly::zero();
        for ((la, ta), ca) in &self.terms {
            for ((lb, tb), cb) in &o.terms {
                for j in 0..2 {
                    let factor =
                        i64::from(la[j]) * i64::from(tb[j]) - i64::from(ta[j]) * i64::from(lb[j]);
                    if factor == 0 {
                        continue;
                    }
                    let mut l = [la[0] + lb[0], la[1] + lb[1]];
                    let mut t = [ta[0] + tb[0], ta[1] + tb[1]];
                    l[j] -= 1;
                    t[j] -= 1;
                    out.insert((l, t), ca.mul(cb).mul_int(factor));
                }
            }
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms
            .keys()
            .next()
            .map(|(l, t)| u32::from(l[0]) + u32::from(l[1]) + u32::from(t[0]) + u32::from(t[1]))
            .unwrap_or(0)
    }

    /// Enclosure of the coefficient-modulus sum.
    pub fn norm_bounds(&self, bits: u32) -> RatBounds {
        let mut out = RatBounds::point(Rat::zero());
        for c in self.terms.values() {
            out = out.add(&c.modulus_bounds(bits));
        }
        out
    }

    /// Enclosure of the derivative-weighted modulus sum (the sharpened Lie
    /// estimate kernel).
    pub fn dr_bounds(&self, bits: u32) -> RatBounds {
        let mut out = RatBounds::point(Rat::zero());
        for ((l, t), c) in &self.terms {
            let w = *l.iter().chain(t.iter()).max().unwrap() as i64;
            out = out.add(&c.modulus_bounds(bits).scale_int(w));
        }
        out
    }

    pub fn split_kept(&self) -> (XPoly, XPoly) {
        let mut kept = XPoly::zero();
        let mut removed = XPoly::zero();
        for ((l, t), c) in &self.terms {
            if l == t {
                kept.insert((*l, *t), c.clone());
            } else {
                removed.insert((*l, *t), c.clone());
            }
        }
        (kept, removed)
    }
}

/// Exact reference run of the explicit (non-resonant) normalization for the
/// Hénon–Heiles model with rational frequencies `omega = (1, q)`.
pub struct ExactRun {
    pub omega2: Rat,
    /// Perturbative classes: class index -> polynomial (degree = class + 2).
    pub classes: BTreeMap<u32, XPoly>,
    /// Normal-form terms Z_1..: class index -> polynomial.
    pub z_terms: BTreeMap<u32, XPoly>,
    /// Generating functions per step.
    pub chi: BTreeMap<u32, XPoly>,
    pub max_class: u32,
    pub steps_done: u32,
}

impl ExactRun {
    /// Initial state with the complexified cubic x1^2 x2 - x2^3/3.
    pub fn henon_heiles(omega2: Rat, max_class: u32) -> ExactRun {
        // x_j = (i xi_j + eta_j)/sqrt(2) = sqrt(2)/2 * (i xi_j + eta_j).
        let half_s2 = Q2::sqrt2_times(rat(1, 2));
        let mk_x = |j: usize| -> XPoly {
            let mut p = XPoly::zero();
            let mut l = [0u8; 2];
            l[j] = 1;
            p.insert((l, [0, 0]), CQ2 { re: Q2::zero(), im: half_s2.clone() });
            let mut t = [0u8; 2];
            t[j] = 1;
            p.insert(([0, 0], t), CQ2 { re: half_s2.clone(), im: Q2::zero() });
            p
        };
        let x1 = mk_x(0);
        let x2 = mk_x(1);
        let f1 = x1.mul(&x1).mul(&x2).add(&x2.mul(&x2).mul(&x2).scale_rat(&rat(-1, 3)));
        let mut classes = BTreeMap::new();
        classes.insert(1, f1);
        ExactRun {
            omega2,
            classes,
            z_terms: BTreeMap::new(),
            chi: BTreeMap::new(),
            max_class,
            steps_done: 0,
        }
    }

    fn divisor(&self, l: &[u8; 2], t: &[u8; 2]) -> Rat {
        let k1 = i64::from(l[0]) - i64::from(t[0]);
        let k2 = i64::from(l[1]) - i64::from(t[1]);
        rat(k1, 1) + rat(k2, 1) * &self.omega2
    }

    /// chi_r and Z_r from the class-r polynomial.
    pub fn solve_homological(&self, f_r: &XPoly) -> (XPoly, XPoly) {
        let mut chi = XPoly::zero();
        let mut z = XPoly::zero();
        for ((l, t), c) in &f_r.terms {
            if l == t {
                z.insert((*l, *t), c.clone());
            } else {
                let d = self.divisor(l, t);
                assert!(!d.is_zero(), "exact resonance in oracle");
                // -c / (i d) = (i c) / d
                chi.insert((*l, *t), c.mul_i().div_rat(&d));
            }
        }
        (chi, z)
    }

    /// One explicit normalization step, keeping classes up to `max_class`.
    pub fn step(&mut self) {
        let r = self.steps_done + 1;
        let f_r = self.classes.remove(&r).unwrap_or_else(XPoly::zero);
        let (chi, z_r) = self.solve_homological(&f_r);
        let mut new: BTreeMap<u32, XPoly> = BTreeMap::new();
        let push = |cls: u32, p: XPoly, new: &mut BTreeMap<u32, XPoly>| {
            if !p.is_zero() {
                let e = new.entry(cls).or_insert_with(XPoly::zero);
                *e = e.add(&p);
            }
        };
        // Z0 chain via the homological identity: L_chi Z0 = Z_r - f_r.
        let (_, removed) = f_r.split_kept();
        let mut g = removed.neg();
        let mut j = 1u32;
        while (j + 1) * r <= self.max_class {
            j += 1;
            g = chi.poisson(&g).div_rat(&rat(i64::from(j), 1));
            push(j * r, g.clone(), &mut new);
        }
        // f_r chain.
        let mut g = f_r.clone();
        let mut j = 0u32;
        while r + (j + 1) * r <= self.max_class {
            j += 1;
            g = chi.poisson(&g).div_rat(&rat(i64::from(j), 1));
            push(r + j * r, g.clone(), &mut new);
        }
        // Z_m chains, 1 <= m < r.
        for (&m, zm) in &self.z_terms {
            if m >= r || zm.is_zero() {
                continue;
            }
            let mut g = zm.clone();
            let mut j = 0u32;
            while m + (j + 1) * r <= self.max_class {
                j += 1;
                g = chi.poisson(&g).div_rat(&rat(i64::from(j), 1));
                push(m + j * r, g.clone(), &mut new);
            }
        }
        // f_s chains, s > r.
        for (&s, fs) in &self.classes {
            if s <= r || fs.is_zero() {
                continue;
            }
            let mut g = fs.clone();
            let mut j = 0u32;
            while s + (j + 1) * r <= self.max_class {
                j += 1;
                g = chi.poisson(&g).div_rat(&rat(i64::from(j), 1));
                push(s + j * r, g.clone(), &mut new);
            }
        }
        for (cls, p) in new {
            let e = self.classes.entry(cls).or_insert_with(XPoly::zero);
            *e = e.add(&p);
        }
        self.z_terms.insert(r, z_r);
        self.chi.insert(r, chi);
        self.steps_done = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_matches_known_coefficients() {
        let run = ExactRun::henon_heiles(rat(-617, 1000), 4);
        let f1 = &run.classes[&1];
        assert_eq!(f1.terms.len(), 10);
        // coefficient of (-i z1)^2 (-i z2): -i sqrt(2)/4
        let c = &f1.terms[&([2, 1], [0, 0])];
        assert!(c.re.is_zero());
        assert_eq!(c.im, Q2::sqrt2_times(rat(-1, 4)));
        // coefficient of conj(z2)^3: -sqrt(2)/12
        let c = &f1.terms[&([0, 0], [0, 3])];
        assert_eq!(c.re, Q2::sqrt2_times(rat(-1, 12)));
        assert!(c.im.is_zero());
    }

    #[test]
    fn poisson_antisymmetry() {
        let run = ExactRun::henon_heiles(rat(-617, 1000), 4);
        let f1 = &run.classes[&1];
        let sq = f1.mul(f1);
        let ab = f1.poisson(&sq);
        let ba = sq.poisson(f1);
        assert_eq!(ab.add(&ba).terms.len(), 0);
    }

    #[test]
    fn homological_equation_exact() {
        let mut run = ExactRun::henon_heiles(rat(-617, 1000), 6);
        let f1 = run.classes[&1].clone();
        let (chi, z) = run.solve_homological(&f1);
        assert!(z.is_zero());
        // L_chi Z0 + f1 = Z1 = 0 with Z0 = i(xi1 eta1) + i w2 (xi2 eta2).
        let mut z0 = XPoly::zero();
        z0.insert(([1, 0], [1, 0]), CQ2 { re: Q2::zero(), im: Q2::from_rat(rat(1, 1)) });
        z0.insert(([0, 1], [0, 1]), CQ2 { re: Q2::zero(), im: Q2::from_rat(run.omega2.clone()) });
        let residual = chi.poisson(&z0).add(&f1);
        assert!(residual.is_zero(), "residual {:?}", residual.terms.len());
        run.step();
        assert_eq!(run.steps_done, 1);
        assert!(run.classes.contains_key(&2));
    }
}
