//! Truncated formal power series in designated grading variables.
//!
//! A [`GradedSeries`] stores, for each monomial in the grading variables of
//! total degree at most the truncation order, a coefficient polynomial that
//! is free of grading variables. Multiplication is the exact convolution
//! through the truncation order; inversion is the recursive convolution
//! inverse and requires an invertible scalar constant term.
//!
//! A series with an empty grading set degenerates to a single polynomial
//! coefficient; the identity verifier uses this to treat polynomial
//! identities and series identities uniformly.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::mpoly::MPoly;
use crate::qrat::QRat;
use crate::vars::{Mono, VarSet, VarUniverse};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSeries {
    uni: VarUniverse,
    grading: VarSet,
    order: u32,
    coeffs: BTreeMap<Mono, MPoly>,
}

impl GradedSeries {
    pub fn zero(uni: VarUniverse, grading: VarSet, order: u32) -> GradedSeries {
        GradedSeries {
            uni,
            grading,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(uni: VarUniverse, grading: VarSet, order: u32) -> GradedSeries {
        let mut s = GradedSeries::zero(uni, grading, order);
        s.add_term(Mono::ONE, MPoly::one(uni));
        s
    }

    pub fn constant(uni: VarUniverse, grading: VarSet, order: u32, c: &MPoly) -> GradedSeries {
        let mut s = GradedSeries::zero(uni, grading, order);
        s.add_term(Mono::ONE, c.clone());
        s
    }

    pub fn grading(&self) -> VarSet {
        self.grading
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn universe(&self) -> VarUniverse {
        self.uni
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> MPoly {
        self.coeffs
            .get(m)
            .cloned()
            .unwrap_or_else(|| MPoly::zero(self.uni))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &MPoly)> {
        self.coeffs.iter()
    }

    /// Accumulate `c` at grading monomial `m`, dropping anything beyond the
    /// truncation order. The coefficient must not mention grading variables
    /// and the monomial must be supported on them.
    pub fn add_term(&mut self, m: Mono, c: MPoly) {
        debug_assert!(
            m.split(self.grading).1.is_one(),
            "grading monomial has non-grading support"
        );
        assert!(
            !c.contains_any(self.grading),
            "coefficient mentions a grading variable"
        );
        if c.is_zero() || m.degree_in(self.grading) > self.order as i32 {
            return;
        }
        match self.coeffs.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Split an arbitrary polynomial into a series by extracting powers of
    /// the grading variables; terms above the order are truncated away.
    pub fn embed(f: &MPoly, grading: VarSet, order: u32) -> GradedSeries {
        let mut s = GradedSeries::zero(f.universe(), grading, order);
        for (m, c) in f.iter() {
            let (g, rest) = m.split(grading);
            s.add_term(g, MPoly::term(f.universe(), c.clone(), rest));
        }
        s
    }

    pub fn add(&self, other: &GradedSeries) -> Result<GradedSeries> {
        if self.grading != other.grading {
            return Err(Error::GradingMismatch);
        }
        let mut out = GradedSeries::zero(self.uni, self.grading, self.order.min(other.order));
        for (m, c) in &self.coeffs {
            out.add_term(*m, c.clone());
        }
        for (m, c) in &other.coeffs {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GradedSeries) -> Result<GradedSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedSeries {
        GradedSeries {
            uni: self.uni,
            grading: self.grading,
            order: self.order,
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    /// Exact truncated convolution; the result order is the smaller operand
    /// order.
    pub fn mul(&self, other: &GradedSeries) -> Result<GradedSeries> {
        if self.grading != other.grading {
            return Err(Error::GradingMismatch);
        }
        let order = self.order.min(other.order);
        let mut out = GradedSeries::zero(self.uni, self.grading, order);
        for (m1, c1) in &self.coeffs {
            let d1 = m1.degree_in(self.grading);
            if d1 > order as i32 {
                continue;
            }
            for (m2, c2) in &other.coeffs {
                if d1 + m2.degree_in(self.grading) > order as i32 {
                    continue;
                }
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn mul_mpoly(&self, f: &MPoly) -> GradedSeries {
        assert!(
            !f.contains_any(self.grading),
            "multiplier mentions a grading variable"
        );
        let mut out = GradedSeries::zero(self.uni, self.grading, self.order);
        for (m, c) in &self.coeffs {
            out.add_term(*m, c.mul(f));
        }
        out
    }

    pub fn mul_qrat(&self, c: &QRat) -> GradedSeries {
        let mut out = GradedSeries::zero(self.uni, self.grading, self.order);
        for (m, cf) in &self.coeffs {
            out.add_term(*m, cf.mul_qrat(c));
        }
        out
    }

    /// Multiply by `c * g * rest` where `g` is supported on grading
    /// variables and `rest` on the others.
    pub fn mul_scaled_mono(&self, c: &QRat, m: &Mono) -> Result<GradedSeries> {
        let (g, rest) = m.split(self.grading);
        let mut out = GradedSeries::zero(self.uni, self.grading, self.order);
        for (k, cf) in &self.coeffs {
            let km = k.mul(&g);
            if km.degree_in(self.grading) > self.order as i32 {
                continue;
            }
            let poly = MPoly::term(self.uni, c.clone(), rest);
            out.add_term(km, cf.mul(&poly));
        }
        Ok(out)
    }

    /// Convolution inverse through the truncation order. The constant term
    /// must be an invertible scalar.
    pub fn invert(&self) -> Result<GradedSeries> {
        let c0 = self
            .coeff(&Mono::ONE)
            .as_constant()
            .ok_or(Error::NonUnitConstantTerm)?;
        if c0.is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let c0_inv = c0.inv();
        let mut inv = GradedSeries::zero(self.uni, self.grading, self.order);
        inv.add_term(Mono::ONE, MPoly::constant(self.uni, c0_inv.clone()));
        // Process target monomials in ascending graded-lex order; every
        // convolution partner of smaller degree is already final.
        let targets = grading_monomials(self.grading, self.order);
        for e in targets {
            if e.is_one() {
                continue;
            }
            let mut acc = MPoly::zero(self.uni);
            for (f, cf) in &self.coeffs {
                if f.is_one() {
                    continue;
                }
                let rem = e.div(f);
                if rem.0.iter().any(|&x| x < 0) {
                    continue;
                }
                let prev = inv.coeff(&rem);
                if prev.is_zero() {
                    continue;
                }
                acc = acc.add(&cf.mul(&prev));
            }
            if acc.is_zero() {
                continue;
            }
            inv.add_term(e, acc.mul_qrat(&c0_inv.neg()));
        }
        Ok(inv)
    }

    /// First grading monomial (ascending) where the two series differ,
    /// together with the difference of coefficients there.
    pub fn first_mismatch(&self, other: &GradedSeries) -> Option<(Mono, MPoly)> {
        let order = self.order.min(other.order);
        let mut keys: Vec<Mono> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .copied()
            .filter(|m| m.degree_in(self.grading) <= order as i32)
            .collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let d = self.coeff(&k).sub(&other.coeff(&k));
            if !d.is_zero() {
                return Some((k, d));
            }
        }
        None
    }
}

/// All monomials supported on `grading` with total degree <= order, in
/// ascending graded-lex order.
pub fn grading_monomials(grading: VarSet, order: u32) -> Vec<Mono> {
    let vars: Vec<_> = grading.iter().collect();
    let mut out = vec![Mono::ONE];
    for v in vars {
        let mut next = Vec::new();
        for m in &out {
            let base = m.degree_in(grading);
            for e in 0..=(order as i32 - base) {
                let mut mm = *m;
                mm.0[v.index()] = e as i16;
                next.push(mm);
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qrat::one_minus_q_pow;
    use crate::vars::Var;

    fn uni() -> VarUniverse {
        VarUniverse::default()
    }

    fn tset() -> VarSet {
        VarSet::of(&[Var::T])
    }

    /// 1 - t
    fn one_minus_t(order: u32) -> GradedSeries {
        let mut s = GradedSeries::one(uni(), tset(), order);
        s.add_term(Mono::var(Var::T), MPoly::one(uni()).neg());
        s
    }

    #[test]
    fn geometric_series_telescopes() {
        let n = 8;
        let mut geo = GradedSeries::zero(uni(), tset(), n);
        for k in 0..=n {
            geo.add_term(Mono::var_pow(Var::T, k as i16), MPoly::one(uni()));
        }
        let prod = geo.mul(&one_minus_t(n)).unwrap();
        assert_eq!(prod, GradedSeries::one(uni(), tset(), n));
    }

    #[test]
    fn invert_geometric() {
        let n = 6;
        let inv = one_minus_t(n).invert().unwrap();
        for k in 0..=n {
            assert!(inv.coeff(&Mono::var_pow(Var::T, k as i16)).is_one());
        }
        // invert(1 - x t q) = sum (xq)^n t^n
        let mut s = GradedSeries::one(uni(), tset(), n);
        s.add_term(
            Mono::var(Var::T),
            MPoly::term(uni(), QRat::q_pow(1).neg(), Mono::var(Var::X)),
        );
        let inv = s.invert().unwrap();
        for k in 0..=n as i16 {
            let c = inv.coeff(&Mono::var_pow(Var::T, k));
            let expect = MPoly::term(
                uni(),
                QRat::q_pow(k as i64),
                Mono::var_pow(Var::X, k),
            );
            assert_eq!(c, expect);
        }
    }

    #[test]
    fn invert_is_involution() {
        let n = 5;
        let mut s = GradedSeries::one(uni(), tset(), n);
        s.add_term(
            Mono::var(Var::T),
            MPoly::term(uni(), one_minus_q_pow(1), Mono::var(Var::X)),
        );
        s.add_term(
            Mono::var_pow(Var::T, 2),
            MPoly::term(uni(), QRat::from_int(3), Mono::var_pow(Var::Y, 2)),
        );
        let inv = s.invert().unwrap();
        assert_eq!(inv.invert().unwrap(), s);
        assert_eq!(s.mul(&inv).unwrap(), GradedSeries::one(uni(), tset(), n));
    }

    #[test]
    fn bigraded_truncation_by_total_degree() {
        let g = VarSet::of(&[Var::T, Var::Omega]);
        let mut s = GradedSeries::zero(uni(), g, 2);
        s.add_term(
            Mono::var(Var::T).mul(&Mono::var_pow(Var::Omega, 2)),
            MPoly::one(uni()),
        );
        // total degree 3 > order 2: dropped
        assert!(s.is_zero());
        let ms = grading_monomials(g, 2);
        assert_eq!(ms.len(), 6); // 1, t, w, t^2, tw, w^2
    }

    #[test]
    fn embed_splits_grading_powers() {
        let f = MPoly::var(uni(), Var::X)
            .mul(&MPoly::var(uni(), Var::T))
            .add(&MPoly::one(uni()));
        let s = GradedSeries::embed(&f, tset(), 4);
        assert!(s.coeff(&Mono::ONE).is_one());
        assert_eq!(s.coeff(&Mono::var(Var::T)), MPoly::var(uni(), Var::X));
    }

    #[test]
    fn grading_mismatch_is_an_error() {
        let a = GradedSeries::one(uni(), tset(), 3);
        let b = GradedSeries::one(uni(), VarSet::of(&[Var::Omega]), 3);
        assert!(matches!(a.mul(&b), Err(Error::GradingMismatch)));
    }
}
