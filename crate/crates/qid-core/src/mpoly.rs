//! Sparse multivariate Laurent polynomials over Q(q).
//!
//! Terms are kept in a BTreeMap keyed by graded-lex monomial order, so every
//! polynomial is in canonical form by construction and equality is structural.
//! No zero coefficient is ever stored. Negative exponents are allowed only on
//! variables flagged Laurent in the universe.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::point::RatPoint;
use crate::qrat::QRat;
use crate::rational::Rational;
use crate::vars::{Mono, Var, VarSet, VarUniverse, ALL_VARS};

use num::Zero;

/// A multivariate Laurent polynomial over Q(q).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    uni: VarUniverse,
    terms: BTreeMap<Mono, QRat>,
}

/// A substitution target: variable -> coeff * monomial. The coefficient may
/// be zero (substituting zero for a variable).
#[derive(Clone, Debug)]
pub struct SubstRule {
    pub var: Var,
    pub coeff: QRat,
    pub mono: Mono,
}

impl SubstRule {
    /// v -> c * m
    pub fn new(var: Var, coeff: QRat, mono: Mono) -> SubstRule {
        SubstRule { var, coeff, mono }
    }

    /// v -> c * v (pure rescaling, e.g. x -> qx).
    pub fn scale(var: Var, coeff: QRat) -> SubstRule {
        SubstRule {
            var,
            coeff,
            mono: Mono::var(var),
        }
    }

    /// v -> c (constant substitution, e.g. a -> -q).
    pub fn constant(var: Var, coeff: QRat) -> SubstRule {
        SubstRule {
            var,
            coeff,
            mono: Mono::ONE,
        }
    }

    /// v -> 0.
    pub fn zero(var: Var) -> SubstRule {
        SubstRule::constant(var, QRat::zero())
    }
}

impl MPoly {
    pub fn zero(uni: VarUniverse) -> MPoly {
        MPoly {
            uni,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(uni: VarUniverse) -> MPoly {
        MPoly::constant(uni, QRat::one())
    }

    pub fn constant(uni: VarUniverse, c: QRat) -> MPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        MPoly { uni, terms }
    }

    pub fn var(uni: VarUniverse, v: Var) -> MPoly {
        MPoly::term(uni, QRat::one(), Mono::var(v))
    }

    pub fn term(uni: VarUniverse, c: QRat, m: Mono) -> MPoly {
        assert!(m.valid_in(&uni), "monomial violates Laurent permissions");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { uni, terms }
    }

    pub fn universe(&self) -> VarUniverse {
        self.uni
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::ONE)
                .is_some_and(|c| c.is_one())
    }

    /// Some(coefficient) when the polynomial is a scalar (possibly zero).
    pub fn as_constant(&self) -> Option<QRat> {
        match self.terms.len() {
            0 => Some(QRat::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &QRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> QRat {
        self.terms.get(m).cloned().unwrap_or_else(QRat::zero)
    }

    pub fn contains_any(&self, set: VarSet) -> bool {
        self.terms.keys().any(|m| m.touches(set))
    }

    pub fn total_degree(&self) -> i32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.terms
            .keys()
            .map(|m| m.exp(v) as i32)
            .max()
            .unwrap_or(0)
    }

    /// Total degree over a variable subset.
    pub fn degree_in_set(&self, set: VarSet) -> i32 {
        self.terms
            .keys()
            .map(|m| m.degree_in(set))
            .max()
            .unwrap_or(0)
    }

    fn insert_add(terms: &mut BTreeMap<Mono, QRat>, m: Mono, c: QRat) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
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

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.uni, other.uni, "universe mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, *m, c.clone());
        }
        MPoly {
            uni: self.uni,
            terms,
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.uni, other.uni, "universe mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, *m, c.neg());
        }
        MPoly {
            uni: self.uni,
            terms,
        }
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            uni: self.uni,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.uni, other.uni, "universe mismatch");
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(self.uni);
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                Self::insert_add(&mut terms, m1.mul(m2), c1.mul(c2));
            }
        }
        MPoly {
            uni: self.uni,
            terms,
        }
    }

    pub fn mul_qrat(&self, c: &QRat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.uni);
        }
        if c.is_one() {
            return self.clone();
        }
        MPoly {
            uni: self.uni,
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (*m, x.mul(c)))
                .collect(),
        }
    }

    /// Multiply by a monomial, validating Laurent permissions.
    pub fn mul_mono(&self, m: &Mono) -> Result<MPoly> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let km = k.mul(m);
            if !km.valid_in(&self.uni) {
                let bad = ALL_VARS
                    .into_iter()
                    .find(|v| km.exp(*v) < 0 && !self.uni.laurent_allowed(*v))
                    .unwrap();
                return Err(Error::NegativeExponent { var: bad });
            }
            terms.insert(km, c.clone());
        }
        Ok(MPoly {
            uni: self.uni,
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut acc = MPoly::one(self.uni);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division. Fails with the running remainder when `self` is not a
    /// multiple of `d` within this universe's Laurent permissions.
    pub fn exact_div(&self, d: &MPoly) -> Result<MPoly> {
        assert_eq!(self.uni, d.uni, "universe mismatch");
        assert!(!d.is_zero(), "division by zero polynomial");
        let (lt_m, lt_c) = d.terms.iter().next_back().map(|(m, c)| (*m, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.uni);
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.terms.iter().next_back().unwrap();
                (*m, c.clone())
            };
            let qm = rm.div(&lt_m);
            if !qm.valid_in(&self.uni) {
                return Err(Error::NotDivisible {
                    remainder: Box::new(rem),
                });
            }
            let qc = rc.div(&lt_c);
            Self::insert_add(&mut quot.terms, qm, qc.clone());
            let t = MPoly::term(self.uni, qc, qm);
            rem = rem.sub(&t.mul(d));
        }
        Ok(quot)
    }

    /// Simultaneous substitution of variables by scaled monomials. Targets
    /// are read off the original exponents only, so swaps like x <-> y work.
    pub fn subst(&self, rules: &[SubstRule]) -> Result<MPoly> {
        let mut rule_for: [Option<&SubstRule>; crate::vars::NVARS] = [None; crate::vars::NVARS];
        for r in rules {
            rule_for[r.var.index()] = Some(r);
        }
        let mut out = BTreeMap::new();
        'term: for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = Mono::ONE;
            for v in ALL_VARS {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                match rule_for[v.index()] {
                    None => mono = mono.mul(&Mono::var_pow(v, e)),
                    Some(r) => {
                        if r.coeff.is_zero() {
                            if e < 0 {
                                return Err(Error::PoleAtPoint);
                            }
                            continue 'term; // the whole term vanishes
                        }
                        coeff = coeff.mul(&r.coeff.pow(e as i64));
                        mono = mono.mul(&r.mono.pow(e));
                    }
                }
            }
            if !mono.valid_in(&self.uni) {
                let bad = ALL_VARS
                    .into_iter()
                    .find(|v| mono.exp(*v) < 0 && !self.uni.laurent_allowed(*v))
                    .unwrap();
                return Err(Error::NegativeExponent { var: bad });
            }
            Self::insert_add(&mut out, mono, coeff);
        }
        Ok(MPoly {
            uni: self.uni,
            terms: out,
        })
    }

    /// Exact evaluation at a rational point (q and every variable).
    pub fn eval(&self, p: &RatPoint) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let cv = c.eval(&p.q).ok_or(Error::PoleAtPoint)?;
            let mut term = cv;
            for v in ALL_VARS {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let val = p.value(v);
                if e < 0 && val.is_zero() {
                    return Err(Error::PoleAtPoint);
                }
                term *= pow_rational(val, e as i64);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Canonical rendering: terms in graded-lex descending order, each as
    /// `num/den * mono`, joined by ` + `.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.iter().rev() {
            if m.is_one() {
                parts.push(c.render());
            } else {
                parts.push(format!("{} * {}", c.render(), m.render()));
            }
        }
        parts.join(" + ")
    }
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    x.pow(e as i32)
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qrat::one_plus_q_pow;
    use crate::rational::rat;

    fn uni() -> VarUniverse {
        VarUniverse::default()
    }

    fn x() -> MPoly {
        MPoly::var(uni(), Var::X)
    }

    fn y() -> MPoly {
        MPoly::var(uni(), Var::Y)
    }

    #[test]
    fn additive_inverse() {
        assert!(x().add(&x().neg()).is_zero());
    }

    #[test]
    fn cauchy_p2_by_hand() {
        // (x - y)(x - qy) = x^2 - (1+q) x y + q y^2
        let f = x().sub(&y());
        let g = x().sub(&y().mul_qrat(&QRat::q_pow(1)));
        let p2 = f.mul(&g);
        let mut expect = MPoly::term(uni(), QRat::one(), Mono::var_pow(Var::X, 2));
        expect = expect.add(&MPoly::term(
            uni(),
            one_plus_q_pow(1).neg(),
            Mono::var(Var::X).mul(&Mono::var(Var::Y)),
        ));
        expect = expect.add(&MPoly::term(
            uni(),
            QRat::q_pow(1),
            Mono::var_pow(Var::Y, 2),
        ));
        assert_eq!(p2, expect);
    }

    #[test]
    fn mul_by_one_is_identity() {
        let f = x().mul(&y()).add(&MPoly::constant(uni(), QRat::from_int(3)));
        assert_eq!(f.mul(&MPoly::one(uni())), f);
    }

    #[test]
    fn exact_div_examples() {
        // (1-q)(x - q^{-1} y) / (x - q^{-1} y) = 1 - q
        let d = x().sub(&y().mul_qrat(&QRat::q_pow(-1)));
        let c = MPoly::constant(uni(), QRat::one().sub(&QRat::q_pow(1)));
        let f = c.mul(&d);
        assert_eq!(f.exact_div(&d).unwrap(), c);
        assert!(x().exact_div(&x()).unwrap().is_one());
        match x().exact_div(&y()) {
            Err(Error::NotDivisible { remainder }) => assert_eq!(*remainder, x()),
            other => panic!("expected NotDivisible, got {:?}", other),
        }
    }

    #[test]
    fn subst_examples() {
        // x -> qx on x - y
        let f = x().sub(&y());
        let g = f
            .subst(&[SubstRule::scale(Var::X, QRat::q_pow(1))])
            .unwrap();
        assert_eq!(g, x().mul_qrat(&QRat::q_pow(1)).sub(&y()));

        // p2 with y -> 0 gives x^2
        let p2 = x()
            .sub(&y())
            .mul(&x().sub(&y().mul_qrat(&QRat::q_pow(1))));
        let r = p2.subst(&[SubstRule::zero(Var::Y)]).unwrap();
        assert_eq!(r, x().mul(&x()));

        // scale cancellation: xy with x->qx, y->q^{-1}y
        let f = x().mul(&y());
        let r = f
            .subst(&[
                SubstRule::scale(Var::X, QRat::q_pow(1)),
                SubstRule::scale(Var::Y, QRat::q_pow(-1)),
            ])
            .unwrap();
        assert_eq!(r, f);
    }

    #[test]
    fn laurent_enforcement() {
        // y is not Laurent-allowed by default
        let err = x().mul_mono(&Mono::var_pow(Var::Y, -1));
        assert!(matches!(err, Err(Error::NegativeExponent { var: Var::Y })));
        // but A always is
        let ok = x().mul_mono(&Mono::var_pow(Var::QAlpha, -2));
        assert!(ok.is_ok());
    }

    #[test]
    fn eval_example() {
        // (1+q) x y at q=1/2, x=2, y=3 -> 9
        let f = x().mul(&y()).mul_qrat(&one_plus_q_pow(1));
        let p = RatPoint::constant(rat(1, 2)).with(Var::X, rat(2, 1)).with(Var::Y, rat(3, 1));
        assert_eq!(f.eval(&p).unwrap(), rat(9, 1));
        assert_eq!(MPoly::zero(uni()).eval(&p).unwrap(), rat(0, 1));
        // declared pole: 1/(1-q) at q=1
        let g = MPoly::constant(uni(), QRat::one().div(&crate::qrat::one_minus_q_pow(1)));
        let p1 = RatPoint::constant(rat(1, 1));
        assert!(matches!(g.eval(&p1), Err(Error::PoleAtPoint)));
    }

    #[test]
    fn render_canonical() {
        let p2 = x()
            .sub(&y())
            .mul(&x().sub(&y().mul_qrat(&QRat::q_pow(1))));
        assert_eq!(
            p2.render(),
            "1/1 * x^2 + (-1-q)/1 * x^1*y^1 + q/1 * y^2"
        );
    }
}
