//! The coefficient field Q(q).
//!
//! A [`QRat`] is a ratio of two integer-coefficient polynomials in q in a
//! unique normal form: numerator and denominator share no polynomial factor
//! and no integer content, and the lowest-order nonzero coefficient of the
//! denominator is positive. Normal forms are unique, so equality is plain
//! structural comparison — the verifier relies on this to compare series
//! without any arithmetic.
//!
//! Rational-number content lives in the integer coefficients themselves
//! (e.g. one half is `1/2` with numerator polynomial 1 and denominator
//! polynomial 2), which keeps every operation in integer arithmetic.

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, Integer, One, Zero};

use crate::rational::Rational;
use crate::zpoly::ZPoly;

/// An element of Q(q) in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QRat {
    num: ZPoly,
    den: ZPoly,
}

impl QRat {
    pub fn zero() -> QRat {
        QRat {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> QRat {
        QRat {
            num: ZPoly::one(),
            den: ZPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> QRat {
        QRat {
            num: ZPoly::constant(BigInt::from(n)),
            den: ZPoly::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> QRat {
        QRat::normalize(
            ZPoly::constant(r.numer().clone()),
            ZPoly::constant(r.denom().clone()),
        )
    }

    /// q^e for any integer e (negative exponents give 1/q^|e|).
    pub fn q_pow(e: i64) -> QRat {
        if e >= 0 {
            QRat {
                num: ZPoly::monomial(BigInt::one(), e as usize),
                den: ZPoly::one(),
            }
        } else {
            QRat {
                num: ZPoly::one(),
                den: ZPoly::monomial(BigInt::one(), (-e) as usize),
            }
        }
    }

    /// c * q^e.
    pub fn monomial(c: i64, e: i64) -> QRat {
        &QRat::from_int(c) * &QRat::q_pow(e)
    }

    pub(crate) fn from_zpoly(p: ZPoly) -> QRat {
        QRat {
            num: p,
            den: ZPoly::one(),
        }
    }

    fn normalize(num: ZPoly, den: ZPoly) -> QRat {
        assert!(!den.is_zero(), "QRat with zero denominator");
        if num.is_zero() {
            return QRat::zero();
        }
        let mut num = num;
        let mut den = den;
        if !den.is_one() {
            let g = ZPoly::gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
            let c = num.content_big().gcd(&den.content_big());
            if !c.is_one() {
                num = num.div_scalar_exact(&c);
                den = den.div_scalar_exact(&c);
            }
        }
        if den.trailing_sign() == Sign::Minus {
            num = num.neg();
            den = den.neg();
        }
        QRat { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is the constant 1 (a polynomial element).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Recognise c * q^e with c = ±1 convenience: returns e when self == q^e.
    pub fn as_q_power(&self) -> Option<i64> {
        if self.num.is_one() && self.den.term_count() == 1 && self.den.lc_big().is_one() {
            return Some(-(self.den.deg().unwrap() as i64));
        }
        if self.den.is_one()
            && self.num.term_count() == 1
            && self.num.lc_big().is_one()
        {
            return Some(self.num.deg().unwrap() as i64);
        }
        None
    }

    pub fn neg(&self) -> QRat {
        QRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &QRat) -> QRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return QRat::normalize(self.num.add(&other.num), self.den.clone());
        }
        if self.den.is_one() {
            let num = self.num.mul(&other.den).add(&other.num);
            return QRat::normalize(num, other.den.clone());
        }
        if other.den.is_one() {
            let num = other.num.mul(&self.den).add(&self.num);
            return QRat::normalize(num, self.den.clone());
        }
        // Reduced addition: work modulo g = gcd(d1, d2) so the final
        // normalisation only has to cancel against g.
        let g = ZPoly::gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            // denominators coprime: only integer content can cancel
            return QRat::normalize_content_only(num, den);
        }
        let d1g = self.den.div_exact(&g).unwrap();
        let d2g = other.den.div_exact(&g).unwrap();
        let t = self.num.mul(&d2g).add(&other.num.mul(&d1g));
        if t.is_zero() {
            return QRat::zero();
        }
        let g2 = ZPoly::gcd(&t, &g);
        let (t, den) = if g2.is_one() {
            (t, self.den.mul(&d2g))
        } else {
            (
                t.div_exact(&g2).unwrap(),
                self.den.div_exact(&g2).unwrap().mul(&d2g),
            )
        };
        QRat::normalize_content_only(t, den)
    }

    /// Normalisation when the polynomial parts are already known coprime.
    fn normalize_content_only(num: ZPoly, den: ZPoly) -> QRat {
        if num.is_zero() {
            return QRat::zero();
        }
        let mut num = num;
        let mut den = den;
        let c = num.content_big().gcd(&den.content_big());
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        if den.trailing_sign() == Sign::Minus {
            num = num.neg();
            den = den.neg();
        }
        QRat { num, den }
    }

    pub fn sub(&self, other: &QRat) -> QRat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &QRat) -> QRat {
        if self.is_zero() || other.is_zero() {
            return QRat::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        // Cross-cancel before multiplying so the result needs no further
        // polynomial gcd.
        let (n1, d2) = QRat::cross_cancel(&self.num, &other.den);
        let (n2, d1) = QRat::cross_cancel(&other.num, &self.den);
        QRat::normalize_content_only(n1.mul(&n2), d1.mul(&d2))
    }

    fn cross_cancel(n: &ZPoly, d: &ZPoly) -> (ZPoly, ZPoly) {
        if d.is_one() || n.is_zero() {
            return (n.clone(), d.clone());
        }
        let g = ZPoly::gcd(n, d);
        if g.is_one() {
            (n.clone(), d.clone())
        } else {
            (n.div_exact(&g).unwrap(), d.div_exact(&g).unwrap())
        }
    }

    pub fn inv(&self) -> QRat {
        assert!(!self.is_zero(), "inverse of zero in Q(q)");
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.trailing_sign() == Sign::Minus {
            num = num.neg();
            den = den.neg();
        }
        QRat { num, den }
    }

    pub fn div(&self, other: &QRat) -> QRat {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> QRat {
        if e == 0 {
            return QRat::one();
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = QRat::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Exact evaluation at a rational q; None when the denominator vanishes.
    pub fn eval(&self, q: &Rational) -> Option<Rational> {
        let d = self.den.eval_rational(q);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(q) / d)
    }

    /// Render as `num/den`, parenthesising multi-term polynomials. The
    /// denominator is always printed, e.g. `(1+q)/1`.
    pub fn render(&self) -> String {
        let n = self.num.render();
        let d = self.den.render();
        let np = if self.num.term_count() > 1 {
            format!("({})", n)
        } else {
            n
        };
        let dp = if self.den.term_count() > 1 {
            format!("({})", d)
        } else {
            d
        };
        format!("{}/{}", np, dp)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        QRat::add(self, rhs)
    }
}

impl std::ops::Sub for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        QRat::sub(self, rhs)
    }
}

impl std::ops::Mul for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::mul(self, rhs)
    }
}

impl std::ops::Div for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        QRat::div(self, rhs)
    }
}

impl std::ops::Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat::neg(self)
    }
}

/// 1 - q^e as a QRat (e > 0).
pub fn one_minus_q_pow(e: u32) -> QRat {
    let mut c = vec![0i128; e as usize + 1];
    c[0] = 1;
    c[e as usize] = -1;
    QRat::from_zpoly(ZPoly::small(c))
}

/// 1 + q^e as a QRat (e > 0).
pub fn one_plus_q_pow(e: u32) -> QRat {
    let mut c = vec![0i128; e as usize + 1];
    c[0] = 1;
    c[e as usize] = 1;
    QRat::from_zpoly(ZPoly::small(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn canonical_form_examples() {
        // 1/(1-q): denominator trailing coefficient must be positive
        let r = QRat::one().div(&one_minus_q_pow(1));
        assert_eq!(r.render(), "1/(1-q)");
        // -1/(q-1) normalises to the same value
        let s = QRat::from_int(-1).div(&QRat::q_pow(1).sub(&QRat::one()));
        assert_eq!(r, s);
    }

    #[test]
    fn arithmetic_with_cancellation() {
        let a = QRat::one().div(&one_minus_q_pow(1));
        let b = QRat::q_pow(1).div(&one_minus_q_pow(1));
        // 1/(1-q) - q/(1-q) = 1
        assert!(a.sub(&b).is_one());
        // (1-q^2)/(1-q) = 1+q
        let c = one_minus_q_pow(2).div(&one_minus_q_pow(1));
        assert_eq!(c, one_plus_q_pow(1));
    }

    #[test]
    fn rational_content_stays_integer() {
        let half = QRat::from_rational(&rat(1, 2));
        assert_eq!(half.render(), "1/2");
        let q_half = half.mul(&QRat::q_pow(1));
        assert_eq!(q_half.render(), "q/2");
        assert_eq!(q_half.add(&q_half), QRat::q_pow(1));
    }

    #[test]
    fn q_power_recognition() {
        assert_eq!(QRat::q_pow(3).as_q_power(), Some(3));
        assert_eq!(QRat::q_pow(-2).as_q_power(), Some(-2));
        assert_eq!(QRat::one().as_q_power(), Some(0));
        assert_eq!(QRat::from_int(2).as_q_power(), None);
        assert_eq!(one_plus_q_pow(1).as_q_power(), None);
    }

    #[test]
    fn eval_and_poles() {
        let r = QRat::one().div(&one_minus_q_pow(1));
        assert_eq!(r.eval(&rat(1, 2)), Some(rat(2, 1)));
        assert_eq!(r.eval(&rat(1, 1)), None);
    }

    #[test]
    fn pow_negative() {
        let r = one_minus_q_pow(1); // 1-q
        let p = r.pow(-2);
        assert_eq!(p.mul(&r).mul(&r), QRat::one());
    }
}
