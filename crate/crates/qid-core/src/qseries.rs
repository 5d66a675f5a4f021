//! q-shifted factorials, Gaussian and generalized q-binomial coefficients,
//! Euler product expansions, and truncated basic hypergeometric series.
//!
//! Conventions:
//!
//! - (a;q)_n = prod_{k=0}^{n-1} (1 - a q^k), with (a;q)_0 = 1.
//! - The classical Gaussian binomial [n k]_q is a polynomial in q.
//! - The generalized coefficients allow a complex upper index alpha through
//!   A = q^alpha; see [`AlphaMode`].
//! - Infinite products (m;q)_inf and their reciprocals are expanded as
//!   truncated series in the grading variables carried by `m`.

use crate::error::{Error, Result};
use crate::families::cauchy_p;
use crate::mpoly::MPoly;
use crate::qrat::{one_minus_q_pow, one_plus_q_pow, QRat};
use crate::series::GradedSeries;
use crate::vars::{Mono, Var, VarSet, VarUniverse};

/// How the upper index alpha of a generalized q-binomial coefficient is
/// interpreted.
///
/// - `Integer(n)`: every q^alpha becomes q^n.
/// - `Symbolic`: q^{alpha k} becomes A^k with A a Laurent-allowed variable.
/// - `Infinity`: the combination (-q^{-alpha};q)_k q^{alpha k} is replaced by
///   its limit q^{k(k-1)/2} (each factor q^alpha + q^j tends to q^j as
///   alpha grows with |q| < 1); equivalently [alpha k]_{-q} becomes
///   1/(-q;q)_k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphaMode {
    Integer(u32),
    Symbolic,
    Infinity,
}

impl serde::Serialize for AlphaMode {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.label())
    }
}

impl<'de> serde::Deserialize<'de> for AlphaMode {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        AlphaMode::parse(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("bad alpha mode: {}", s)))
    }
}

impl AlphaMode {
    pub fn label(&self) -> String {
        match self {
            AlphaMode::Integer(n) => format!("int:{}", n),
            AlphaMode::Symbolic => "sym".to_string(),
            AlphaMode::Infinity => "inf".to_string(),
        }
    }

    pub fn parse(s: &str) -> Option<AlphaMode> {
        match s {
            "sym" => Some(AlphaMode::Symbolic),
            "inf" => Some(AlphaMode::Infinity),
            _ => s
                .strip_prefix("int:")
                .and_then(|n| n.parse().ok())
                .map(AlphaMode::Integer),
        }
    }
}

/// A scalar multiple of a monomial, the argument shape accepted by the
/// series builders (e.g. x*t, y*w, or q^2 * z*t with coefficient q^2).
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMonomial {
    pub coeff: QRat,
    pub mono: Mono,
}

impl GradedMonomial {
    pub fn new(coeff: QRat, mono: Mono) -> GradedMonomial {
        GradedMonomial { coeff, mono }
    }

    /// Product of plain variables, unit coefficient.
    pub fn of(vars: &[Var]) -> GradedMonomial {
        let mut m = Mono::ONE;
        for v in vars {
            m = m.mul(&Mono::var(*v));
        }
        GradedMonomial {
            coeff: QRat::one(),
            mono: m,
        }
    }

    pub fn scaled(mut self, c: &QRat) -> GradedMonomial {
        self.coeff = self.coeff.mul(c);
        self
    }

    pub fn pow(&self, n: u32) -> GradedMonomial {
        GradedMonomial {
            coeff: self.coeff.pow(n as i64),
            mono: self.mono.pow(n as i16),
        }
    }

    /// Total degree carried in the grading variables.
    pub fn grading_degree(&self, grading: VarSet) -> i32 {
        self.mono.degree_in(grading)
    }

    pub fn as_mpoly(&self, uni: VarUniverse) -> MPoly {
        MPoly::term(uni, self.coeff.clone(), self.mono)
    }
}

/// C(k, 2) = k(k-1)/2.
pub fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// tau(r, s, k) = r*C(k,2) - s*C(k+1,2).
pub fn tau(r: i64, s: i64, k: i64) -> i64 {
    r * binom2(k) - s * binom2(k + 1)
}

/// (base; q)_n as a polynomial.
pub fn qpoch(base: &MPoly, n: u32) -> MPoly {
    let uni = base.universe();
    let mut acc = MPoly::one(uni);
    for k in 0..n {
        let factor = MPoly::one(uni).sub(&base.mul_qrat(&QRat::q_pow(k as i64)));
        acc = acc.mul(&factor);
    }
    acc
}

/// (a_1, ..., a_r; q)_n: product of qpoch over the bases.
pub fn qpoch_multi(bases: &[MPoly], n: u32) -> MPoly {
    let uni = bases.first().map(|b| b.universe()).unwrap_or_default();
    let mut acc = MPoly::one(uni);
    for b in bases {
        acc = acc.mul(&qpoch(b, n));
    }
    acc
}

/// Scalar Pochhammer (base in Q(q)).
pub fn qpoch_scalar(base: &QRat, n: u32) -> QRat {
    let mut acc = QRat::one();
    for k in 0..n {
        acc = acc.mul(&QRat::one().sub(&base.mul(&QRat::q_pow(k as i64))));
    }
    acc
}

/// (q;q)_n.
pub fn qq(n: u32) -> QRat {
    let mut acc = QRat::one();
    for k in 1..=n {
        acc = acc.mul(&one_minus_q_pow(k));
    }
    acc
}

/// (-q;q)_n.
pub fn negq(n: u32) -> QRat {
    let mut acc = QRat::one();
    for k in 1..=n {
        acc = acc.mul(&one_plus_q_pow(k));
    }
    acc
}

/// (q^2;q^2)_n = (q;q)_n (-q;q)_n.
pub fn q2q2(n: u32) -> QRat {
    let mut acc = QRat::one();
    for k in 1..=n {
        acc = acc.mul(&one_minus_q_pow(2 * k));
    }
    acc
}

/// Gaussian binomial [n k]_q; zero outside 0 <= k <= n.
pub fn qbinom(n: i64, k: i64) -> QRat {
    if k < 0 || k > n {
        return QRat::zero();
    }
    let k = k.min(n - k) as u32;
    let n = n as u32;
    let mut num = QRat::one();
    let mut den = QRat::one();
    for i in 1..=k {
        num = num.mul(&one_minus_q_pow(n - k + i));
        den = den.mul(&one_minus_q_pow(i));
    }
    num.div(&den)
}

/// (-q^{-alpha};q)_k * q^{alpha k}, the weighted Pochhammer that all three
/// alpha modes share: prod_{i=0}^{k-1} (q^alpha + q^i).
pub fn neg_alpha_poch_weighted(uni: VarUniverse, alpha: AlphaMode, k: u32) -> MPoly {
    match alpha {
        AlphaMode::Symbolic => {
            let a_var = MPoly::var(uni, Var::QAlpha);
            let mut acc = MPoly::one(uni);
            for i in 0..k {
                acc = acc.mul(&a_var.add(&MPoly::constant(uni, QRat::q_pow(i as i64))));
            }
            acc
        }
        AlphaMode::Integer(n0) => {
            let mut acc = QRat::one();
            for i in 0..k {
                acc = acc.mul(&QRat::q_pow(n0 as i64).add(&QRat::q_pow(i as i64)));
            }
            MPoly::constant(uni, acc)
        }
        AlphaMode::Infinity => MPoly::constant(uni, QRat::q_pow(binom2(k as i64))),
    }
}

/// Generalized q-binomial
/// [alpha k]_q = (q^{-alpha};q)_k / (q;q)_k * (-1)^k q^{alpha k - C(k,2)}.
pub fn gen_qbinom_q(uni: VarUniverse, alpha: AlphaMode, k: u32) -> MPoly {
    let weight = QRat::q_pow(-binom2(k as i64)).div(&qq(k));
    let signed = if k % 2 == 1 { weight.neg() } else { weight };
    match alpha {
        AlphaMode::Symbolic => {
            // (q^{-alpha};q)_k q^{alpha k} = prod (A - q^i)
            let a_var = MPoly::var(uni, Var::QAlpha);
            let mut acc = MPoly::one(uni);
            for i in 0..k {
                acc = acc.mul(&a_var.sub(&MPoly::constant(uni, QRat::q_pow(i as i64))));
            }
            acc.mul_qrat(&signed)
        }
        AlphaMode::Integer(n0) => {
            let mut acc = QRat::one();
            for i in 0..k {
                acc = acc.mul(&QRat::q_pow(n0 as i64).sub(&QRat::q_pow(i as i64)));
            }
            MPoly::constant(uni, acc.mul(&signed))
        }
        AlphaMode::Infinity => MPoly::constant(uni, QRat::one().div(&qq(k))),
    }
}

/// Generalized q-binomial with base -q:
/// [alpha k]_{-q} = (-q^{-alpha};q)_k / (-q;q)_k * q^{alpha k - C(k,2)}.
/// In Infinity mode this is 1/(-q;q)_k.
pub fn gen_qbinom_negq(uni: VarUniverse, alpha: AlphaMode, k: u32) -> MPoly {
    let weight = QRat::q_pow(-binom2(k as i64)).div(&negq(k));
    neg_alpha_poch_weighted(uni, alpha, k).mul_qrat(&weight)
}

/// (m;q)_inf = sum_{n<=N} (-1)^n q^{C(n,2)} m^n / (q;q)_n. The monomial must
/// carry at least one grading variable so truncation bounds the sum.
pub fn euler_pos(
    uni: VarUniverse,
    grading: VarSet,
    order: u32,
    m: &GradedMonomial,
) -> Result<GradedSeries> {
    let step = m.grading_degree(grading);
    if step < 1 {
        return Err(Error::NotGraded);
    }
    let mut s = GradedSeries::zero(uni, grading, order);
    let nmax = (order as i32 / step) as u32;
    for n in 0..=nmax {
        let c = QRat::q_pow(binom2(n as i64)).div(&qq(n));
        let c = if n % 2 == 1 { c.neg() } else { c };
        let p = m.pow(n);
        let (g, rest) = p.mono.split(grading);
        s.add_term(g, MPoly::term(uni, p.coeff.mul(&c), rest));
    }
    Ok(s)
}

/// 1/(m;q)_inf = sum_{n<=N} m^n / (q;q)_n.
pub fn euler_neg(
    uni: VarUniverse,
    grading: VarSet,
    order: u32,
    m: &GradedMonomial,
) -> Result<GradedSeries> {
    let step = m.grading_degree(grading);
    if step < 1 {
        return Err(Error::NotGraded);
    }
    let mut s = GradedSeries::zero(uni, grading, order);
    let nmax = (order as i32 / step) as u32;
    for n in 0..=nmax {
        let p = m.pow(n);
        let (g, rest) = p.mono.split(grading);
        s.add_term(g, MPoly::term(uni, p.coeff.div(&qq(n)), rest));
    }
    Ok(s)
}

/// (m;q)_j as a (finite) truncated series.
pub fn qpoch_graded(
    uni: VarUniverse,
    grading: VarSet,
    order: u32,
    m: &GradedMonomial,
    j: u32,
) -> Result<GradedSeries> {
    let mut acc = GradedSeries::one(uni, grading, order);
    for i in 0..j {
        let mut f = GradedSeries::one(uni, grading, order);
        let scaled = m.clone().scaled(&QRat::q_pow(i as i64));
        let (g, rest) = scaled.mono.split(grading);
        f.add_term(g, MPoly::term(uni, scaled.coeff.neg(), rest));
        acc = acc.mul(&f)?;
    }
    Ok(acc)
}

/// 1/(m;q)_j as a truncated series, computed along two independent routes
/// and cross-checked: convolution inversion of the finite product, and the
/// q-binomial theorem expansion sum_n (q^j;q)_n m^n/(q;q)_n.
pub fn qpoch_finite_inverse(
    uni: VarUniverse,
    grading: VarSet,
    order: u32,
    m: &GradedMonomial,
    j: u32,
) -> Result<GradedSeries> {
    if j == 0 {
        return Ok(GradedSeries::one(uni, grading, order));
    }
    let step = m.grading_degree(grading);
    if step < 1 {
        return Err(Error::NotGraded);
    }
    let via_invert = qpoch_graded(uni, grading, order, m, j)?.invert()?;

    let mut via_binomial = GradedSeries::zero(uni, grading, order);
    let nmax = (order as i32 / step) as u32;
    for n in 0..=nmax {
        let c = qpoch_scalar(&QRat::q_pow(j as i64), n).div(&qq(n));
        let p = m.pow(n);
        let (g, rest) = p.mono.split(grading);
        via_binomial.add_term(g, MPoly::term(uni, p.coeff.mul(&c), rest));
    }
    assert_eq!(
        via_invert, via_binomial,
        "finite Pochhammer inverse: expansion routes disagree"
    );
    Ok(via_invert)
}

/// A parameter of a basic hypergeometric series.
#[derive(Clone, Debug)]
pub enum PhiParam {
    /// An element of Q(q): contributes the scalar (c;q)_n.
    Scalar(QRat),
    /// A polynomial free of grading variables: contributes (f;q)_n.
    Poly(MPoly),
    /// A scaled monomial carrying grading variables. As a numerator this is
    /// the finite polynomial (m;q)_n; as a denominator it is expanded by
    /// [`qpoch_finite_inverse`].
    Graded(GradedMonomial),
    /// Numerator only: the ratio num/den, stored combined with the argument
    /// as the Cauchy polynomial p_n(den, num) — the argument must carry the
    /// factor `den`.
    Ratio { num: Var, den: Var },
    /// Denominator only: (q/v;q)_n with v a grading variable, expanded in
    /// positive powers of v as v^n (-1)^n q^{-n-C(n,2)} / (v q^{-n};q)_n.
    QOverGradedVar(Var),
}

/// Truncated basic hypergeometric series
/// sum_n [(-1)^n q^{C(n,2)}]^{1+s-r} (nums;q)_n / (dens;q)_n * arg^n/(q;q)_n.
///
/// The sum is bounded by the grading degree each term carries (from the
/// argument and any QOverGradedVar denominator), or by a terminating
/// numerator parameter equal to q^{-m}, detected syntactically. Without
/// either bound the call fails with NotGraded. A denominator parameter that
/// is a non-grading polynomial cannot be series-expanded and fails with
/// UnexpandableDenominator.
pub fn phi_rs(
    uni: VarUniverse,
    grading: VarSet,
    order: u32,
    nums: &[PhiParam],
    dens: &[PhiParam],
    arg: &GradedMonomial,
) -> Result<GradedSeries> {
    let r = nums.len() as i64;
    let s = dens.len() as i64;
    let bracket_exp = 1 + s - r;

    // grading degree each successive term gains
    let mut step = arg.grading_degree(grading);
    for d in dens {
        if let PhiParam::QOverGradedVar(_) = d {
            step += 1;
        }
    }
    // terminating numerator q^{-m}
    let mut terminator: Option<u32> = None;
    for p in nums {
        if let PhiParam::Scalar(c) = p {
            if let Some(e) = c.as_q_power() {
                if e <= 0 {
                    let m = (-e) as u32;
                    terminator = Some(terminator.map_or(m, |t: u32| t.min(m)));
                }
            }
        }
    }
    let nmax = match (terminator, step >= 1) {
        (Some(m), true) => m.min(order / step as u32),
        (Some(m), false) => m,
        (None, true) => order / step as u32,
        (None, false) => return Err(Error::NotGraded),
    };

    // a Ratio parameter consumes its denominator variable from the argument
    let ratio = nums.iter().find_map(|p| match p {
        PhiParam::Ratio { num, den } => Some((*num, *den)),
        _ => None,
    });
    let arg_eff = match ratio {
        None => arg.clone(),
        Some((_, den)) => {
            assert!(
                arg.mono.exp(den) >= 1,
                "ratio parameter requires its denominator variable in the argument"
            );
            GradedMonomial::new(arg.coeff.clone(), arg.mono.div(&Mono::var(den)))
        }
    };

    let mut out = GradedSeries::zero(uni, grading, order);
    for n in 0..=nmax {
        let mut scalar = QRat::one().div(&qq(n));
        if bracket_exp != 0 {
            let b = QRat::q_pow(binom2(n as i64));
            let b = if n % 2 == 1 { b.neg() } else { b };
            scalar = scalar.mul(&b.pow(bracket_exp));
        }
        let mut poly = MPoly::one(uni);
        let mut series = GradedSeries::one(uni, grading, order);
        for p in nums {
            match p {
                PhiParam::Scalar(c) => scalar = scalar.mul(&qpoch_scalar(c, n)),
                PhiParam::Poly(f) => poly = poly.mul(&qpoch(f, n)),
                PhiParam::Graded(gm) => {
                    series = series.mul(&qpoch_graded(uni, grading, order, gm, n)?)?
                }
                PhiParam::Ratio { num, den } => {
                    poly = poly.mul(&cauchy_p(uni, n, *den, *num));
                }
                PhiParam::QOverGradedVar(_) => {
                    panic!("QOverGradedVar is a denominator-only parameter")
                }
            }
        }
        for p in dens {
            match p {
                PhiParam::Scalar(c) => {
                    let d = qpoch_scalar(c, n);
                    if d.is_zero() {
                        return Err(Error::DenominatorVanishes);
                    }
                    scalar = scalar.div(&d);
                }
                PhiParam::Poly(_) => return Err(Error::UnexpandableDenominator),
                PhiParam::Graded(gm) => {
                    series = series.mul(&qpoch_finite_inverse(uni, grading, order, gm, n)?)?
                }
                PhiParam::Ratio { .. } => {
                    panic!("Ratio is a numerator-only parameter")
                }
                PhiParam::QOverGradedVar(v) => {
                    let c = QRat::q_pow(-(n as i64) - binom2(n as i64));
                    let c = if n % 2 == 1 { c.neg() } else { c };
                    scalar = scalar.mul(&c);
                    let vm = GradedMonomial::new(QRat::q_pow(-(n as i64)), Mono::var(*v));
                    let inv = qpoch_graded(uni, grading, order, &vm, n)?.invert()?;
                    series = series.mul(&inv)?;
                    series =
                        series.mul_scaled_mono(&QRat::one(), &Mono::var_pow(*v, n as i16))?;
                }
            }
        }
        let a = arg_eff.pow(n);
        let (a_grade, a_rest) = a.mono.split(grading);
        let term = series
            .mul_mpoly(&poly.mul(&MPoly::term(uni, a.coeff.mul(&scalar), a_rest)))
            .mul_scaled_mono(&QRat::one(), &a_grade)?;
        out = out.add(&term)?;
    }
    Ok(out)
}
