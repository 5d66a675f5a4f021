//! The homogeneous operator D_xy, the q-derivative D_a, and the truncated
//! q-exponential operator T(bD_a).
//!
//! D_xy{f} = [f(x, q^{-1}y) - f(qx, y)] / (x - q^{-1}y) acts on polynomials
//! in the two operator variables, and coefficient-wise on series whose
//! coefficients contain them. The division is an exact polynomial division;
//! a nonzero remainder means f is outside the operator's domain and
//! surfaces as NotDivisible.
//!
//! D_a{f} = [f(a) - f(qa)] / a. On a series graded BY the operator variable,
//! D_a acts on the grading exponents directly: c a^k -> c (1-q^k) a^{k-1}.
//!
//! Operator powers are iterated single steps throughout, so closed-form
//! claims about them are genuinely tested rather than assumed.

use crate::error::Result;
use crate::mpoly::{MPoly, SubstRule};
use crate::qrat::{one_minus_q_pow, QRat};
use crate::qseries::{qq, GradedMonomial};
use crate::series::GradedSeries;
use crate::vars::{Mono, Var};

/// D_xy on a polynomial.
pub fn dxy_poly(f: &MPoly, x: Var, y: Var) -> Result<MPoly> {
    let uni = f.universe();
    let up = f.subst(&[SubstRule::scale(y, QRat::q_pow(-1))])?;
    let down = f.subst(&[SubstRule::scale(x, QRat::q_pow(1))])?;
    let num = up.sub(&down);
    let den = MPoly::var(uni, x).sub(&MPoly::var(uni, y).mul_qrat(&QRat::q_pow(-1)));
    num.exact_div(&den)
}

/// D_xy coefficient-wise on a series (the operator variables live in the
/// coefficients, not the grading).
pub fn dxy_series(f: &GradedSeries, x: Var, y: Var) -> Result<GradedSeries> {
    let mut out = GradedSeries::zero(f.universe(), f.grading(), f.order());
    for (m, c) in f.iter() {
        out.add_term(*m, dxy_poly(c, x, y)?);
    }
    Ok(out)
}

pub fn dxy_power_poly(f: &MPoly, x: Var, y: Var, k: u32) -> Result<MPoly> {
    let mut acc = f.clone();
    for _ in 0..k {
        acc = dxy_poly(&acc, x, y)?;
    }
    Ok(acc)
}

pub fn dxy_power_series(f: &GradedSeries, x: Var, y: Var, k: u32) -> Result<GradedSeries> {
    let mut acc = f.clone();
    for _ in 0..k {
        acc = dxy_series(&acc, x, y)?;
    }
    Ok(acc)
}

/// D_a on a polynomial: [f(a) - f(qa)] / a. The constant term cancels by
/// construction, so the division by the bare variable is exact.
pub fn dq_poly(f: &MPoly, a: Var) -> Result<MPoly> {
    let uni = f.universe();
    let shifted = f.subst(&[SubstRule::scale(a, QRat::q_pow(1))])?;
    f.sub(&shifted).exact_div(&MPoly::var(uni, a))
}

pub fn dq_power_poly(f: &MPoly, a: Var, n: u32) -> Result<MPoly> {
    let mut acc = f.clone();
    for _ in 0..n {
        acc = dq_poly(&acc, a)?;
    }
    Ok(acc)
}

/// D_v on a series graded by v: the coefficient at v^k moves to v^{k-1}
/// scaled by (1 - q^k).
pub fn dq_series_grading(f: &GradedSeries, v: Var) -> GradedSeries {
    assert!(
        f.grading().contains(v),
        "operator variable must be a grading variable"
    );
    let mut out = GradedSeries::zero(f.universe(), f.grading(), f.order());
    for (m, c) in f.iter() {
        let k = m.exp(v);
        if k == 0 {
            continue;
        }
        let lowered = m.div(&Mono::var(v));
        out.add_term(lowered, c.mul_qrat(&one_minus_q_pow(k as u32)));
    }
    out
}

pub fn dq_power_series_grading(f: &GradedSeries, v: Var, n: u32) -> GradedSeries {
    let mut acc = f.clone();
    for _ in 0..n {
        acc = dq_series_grading(&acc, v);
    }
    acc
}

/// T(bD_a){f} = sum_n b^n D_a^n{f} / (q;q)_n on a polynomial, with `b` a
/// plain variable. Terminates because D_a^n kills polynomials of a-degree
/// below n.
pub fn t_exp_poly(b: Var, a: Var, f: &MPoly) -> Result<MPoly> {
    let uni = f.universe();
    let bound = f.degree_in(a).max(0) as u32;
    let bv = MPoly::var(uni, b);
    let mut acc = MPoly::zero(uni);
    let mut d = f.clone();
    for n in 0..=bound {
        acc = acc.add(&bv.pow(n).mul(&d).mul_qrat(&QRat::one().div(&qq(n))));
        if n < bound {
            d = dq_poly(&d, a)?;
        }
    }
    Ok(acc)
}

/// T(bD_v){f} on a series graded by v, with `b` a scaled monomial carrying
/// at least one grading variable so the sum truncates at the series order.
pub fn t_exp_series(b: &GradedMonomial, v: Var, f: &GradedSeries) -> Result<GradedSeries> {
    let grading = f.grading();
    let step = b.grading_degree(grading);
    if step < 1 {
        return Err(crate::error::Error::NotGraded);
    }
    let order = f.order();
    let mut out = GradedSeries::zero(f.universe(), grading, order);
    let mut d = f.clone();
    let nmax = order / step as u32;
    for n in 0..=nmax {
        let bp = b.pow(n);
        let term = d
            .mul_qrat(&bp.coeff.div(&qq(n)))
            .mul_scaled_mono(&QRat::one(), &bp.mono)?;
        out = out.add(&term)?;
        if n < nmax {
            d = dq_series_grading(&d, v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::families::{cauchy_p, rs_r};
    use crate::qseries::{euler_neg, euler_pos, qbinom, GradedMonomial};
    use crate::vars::{VarSet, VarUniverse};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn uni() -> VarUniverse {
        VarUniverse::default()
    }

    #[test]
    fn dxy_on_cauchy_polynomials() {
        // D_xy{p_1} = 1 - q
        let p1 = cauchy_p(uni(), 1, Var::X, Var::Y);
        let d = dxy_poly(&p1, Var::X, Var::Y).unwrap();
        assert_eq!(d, MPoly::constant(uni(), one_minus_q_pow(1)));
        // D_xy{1} = 0
        assert!(dxy_poly(&MPoly::one(uni()), Var::X, Var::Y)
            .unwrap()
            .is_zero());
        // D_xy{p_n} = (1 - q^n) p_{n-1}
        for n in 1..=8u32 {
            let pn = cauchy_p(uni(), n, Var::X, Var::Y);
            let d = dxy_poly(&pn, Var::X, Var::Y).unwrap();
            let expect =
                cauchy_p(uni(), n - 1, Var::X, Var::Y).mul_qrat(&one_minus_q_pow(n));
            assert_eq!(d, expect, "n={}", n);
        }
    }

    #[test]
    fn dxy_powers_iterate() {
        // k = 0 is the identity
        let p4 = cauchy_p(uni(), 4, Var::X, Var::Y);
        assert_eq!(dxy_power_poly(&p4, Var::X, Var::Y, 0).unwrap(), p4);
        // D_xy^2{p_4} = (q;q)_4/(q;q)_2 p_2
        let d2 = dxy_power_poly(&p4, Var::X, Var::Y, 2).unwrap();
        let expect =
            cauchy_p(uni(), 2, Var::X, Var::Y).mul_qrat(&qq(4).div(&qq(2)));
        assert_eq!(d2, expect);
    }

    #[test]
    fn dxy_out_of_domain_is_not_divisible() {
        // f = x^2 + y is not in the operator's natural domain
        let f = MPoly::var(uni(), Var::X)
            .pow(2)
            .add(&MPoly::var(uni(), Var::Y));
        assert!(matches!(
            dxy_poly(&f, Var::X, Var::Y),
            Err(Error::NotDivisible { .. })
        ));
    }

    #[test]
    fn dxy_on_euler_ratio_multiplies_by_t() {
        // D_xy^k{(yt;q)_inf/(xt;q)_inf} = t^k (yt;q)_inf/(xt;q)_inf
        let g = VarSet::of(&[Var::T]);
        let n = 8;
        let yt = GradedMonomial::of(&[Var::Y, Var::T]);
        let xt = GradedMonomial::of(&[Var::X, Var::T]);
        let ratio = euler_pos(uni(), g, n, &yt)
            .unwrap()
            .mul(&euler_neg(uni(), g, n, &xt).unwrap())
            .unwrap();
        for k in 0..=4u32 {
            let lhs = dxy_power_series(&ratio, Var::X, Var::Y, k).unwrap();
            let rhs = ratio
                .mul_scaled_mono(&QRat::one(), &Mono::var_pow(Var::T, k as i16))
                .unwrap();
            assert_eq!(lhs, rhs, "k={}", k);
        }
    }

    #[test]
    fn dq_on_monomials() {
        // D_a{a^n} = (1-q^n) a^{n-1}
        for n in 1..=6u32 {
            let f = MPoly::var(uni(), Var::A).pow(n);
            let d = dq_poly(&f, Var::A).unwrap();
            let expect = MPoly::var(uni(), Var::A)
                .pow(n - 1)
                .mul_qrat(&one_minus_q_pow(n));
            assert_eq!(d, expect);
        }
        assert!(dq_poly(&MPoly::one(uni()), Var::A).unwrap().is_zero());
    }

    fn random_poly_in_a<R: Rng>(rng: &mut R, deg: u32) -> MPoly {
        let mut f = MPoly::zero(uni());
        for e in 0..=deg {
            let c: i64 = rng.gen_range(-3..=3);
            let qe: i64 = rng.gen_range(0..=2);
            if c != 0 {
                f = f.add(&MPoly::term(
                    uni(),
                    QRat::monomial(c, qe),
                    Mono::var_pow(Var::A, e as i16),
                ));
            }
        }
        f
    }

    #[test]
    fn leibniz_rule_on_random_pairs() {
        // D_a^n{fg} = sum_k q^{k(k-n)} [n k]_q D_a^k{f} D_a^{n-k}{g(a q^k)}
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let f = random_poly_in_a(&mut rng, 5);
            let g = random_poly_in_a(&mut rng, 5);
            let n = rng.gen_range(0..=4u32);
            let lhs = dq_power_poly(&f.mul(&g), Var::A, n).unwrap();
            let mut rhs = MPoly::zero(uni());
            for k in 0..=n {
                let gf = g
                    .subst(&[SubstRule::scale(Var::A, QRat::q_pow(k as i64))])
                    .unwrap();
                let term = dq_power_poly(&f, Var::A, k)
                    .unwrap()
                    .mul(&dq_power_poly(&gf, Var::A, n - k).unwrap())
                    .mul_qrat(
                        &QRat::q_pow(k as i64 * (k as i64 - n as i64))
                            .mul(&qbinom(n as i64, k as i64)),
                    );
                rhs = rhs.add(&term);
            }
            assert_eq!(lhs, rhs, "n={}", n);
        }
    }

    #[test]
    fn operators_are_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let f = random_poly_in_a(&mut rng, 4);
            let g = random_poly_in_a(&mut rng, 4);
            let c = QRat::monomial(rng.gen_range(1..=3), rng.gen_range(0..=2));
            let sum = f.mul_qrat(&c).add(&g);
            let lhs = dq_poly(&sum, Var::A).unwrap();
            let rhs = dq_poly(&f, Var::A)
                .unwrap()
                .mul_qrat(&c)
                .add(&dq_poly(&g, Var::A).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn t_exp_generates_rogers_szego() {
        // T(xD_y){y^n} = r_n(x, y)
        for n in 0..=10u32 {
            let f = MPoly::var(uni(), Var::Y).pow(n);
            let t = t_exp_poly(Var::X, Var::Y, &f).unwrap();
            assert_eq!(t, rs_r(uni(), n, Var::X, Var::Y), "n={}", n);
        }
        // T(bD_a){1} = 1
        assert!(t_exp_poly(Var::B, Var::A, &MPoly::one(uni())).unwrap().is_one());
    }

    #[test]
    fn dq_series_grading_matches_polynomial_action() {
        let g = VarSet::of(&[Var::T]);
        // series sum_k x^k t^k viewed with t as the operator variable
        let mut s = GradedSeries::zero(uni(), g, 6);
        for k in 0..=6i16 {
            s.add_term(
                Mono::var_pow(Var::T, k),
                MPoly::var(uni(), Var::X).pow(k as u32),
            );
        }
        let d = dq_series_grading(&s, Var::T);
        for k in 1..=6i16 {
            let c = d.coeff(&Mono::var_pow(Var::T, k - 1));
            let expect = MPoly::var(uni(), Var::X)
                .pow(k as u32)
                .mul_qrat(&one_minus_q_pow(k as u32));
            assert_eq!(c, expect);
        }
    }

    use crate::qrat::one_minus_q_pow;
    use crate::qseries::qq;
}
