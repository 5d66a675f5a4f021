//! Constructors for the q-polynomial families.
//!
//! Every constructor returns an [`MPoly`] in canonical form and accepts the
//! variables it acts on as role parameters, so the same formula serves the
//! (x, y) and (u, v) instantiations. Degenerate input n = 0 always returns 1
//! (empty sums and products).

use crate::mpoly::{MPoly, SubstRule};
use crate::qrat::QRat;
use crate::qseries::{
    binom2, gen_qbinom_negq, gen_qbinom_q, qbinom, qpoch, qq, tau, AlphaMode,
};
use crate::vars::{Var, VarUniverse};

/// Cauchy polynomial p_n(first, second) = prod_{i=0}^{n-1} (first - q^i second).
pub fn cauchy_p(uni: VarUniverse, n: u32, first: Var, second: Var) -> MPoly {
    let f = MPoly::var(uni, first);
    let s = MPoly::var(uni, second);
    let mut acc = MPoly::one(uni);
    for i in 0..n {
        acc = acc.mul(&f.sub(&s.mul_qrat(&QRat::q_pow(i as i64))));
    }
    acc
}

/// Variable roles for the five-parameter family: the two Cauchy variables,
/// the expansion variable and the Pochhammer parameter.
#[derive(Clone, Copy, Debug)]
pub struct LRoles {
    pub x: Var,
    pub y: Var,
    pub z: Var,
    pub a: Var,
}

impl Default for LRoles {
    fn default() -> Self {
        LRoles {
            x: Var::X,
            y: Var::Y,
            z: Var::Z,
            a: Var::A,
        }
    }
}

/// The generalized five-variable polynomial
///
/// L_n^{(r,s)}(alpha, x, y, z, a) =
///   sum_k [n k]_q [alpha k]_{-q} q^{tau(r,s,k) + C(k,2)} (a;q)_k
///         p_{n-k}(x, y) z^k.
pub fn ltilde(uni: VarUniverse, n: u32, r: i64, s: i64, alpha: AlphaMode) -> MPoly {
    ltilde_roles(uni, n, r, s, alpha, LRoles::default())
}

pub fn ltilde_roles(
    uni: VarUniverse,
    n: u32,
    r: i64,
    s: i64,
    alpha: AlphaMode,
    roles: LRoles,
) -> MPoly {
    let a = MPoly::var(uni, roles.a);
    let z = MPoly::var(uni, roles.z);
    let mut acc = MPoly::zero(uni);
    for k in 0..=n {
        let scalar = qbinom(n as i64, k as i64)
            .mul(&QRat::q_pow(tau(r, s, k as i64) + binom2(k as i64)));
        let term = gen_qbinom_negq(uni, alpha, k)
            .mul_qrat(&scalar)
            .mul(&qpoch(&a, k))
            .mul(&cauchy_p(uni, n - k, roles.x, roles.y))
            .mul(&z.pow(k));
        acc = acc.add(&term);
    }
    acc
}

/// The four-variable specialisation (no second Cauchy variable):
///
/// L_{m,n}(alpha, x, z, a) =
///   sum_k [n k]_q [alpha k]_{-q} q^{tau(m,n,k) + C(k,2)} (a;q)_k z^k x^{n-k}.
pub fn l_jia(uni: VarUniverse, n: u32, m: i64, nn: i64, alpha: AlphaMode) -> MPoly {
    let a = MPoly::var(uni, Var::A);
    let z = MPoly::var(uni, Var::Z);
    let x = MPoly::var(uni, Var::X);
    let mut acc = MPoly::zero(uni);
    for k in 0..=n {
        let scalar = qbinom(n as i64, k as i64)
            .mul(&QRat::q_pow(tau(m, nn, k as i64) + binom2(k as i64)));
        let term = gen_qbinom_negq(uni, alpha, k)
            .mul_qrat(&scalar)
            .mul(&qpoch(&a, k))
            .mul(&z.pow(k))
            .mul(&x.pow(n - k));
        acc = acc.add(&term);
    }
    acc
}

/// First Cigler extension:
/// C_n(x, y, b) = sum_k (-1)^k q^{C(k,2)} [alpha k]_q b^k
///                (q;q)_n/(q;q)_{n-k} p_{n-k}(x, y).
pub fn cigler_c(uni: VarUniverse, n: u32, alpha: AlphaMode, b: Var) -> MPoly {
    let bv = MPoly::var(uni, b);
    let mut acc = MPoly::zero(uni);
    for k in 0..=n {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let scalar = QRat::monomial(sign, binom2(k as i64)).mul(&qq(n).div(&qq(n - k)));
        let term = gen_qbinom_q(uni, alpha, k)
            .mul_qrat(&scalar)
            .mul(&bv.pow(k))
            .mul(&cauchy_p(uni, n - k, Var::X, Var::Y));
        acc = acc.add(&term);
    }
    acc
}

/// Second Cigler extension:
/// D_n(x, y, b) = sum_k q^{C(k,2)} [alpha k]_q b^k (q;q)_n/(q;q)_{n-k}
///                [(-1)^{n+k} q^{-C(n,2)} p_{n-k}(y, x)].
pub fn cigler_d(uni: VarUniverse, n: u32, alpha: AlphaMode, b: Var) -> MPoly {
    let bv = MPoly::var(uni, b);
    let mut acc = MPoly::zero(uni);
    for k in 0..=n {
        let sign = if (n + k) % 2 == 1 { -1 } else { 1 };
        let scalar = QRat::q_pow(binom2(k as i64))
            .mul(&qq(n).div(&qq(n - k)))
            .mul(&QRat::monomial(sign, -binom2(n as i64)));
        let term = gen_qbinom_q(uni, alpha, k)
            .mul_qrat(&scalar)
            .mul(&bv.pow(k))
            .mul(&cauchy_p(uni, n - k, Var::Y, Var::X));
        acc = acc.add(&term);
    }
    acc
}

/// Hahn polynomial phi_n^{(sigma)}(x) = sum_k [n k]_q (sigma;q)_k x^k.
pub fn hahn_phi(uni: VarUniverse, n: u32, sigma: Var, x: Var) -> MPoly {
    let s = MPoly::var(uni, sigma);
    let xv = MPoly::var(uni, x);
    let mut acc = MPoly::zero(uni);
    for k in 0..=n {
        let term = qpoch(&s, k)
            .mul_qrat(&qbinom(n as i64, k as i64))
            .mul(&xv.pow(k));
        acc = acc.add(&term);
    }
    acc
}

/// Rogers-Szego polynomial r_n(x, y) = sum_k [n k]_q x^k y^{n-k}.
pub fn rs_r(uni: VarUniverse, n: u32, x: Var, y: Var) -> MPoly {
    let xv = MPoly::var(uni, x);
    let yv = MPoly::var(uni, y);
    let mut acc = MPoly::zero(uni);
    for k in 0..=n {
        let term = xv
            .pow(k)
            .mul(&yv.pow(n - k))
            .mul_qrat(&qbinom(n as i64, k as i64));
        acc = acc.add(&term);
    }
    acc
}

/// Trivariate polynomial F_n(x, y, z), defined by reduction:
/// F_n = (-1)^n q^{-C(n,2)} L_n^{(0,0)} at alpha = Infinity with
/// (x, y, z, a) -> (y, x, -z, -q). The (-q;q)_k arising from (a;q)_k cancels
/// the Infinity-mode denominator exactly.
pub fn f_trivariate(uni: VarUniverse, n: u32) -> MPoly {
    let lt = ltilde(uni, n, 0, 0, AlphaMode::Infinity);
    let swapped = lt
        .subst(&[
            SubstRule::new(Var::X, QRat::one(), crate::vars::Mono::var(Var::Y)),
            SubstRule::new(Var::Y, QRat::one(), crate::vars::Mono::var(Var::X)),
            SubstRule::scale(Var::Z, QRat::from_int(-1)),
            SubstRule::constant(Var::A, QRat::q_pow(1).neg()),
        ])
        .expect("reduction substitution stays polynomial");
    let sign = if n % 2 == 1 { -1 } else { 1 };
    swapped.mul_qrat(&QRat::monomial(sign, -binom2(n as i64)))
}

/// F_n with the Cauchy roles renamed, for the mixed generating function.
pub fn f_trivariate_roles(uni: VarUniverse, n: u32, x: Var, y: Var, z: Var) -> MPoly {
    let f = f_trivariate(uni, n);
    f.subst(&[
        SubstRule::new(Var::X, QRat::one(), crate::vars::Mono::var(x)),
        SubstRule::new(Var::Y, QRat::one(), crate::vars::Mono::var(y)),
        SubstRule::new(Var::Z, QRat::one(), crate::vars::Mono::var(z)),
    ])
    .expect("renaming substitution stays polynomial")
}

/// rho_e(n, y, x): L_n^{(0,-1)} at alpha = Integer(n) with
/// (x, y, z, a) = (1, 0, x, -qy). Emitted as the definition.
pub fn rho_e(uni: VarUniverse, n: u32) -> MPoly {
    let lt = ltilde(uni, n, 0, -1, AlphaMode::Integer(n));
    lt.subst(&[
        SubstRule::constant(Var::X, QRat::one()),
        SubstRule::zero(Var::Y),
        SubstRule::new(Var::Z, QRat::one(), crate::vars::Mono::var(Var::X)),
        SubstRule::new(Var::A, QRat::q_pow(1).neg(), crate::vars::Mono::var(Var::Y)),
    ])
    .expect("reduction substitution stays polynomial")
}

/// Homogeneous Rogers-Szego h_n(x, y): L_n^{(-1,0)} at alpha = Infinity with
/// z = 1, a = -q. Emitted as the definition.
pub fn rs_h(uni: VarUniverse, n: u32) -> MPoly {
    let lt = ltilde(uni, n, -1, 0, AlphaMode::Infinity);
    lt.subst(&[
        SubstRule::constant(Var::Z, QRat::one()),
        SubstRule::constant(Var::A, QRat::q_pow(1).neg()),
    ])
    .expect("reduction substitution stays polynomial")
}

/// Rogers-Szego g_n(z, x): L_n^{(-1,0)} at alpha = Infinity with
/// x -> x q^{-n}, y = 0, a = -q. Emitted as the definition.
pub fn rs_g(uni: VarUniverse, n: u32) -> MPoly {
    let lt = ltilde(uni, n, -1, 0, AlphaMode::Infinity);
    lt.subst(&[
        SubstRule::scale(Var::X, QRat::q_pow(-(n as i64))),
        SubstRule::zero(Var::Y),
        SubstRule::constant(Var::A, QRat::q_pow(1).neg()),
    ])
    .expect("reduction substitution stays polynomial")
}

/// One reduction instance: a name, both sides (equal sides for emit-only
/// items), and whether the pair is an equality to check or a definition to
/// display.
pub struct Reduction {
    pub name: &'static str,
    pub lhs: MPoly,
    pub rhs: MPoly,
    pub is_equality: bool,
}

/// The five reduction instances at the given parameters. Items 1 and 2 are
/// equalities against in-crate definitions; items 3-5 only emit the reduced
/// polynomial, which serves as the definition.
pub fn reduction_suite(
    uni: VarUniverse,
    n: u32,
    r: i64,
    s: i64,
    alpha: AlphaMode,
) -> Vec<Reduction> {
    let mut out = Vec::new();

    // item 1: y = 0 collapses the Cauchy factor to a power of x
    let at_y0 = ltilde(uni, n, r, s, alpha)
        .subst(&[SubstRule::zero(Var::Y)])
        .unwrap();
    out.push(Reduction {
        name: "y0-specialisation",
        lhs: at_y0,
        rhs: l_jia(uni, n, r, s, alpha),
        is_equality: true,
    });

    // item 2: the trivariate reduction carries weight (-1)^n q^{C(n,2)};
    // compare the defining substitution against an independently expanded
    // form of F_n (the Infinity-mode cancellation worked out by hand).
    let sign = if n % 2 == 1 { -1 } else { 1 };
    let weighted = f_trivariate(uni, n).mul_qrat(&QRat::monomial(sign, binom2(n as i64)));
    let lt_sub = ltilde(uni, n, 0, 0, AlphaMode::Infinity)
        .subst(&[
            SubstRule::new(Var::X, QRat::one(), crate::vars::Mono::var(Var::Y)),
            SubstRule::new(Var::Y, QRat::one(), crate::vars::Mono::var(Var::X)),
            SubstRule::scale(Var::Z, QRat::from_int(-1)),
            SubstRule::constant(Var::A, QRat::q_pow(1).neg()),
        ])
        .unwrap();
    out.push(Reduction {
        name: "trivariate-weight",
        lhs: lt_sub,
        rhs: weighted,
        is_equality: true,
    });

    let (e3, e4, e5) = (rho_e(uni, n), rs_h(uni, n), rs_g(uni, n));
    for (name, p) in [("rho-e", e3), ("rs-h", e4), ("rs-g", e5)] {
        out.push(Reduction {
            name,
            lhs: p.clone(),
            rhs: p,
            is_equality: false,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qrat::one_plus_q_pow;
    use crate::vars::Mono;

    fn uni() -> VarUniverse {
        VarUniverse::default()
    }

    #[test]
    fn cauchy_examples() {
        assert!(cauchy_p(uni(), 0, Var::X, Var::Y).is_one());
        // p_2(x,y) = x^2 - (1+q) xy + q y^2
        let p2 = cauchy_p(uni(), 2, Var::X, Var::Y);
        let mut expect = MPoly::term(uni(), QRat::one(), Mono::var_pow(Var::X, 2));
        expect = expect.add(&MPoly::term(
            uni(),
            one_plus_q_pow(1).neg(),
            Mono::var(Var::X).mul(&Mono::var(Var::Y)),
        ));
        expect = expect.add(&MPoly::term(uni(), QRat::q_pow(1), Mono::var_pow(Var::Y, 2)));
        assert_eq!(p2, expect);
        // p_n(x, 0) = x^n
        for n in 0..6u32 {
            let p = cauchy_p(uni(), n, Var::X, Var::Y)
                .subst(&[SubstRule::zero(Var::Y)])
                .unwrap();
            assert_eq!(p, MPoly::term(uni(), QRat::one(), Mono::var_pow(Var::X, n as i16)));
        }
    }

    #[test]
    fn ltilde_degree_zero_and_one() {
        assert!(ltilde(uni(), 0, 1, -1, AlphaMode::Symbolic).is_one());
        // L_1^{(r,s)} = (x - y) + q^{-s} (1+A)/(1+q) (1-a) z
        let r = 2i64;
        let s = -1i64;
        let l1 = ltilde(uni(), 1, r, s, AlphaMode::Symbolic);
        let xy = MPoly::var(uni(), Var::X).sub(&MPoly::var(uni(), Var::Y));
        let coeff = MPoly::one(uni())
            .add(&MPoly::var(uni(), Var::QAlpha))
            .mul_qrat(&QRat::q_pow(-s).div(&one_plus_q_pow(1)));
        let z_term = coeff
            .mul(&MPoly::one(uni()).sub(&MPoly::var(uni(), Var::A)))
            .mul(&MPoly::var(uni(), Var::Z));
        assert_eq!(l1, xy.add(&z_term));
    }

    #[test]
    fn ltilde_specialisations() {
        for n in 0..=5u32 {
            let lt = ltilde(uni(), n, 1, 1, AlphaMode::Symbolic);
            // z = 0 leaves the pure Cauchy polynomial
            let at_z0 = lt.subst(&[SubstRule::zero(Var::Z)]).unwrap();
            assert_eq!(at_z0, cauchy_p(uni(), n, Var::X, Var::Y));
            // a = 1 kills every k >= 1 term
            let at_a1 = lt
                .subst(&[SubstRule::constant(Var::A, QRat::one())])
                .unwrap();
            assert_eq!(at_a1, cauchy_p(uni(), n, Var::X, Var::Y));
        }
    }

    #[test]
    fn ltilde_total_degree_and_leading_coefficient() {
        use crate::vars::VarSet;
        let set = VarSet::of(&[Var::X, Var::Y, Var::Z]);
        for n in 0..=6u32 {
            let lt = ltilde(uni(), n, -2, 2, AlphaMode::Symbolic);
            assert_eq!(lt.degree_in_set(set), n as i32);
            // coefficient of x^n (the k=0 Cauchy head) is exactly 1
            assert!(lt.coeff(&Mono::var_pow(Var::X, n as i16)).is_one());
        }
    }

    #[test]
    fn l_jia_examples() {
        assert!(l_jia(uni(), 0, 3, -2, AlphaMode::Symbolic).is_one());
        // n=1, alpha=Integer(1), m=n=0: x + (1-a) z
        let l = l_jia(uni(), 1, 0, 0, AlphaMode::Integer(1));
        let expect = MPoly::var(uni(), Var::X).add(
            &MPoly::one(uni())
                .sub(&MPoly::var(uni(), Var::A))
                .mul(&MPoly::var(uni(), Var::Z)),
        );
        assert_eq!(l, expect);
    }

    #[test]
    fn ltilde_at_y0_is_l_jia() {
        for n in 0..=6u32 {
            for (r, s) in [(0i64, 0i64), (1, -1), (-2, 2)] {
                for alpha in [AlphaMode::Integer(2), AlphaMode::Symbolic] {
                    let lhs = ltilde(uni(), n, r, s, alpha)
                        .subst(&[SubstRule::zero(Var::Y)])
                        .unwrap();
                    let rhs = l_jia(uni(), n, r, s, alpha);
                    assert_eq!(lhs, rhs, "n={} r={} s={} {:?}", n, r, s, alpha);
                }
            }
        }
    }

    /// Brute-force oracle: recompute each family term from raw Pochhammer
    /// products, sharing no code with the constructors beyond qpoch itself.
    mod oracle {
        use super::*;
        use crate::qseries::qpoch_scalar;

        pub fn qbinom_direct(n: u32, k: u32) -> QRat {
            // (q;q)_n / ((q;q)_k (q;q)_{n-k}) by explicit products
            let q = QRat::q_pow(1);
            let top = qpoch_scalar(&q, n);
            let bot = qpoch_scalar(&q, k).mul(&qpoch_scalar(&q, n - k));
            top.div(&bot)
        }

        pub fn negq_binom_symbolic(uni: VarUniverse, k: u32) -> MPoly {
            // (-q^{-alpha};q)_k / (-q;q)_k q^{alpha k - C(k,2)} with
            // A = q^alpha expanded literally as a Laurent polynomial
            let base = MPoly::term(
                uni,
                QRat::from_int(-1),
                Mono::var_pow(Var::QAlpha, -1),
            );
            let poch = qpoch(&base, k);
            let denom = qpoch_scalar(&QRat::q_pow(1).neg(), k);
            let a_pow = MPoly::term(uni, QRat::q_pow(-binom2(k as i64)), Mono::var_pow(Var::QAlpha, k as i16));
            poch.mul(&a_pow).mul_qrat(&QRat::one().div(&denom))
        }

        pub fn ltilde_direct(uni: VarUniverse, n: u32, r: i64, s: i64) -> MPoly {
            let mut acc = MPoly::zero(uni);
            for k in 0..=n {
                let mut term = MPoly::constant(uni, qbinom_direct(n, k));
                term = term.mul(&negq_binom_symbolic(uni, k));
                term = term.mul_qrat(&QRat::q_pow(
                    r * binom2(k as i64) - s * binom2(k as i64 + 1) + binom2(k as i64),
                ));
                term = term.mul(&qpoch(&MPoly::var(uni, Var::A), k));
                // p_{n-k} as an explicit product
                let mut p = MPoly::one(uni);
                for i in 0..(n - k) {
                    p = p.mul(
                        &MPoly::var(uni, Var::X)
                            .sub(&MPoly::var(uni, Var::Y).mul_qrat(&QRat::q_pow(i as i64))),
                    );
                }
                term = term.mul(&p);
                term = term.mul(&MPoly::var(uni, Var::Z).pow(k));
                acc = acc.add(&term);
            }
            acc
        }
    }

    #[test]
    fn families_match_brute_force_oracle() {
        for n in 0..=6u32 {
            for (r, s) in [(0i64, 0i64), (1, -1)] {
                let fast = ltilde(uni(), n, r, s, AlphaMode::Symbolic);
                let slow = oracle::ltilde_direct(uni(), n, r, s);
                assert_eq!(fast, slow, "ltilde oracle n={} r={} s={}", n, r, s);
            }
        }
        for n in 0..=6u32 {
            for k in 0..=n {
                assert_eq!(
                    qbinom(n as i64, k as i64),
                    oracle::qbinom_direct(n, k),
                    "qbinom oracle {} {}",
                    n,
                    k
                );
            }
        }
    }

    #[test]
    fn cigler_degree_zero_and_oracle() {
        assert!(cigler_c(uni(), 0, AlphaMode::Symbolic, Var::B).is_one());
        assert!(cigler_d(uni(), 0, AlphaMode::Symbolic, Var::B).is_one());
        // direct-summation oracle for n <= 5
        for n in 0..=5u32 {
            let alpha = AlphaMode::Integer(3);
            let c = cigler_c(uni(), n, alpha, Var::B);
            let d = cigler_d(uni(), n, alpha, Var::B);
            let mut c_direct = MPoly::zero(uni());
            let mut d_direct = MPoly::zero(uni());
            for k in 0..=n {
                let gb = gen_qbinom_q(uni(), alpha, k);
                let ratio = qq(n).div(&qq(n - k));
                let b = MPoly::var(uni(), Var::B).pow(k);
                let sign_c = QRat::monomial(if k % 2 == 1 { -1 } else { 1 }, binom2(k as i64));
                c_direct = c_direct.add(
                    &gb.mul(&b)
                        .mul_qrat(&sign_c.mul(&ratio))
                        .mul(&cauchy_p(uni(), n - k, Var::X, Var::Y)),
                );
                let sign_d = QRat::monomial(
                    if (n + k) % 2 == 1 { -1 } else { 1 },
                    binom2(k as i64) - binom2(n as i64),
                );
                d_direct = d_direct.add(
                    &gb.mul(&b)
                        .mul_qrat(&sign_d.mul(&ratio))
                        .mul(&cauchy_p(uni(), n - k, Var::Y, Var::X)),
                );
            }
            assert_eq!(c, c_direct, "cigler C n={}", n);
            assert_eq!(d, d_direct, "cigler D n={}", n);
        }
    }

    #[test]
    fn hahn_examples() {
        assert!(hahn_phi(uni(), 0, Var::Sigma, Var::X).is_one());
        // phi_1 = 1 + (1-sigma) x
        let p1 = hahn_phi(uni(), 1, Var::Sigma, Var::X);
        let expect = MPoly::one(uni()).add(
            &MPoly::one(uni())
                .sub(&MPoly::var(uni(), Var::Sigma))
                .mul(&MPoly::var(uni(), Var::X)),
        );
        assert_eq!(p1, expect);
        // phi_2 = 1 + (1+q)(1-sigma) x + (1-sigma)(1-sigma q) x^2
        let p2 = hahn_phi(uni(), 2, Var::Sigma, Var::X);
        let s = MPoly::var(uni(), Var::Sigma);
        let x = MPoly::var(uni(), Var::X);
        let expect = MPoly::one(uni())
            .add(
                &MPoly::one(uni())
                    .sub(&s)
                    .mul_qrat(&one_plus_q_pow(1))
                    .mul(&x),
            )
            .add(
                &MPoly::one(uni())
                    .sub(&s)
                    .mul(&MPoly::one(uni()).sub(&s.mul_qrat(&QRat::q_pow(1))))
                    .mul(&x.pow(2)),
            );
        assert_eq!(p2, expect);
        // sigma = 1 leaves only k = 0
        for n in 0..6u32 {
            let at1 = hahn_phi(uni(), n, Var::Sigma, Var::X)
                .subst(&[SubstRule::constant(Var::Sigma, QRat::one())])
                .unwrap();
            assert!(at1.is_one());
        }
    }

    #[test]
    fn rogers_szego_examples() {
        assert!(rs_r(uni(), 0, Var::X, Var::Y).is_one());
        // r_2 = x^2 + (1+q) xy + y^2
        let r2 = rs_r(uni(), 2, Var::X, Var::Y);
        let expect = MPoly::term(uni(), QRat::one(), Mono::var_pow(Var::X, 2))
            .add(&MPoly::term(
                uni(),
                one_plus_q_pow(1),
                Mono::var(Var::X).mul(&Mono::var(Var::Y)),
            ))
            .add(&MPoly::term(uni(), QRat::one(), Mono::var_pow(Var::Y, 2)));
        assert_eq!(r2, expect);
        // r_n(x, 0) = x^n and the x <-> y symmetry
        for n in 0..8u32 {
            let r = rs_r(uni(), n, Var::X, Var::Y);
            let swapped = r
                .subst(&[
                    SubstRule::new(Var::X, QRat::one(), Mono::var(Var::Y)),
                    SubstRule::new(Var::Y, QRat::one(), Mono::var(Var::X)),
                ])
                .unwrap();
            assert_eq!(r, swapped);
            let at0 = r.subst(&[SubstRule::zero(Var::Y)]).unwrap();
            assert_eq!(at0, MPoly::term(uni(), QRat::one(), Mono::var_pow(Var::X, n as i16)));
        }
    }

    #[test]
    fn trivariate_reduction_sign_and_weight() {
        assert!(f_trivariate(uni(), 0).is_one());
        // F_1 = x + z - y
        let f1 = f_trivariate(uni(), 1);
        let expect = MPoly::var(uni(), Var::X)
            .add(&MPoly::var(uni(), Var::Z))
            .sub(&MPoly::var(uni(), Var::Y));
        assert_eq!(f1, expect);
        // the Infinity-mode cancellation gives the explicit sum
        // F_n = (-1)^n q^{-C(n,2)} sum_k [n k]_q q^{C(k,2)} p_{n-k}(y,x) (-z)^k
        for n in 0..=6u32 {
            let f = f_trivariate(uni(), n);
            let mut direct = MPoly::zero(uni());
            for k in 0..=n {
                let c = qbinom(n as i64, k as i64)
                    .mul(&QRat::monomial(if k % 2 == 1 { -1 } else { 1 }, binom2(k as i64)));
                direct = direct.add(
                    &cauchy_p(uni(), n - k, Var::Y, Var::X)
                        .mul(&MPoly::var(uni(), Var::Z).pow(k))
                        .mul_qrat(&c),
                );
            }
            let sign = if n % 2 == 1 { -1 } else { 1 };
            direct = direct.mul_qrat(&QRat::monomial(sign, -binom2(n as i64)));
            assert_eq!(f, direct, "n={}", n);
        }
    }

    #[test]
    fn reduction_suite_shape() {
        let rs = reduction_suite(uni(), 3, 1, -1, AlphaMode::Integer(2));
        assert_eq!(rs.len(), 5);
        for r in &rs {
            if r.is_equality {
                assert_eq!(r.lhs, r.rhs, "{}", r.name);
            }
        }
        // item 4 at these parameters: h_n = sum_k [n k]_q p_{n-k}(x, y)
        let h3 = rs_h(uni(), 3);
        let mut expect = MPoly::zero(uni());
        for k in 0..=3u32 {
            expect = expect.add(
                &cauchy_p(uni(), 3 - k, Var::X, Var::Y)
                    .mul_qrat(&qbinom(3, k as i64)),
            );
        }
        assert_eq!(h3, expect);
    }
}
