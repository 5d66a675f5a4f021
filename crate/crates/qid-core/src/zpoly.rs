//! Dense univariate polynomials over Z, the workhorse behind [`crate::QRat`].
//!
//! Coefficients live in machine integers (i128) whenever they fit, with a
//! transparent promotion to arbitrary precision on overflow; every fast path
//! proves its bound before skipping checks. GCDs run a modular computation
//! over word-sized primes first (a degree-0 gcd mod p soundly certifies
//! coprimality; nontrivial candidates are confirmed by exact trial
//! division), falling back to the subresultant remainder sequence.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

/// Dense integer polynomial in q. Invariant: no trailing zero coefficient;
/// the zero polynomial is the empty vector. The small variant is preferred
/// whenever all coefficients fit in i128.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) enum ZPoly {
    S(Vec<i128>),
    B(Vec<BigInt>),
}

use ZPoly::{B, S};

const GCD_CACHE_CAP: usize = 1 << 14;

thread_local! {
    static GCD_CACHE: std::cell::RefCell<std::collections::HashMap<(ZPoly, ZPoly), ZPoly>> =
        std::cell::RefCell::new(std::collections::HashMap::new());
}

fn trim_s(mut c: Vec<i128>) -> Vec<i128> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

fn trim_b(mut c: Vec<BigInt>) -> Vec<BigInt> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        S(Vec::new())
    }

    pub fn one() -> ZPoly {
        S(vec![1])
    }

    pub fn constant(n: BigInt) -> ZPoly {
        ZPoly::from_big(vec![n])
    }

    pub fn small(c: Vec<i128>) -> ZPoly {
        S(trim_s(c))
    }

    /// c * q^e.
    pub fn monomial(coeff: BigInt, e: usize) -> ZPoly {
        if coeff.is_zero() {
            return ZPoly::zero();
        }
        match coeff.to_i128() {
            Some(c) => {
                let mut v = vec![0i128; e + 1];
                v[e] = c;
                S(v)
            }
            None => {
                let mut v = vec![BigInt::zero(); e + 1];
                v[e] = coeff;
                B(v)
            }
        }
    }

    pub fn from_coeffs(c: Vec<BigInt>) -> ZPoly {
        ZPoly::from_big(c)
    }

    fn from_big(c: Vec<BigInt>) -> ZPoly {
        let c = trim_b(c);
        if let Some(small) = c.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>() {
            S(small)
        } else {
            B(c)
        }
    }

    fn to_big(&self) -> Vec<BigInt> {
        match self {
            S(c) => c.iter().map(|&x| BigInt::from(x)).collect(),
            B(c) => c.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            S(c) => c.is_empty(),
            B(c) => c.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, S(c) if c.as_slice() == [1])
    }

    pub fn len(&self) -> usize {
        match self {
            S(c) => c.len(),
            B(c) => c.len(),
        }
    }

    /// Degree; zero polynomial reports None.
    pub fn deg(&self) -> Option<usize> {
        match self.len() {
            0 => None,
            n => Some(n - 1),
        }
    }

    pub fn lc_big(&self) -> BigInt {
        match self {
            S(c) => BigInt::from(*c.last().expect("lc of zero polynomial")),
            B(c) => c.last().expect("lc of zero polynomial").clone(),
        }
    }

    /// Sign of the lowest-order nonzero coefficient.
    pub fn trailing_sign(&self) -> Sign {
        match self {
            S(c) => {
                let t = c.iter().find(|x| **x != 0).expect("trailing of zero");
                if *t < 0 {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            }
            B(c) => c
                .iter()
                .find(|x| !x.is_zero())
                .expect("trailing of zero")
                .sign(),
        }
    }

    pub fn neg(&self) -> ZPoly {
        match self {
            S(c) => S(c.iter().map(|x| -x).collect()),
            B(c) => B(c.iter().map(|x| -x).collect()),
        }
    }

    fn abs_max(c: &[i128]) -> u128 {
        c.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        if let (S(a), S(b)) = (self, other) {
            if Self::abs_max(a).checked_add(Self::abs_max(b)).is_some_and(|m| m <= i128::MAX as u128) {
                let n = a.len().max(b.len());
                let mut c = vec![0i128; n];
                for (i, x) in a.iter().enumerate() {
                    c[i] += x;
                }
                for (i, x) in b.iter().enumerate() {
                    c[i] += x;
                }
                return S(trim_s(c));
            }
        }
        let (a, b) = (self.to_big(), other.to_big());
        let n = a.len().max(b.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, x) in a.into_iter().enumerate() {
            c[i] += x;
        }
        for (i, x) in b.into_iter().enumerate() {
            c[i] += x;
        }
        ZPoly::from_big(c)
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        if let (S(a), S(b)) = (self, other) {
            // |sum| <= max|a| * max|b| * overlap for every coefficient
            let overlap = a.len().min(b.len()) as u128;
            let safe = Self::abs_max(a)
                .checked_mul(Self::abs_max(b))
                .and_then(|m| m.checked_mul(overlap))
                .is_some_and(|m| m < i128::MAX as u128);
            if safe {
                let mut c = vec![0i128; a.len() + b.len() - 1];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        c[i + j] += x * y;
                    }
                }
                return S(trim_s(c));
            }
        }
        let (a, b) = (self.to_big(), other.to_big());
        let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        ZPoly::from_big(c)
    }

    /// Gcd of all coefficients, non-negative; zero for the zero polynomial.
    pub fn content_big(&self) -> BigInt {
        match self {
            S(c) => {
                let mut g = 0i128;
                for &x in c {
                    g = gcd_i128(g, x);
                    if g == 1 {
                        break;
                    }
                }
                BigInt::from(g)
            }
            B(c) => {
                let mut g = BigInt::zero();
                for x in c {
                    if !x.is_zero() {
                        g = g.gcd(x);
                        if g.is_one() {
                            break;
                        }
                    }
                }
                g
            }
        }
    }

    /// Divide every coefficient by `d` (must be exact).
    pub fn div_scalar_exact(&self, d: &BigInt) -> ZPoly {
        debug_assert!(!d.is_zero());
        if let (S(c), Some(ds)) = (self, d.to_i128()) {
            if ds != 0 {
                let mut out = Vec::with_capacity(c.len());
                let mut ok = true;
                for &x in c {
                    if x % ds != 0 {
                        ok = false;
                        break;
                    }
                    out.push(x / ds);
                }
                if ok {
                    return S(out);
                }
                debug_assert!(false, "inexact scalar division");
            }
        }
        let c = self.to_big();
        ZPoly::from_big(
            c.into_iter()
                .map(|x| {
                    let (q, r) = x.div_rem(d);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Exact polynomial division; None when a remainder or a non-integral
    /// quotient coefficient appears.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let dd = d.deg().unwrap();
        let nd = self.deg().unwrap();
        if nd < dd {
            return None;
        }
        if let (S(n), S(dc)) = (self, d) {
            if let Some(q) = Self::div_exact_small(n, dc) {
                return q.map(|v| S(trim_s(v)));
            }
            // overflow during the small attempt: redo in big
        }
        Self::div_exact_big(&self.to_big(), &d.to_big()).map(ZPoly::from_big)
    }

    /// Some(Some(q)) on success, Some(None) for inexact; None on overflow.
    #[allow(clippy::option_option)]
    fn div_exact_small(n: &[i128], d: &[i128]) -> Option<Option<Vec<i128>>> {
        let dd = d.len() - 1;
        let nd = n.len() - 1;
        let lc = *d.last().unwrap();
        let mut rem: Vec<i128> = n.to_vec();
        let mut quot = vec![0i128; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = rem[k + dd];
            if top == 0 {
                continue;
            }
            if top % lc != 0 {
                return Some(None);
            }
            let qc = top / lc;
            rem[k + dd] = 0;
            for (j, &dcj) in d.iter().enumerate().take(dd) {
                let t = qc.checked_mul(dcj)?;
                rem[k + j] = rem[k + j].checked_sub(t)?;
            }
            quot[k] = qc;
        }
        if rem.iter().any(|&x| x != 0) {
            return Some(None);
        }
        Some(Some(quot))
    }

    fn div_exact_big(n: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
        let dd = d.len() - 1;
        let nd = n.len() - 1;
        let lc = d.last().unwrap();
        let mut rem = n.to_vec();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.iter().enumerate().take(dd) {
                let t = &qc * dc;
                rem[k + j] -= t;
            }
            quot[k] = qc;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(quot)
    }

    /// Evaluate at the rational point p/r with integer arithmetic:
    /// sum c_i p^i r^{d-i} over r^d.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let p = x.numer();
        let r = x.denom();
        let c = self.to_big();
        let d = c.len() - 1;
        let mut acc = BigInt::zero();
        let mut rpow = BigInt::one();
        for i in (0..=d).rev() {
            acc = acc * p + &c[i] * &rpow;
            rpow *= r;
        }
        // rpow is now r^{d+1}; the denominator is r^d
        BigRational::new(acc, rpow / r)
    }

    /// Primitive gcd with positive leading coefficient. Results are
    /// memoised per thread: the same denominator pairs recur throughout a
    /// verification run.
    pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        if a.is_zero() {
            return b.primitive_abs();
        }
        if b.is_zero() {
            return a.primitive_abs();
        }
        if a.deg() == Some(0) || b.deg() == Some(0) {
            return ZPoly::one();
        }
        let mut f = a.primitive_abs();
        let mut g = b.primitive_abs();
        if f > g {
            std::mem::swap(&mut f, &mut g);
        }
        GCD_CACHE.with(|c| {
            if let Some(hit) = c.borrow().get(&(f.clone(), g.clone())) {
                return hit.clone();
            }
            let r = match modular::gcd(&f, &g) {
                Some(r) => r,
                None => ZPoly::gcd_subresultant(&f, &g),
            };
            let mut map = c.borrow_mut();
            if map.len() >= GCD_CACHE_CAP {
                map.clear();
            }
            map.insert((f, g), r.clone());
            r
        })
    }

    fn gcd_subresultant(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let mut f = a.to_big();
        let mut g = b.to_big();
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        let mut gg = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = f.len() - g.len();
            let r = Self::pseudo_rem_big(&f, &g);
            if r.is_empty() {
                return ZPoly::from_big(g).primitive_abs();
            }
            if r.len() == 1 {
                return ZPoly::one();
            }
            f = g;
            let divisor = &gg * h.pow(delta as u32);
            g = r
                .into_iter()
                .map(|x| {
                    let (q, rr) = x.div_rem(&divisor);
                    debug_assert!(rr.is_zero());
                    q
                })
                .collect();
            gg = f.last().unwrap().clone();
            if delta > 0 {
                let num = gg.pow(delta as u32);
                let den = h.pow((delta - 1) as u32);
                let (q, rr) = num.div_rem(&den);
                debug_assert!(rr.is_zero());
                h = q;
            }
        }
    }

    /// Pseudo-remainder lc(d)^(deg n - deg d + 1) n mod d over BigInt.
    fn pseudo_rem_big(n: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
        let dd = d.len() - 1;
        let lc_d = d.last().unwrap().clone();
        let mut r = n.to_vec();
        loop {
            r = trim_b(r);
            if r.len() <= dd {
                return r;
            }
            let lead = r.last().unwrap().clone();
            let dr = r.len() - 1;
            let mut c: Vec<BigInt> = r.iter().map(|x| x * &lc_d).collect();
            for (j, dc) in d.iter().enumerate() {
                c[dr - dd + j] -= &lead * dc;
            }
            r = c;
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_abs(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content_big();
        if self.lc_big().sign() == Sign::Minus {
            c = -c;
        }
        if c.is_one() {
            return self.clone();
        }
        self.div_scalar_exact(&c)
    }

    /// Render in ascending powers of q, e.g. `1-q-q^2+q^3`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let coeffs = self.to_big();
        let mut out = String::new();
        let mut first = true;
        for (e, coeff) in coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let neg = coeff.sign() == Sign::Minus;
            let abs = coeff.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let unit = abs.is_one();
            match (e, unit) {
                (0, _) => out.push_str(&abs.to_string()),
                (_, true) => {}
                (_, false) => {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
            }
            if e == 1 {
                out.push('q');
            } else if e > 1 {
                out.push_str(&format!("q^{}", e));
            }
        }
        out
    }

    /// Number of nonzero monomials.
    pub fn term_count(&self) -> usize {
        match self {
            S(c) => c.iter().filter(|x| **x != 0).count(),
            B(c) => c.iter().filter(|x| !x.is_zero()).count(),
        }
    }
}

/// Brown's modular gcd over word-sized primes.
mod modular {
    use super::{trim_b, ZPoly};
    use num::{BigInt, Integer, One, Zero};

    /// Known primes (Mersenne and classic NTT moduli), largest first.
    const PRIMES: [u64; 8] = [
        2305843009213693951, // 2^61 - 1
        2147483647,          // 2^31 - 1
        1000000007,
        1000000009,
        998244353,
        754974721,
        469762049,
        167772161,
    ];

    /// 2^61 - 1, the primary probe prime; reduction needs no division.
    pub(super) const M61: u64 = 2305843009213693951;

    #[inline]
    fn mulmod(a: u64, b: u64, p: u64) -> u64 {
        if p == M61 {
            let x = a as u128 * b as u128;
            let folded = (x >> 61) + (x & M61 as u128);
            let folded = (folded >> 61) + (folded & M61 as u128);
            let mut r = folded as u64;
            if r >= M61 {
                r -= M61;
            }
            r
        } else {
            ((a as u128 * b as u128) % p as u128) as u64
        }
    }

    fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1u64;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a, p);
            }
            a = mulmod(a, a, p);
            e >>= 1;
        }
        r
    }

    fn invmod(a: u64, p: u64) -> u64 {
        powmod(a, p - 2, p)
    }

    fn reduce(f: &ZPoly, p: u64) -> Vec<u64> {
        let mut out: Vec<u64> = match f {
            ZPoly::S(c) => c
                .iter()
                .map(|&x| x.rem_euclid(p as i128) as u64)
                .collect(),
            ZPoly::B(c) => {
                let pm = BigInt::from(p);
                c.iter()
                    .map(|c| {
                        let m = c.mod_floor(&pm);
                        m.to_u64_digits().1.first().copied().unwrap_or(0)
                    })
                    .collect()
            }
        };
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// Monic gcd in F_p[q].
    fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
        while !b.is_empty() {
            let lb_inv = invmod(*b.last().unwrap(), p);
            let db = b.len() - 1;
            while a.len() > db {
                let la = *a.last().unwrap();
                if la == 0 {
                    a.pop();
                    continue;
                }
                let factor = mulmod(la, lb_inv, p);
                let shift = a.len() - 1 - db;
                for (i, bc) in b.iter().enumerate() {
                    let t = mulmod(factor, *bc, p);
                    let idx = shift + i;
                    a[idx] = (a[idx] + p - t) % p;
                }
                while a.last() == Some(&0) {
                    a.pop();
                }
            }
            std::mem::swap(&mut a, &mut b);
        }
        if !a.is_empty() {
            let inv = invmod(*a.last().unwrap(), p);
            for c in a.iter_mut() {
                *c = mulmod(*c, inv, p);
            }
        }
        a
    }

    /// Symmetric representative of x mod m in (-m/2, m/2].
    fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
        let mut r = x.mod_floor(m);
        if &r * 2 > *m {
            r -= m;
        }
        r
    }

    fn low_u64(x: &BigInt) -> u64 {
        x.to_u64_digits().1.first().copied().unwrap_or(0)
    }

    /// Returns Some(gcd) when the modular computation settles the answer,
    /// None to fall back to the subresultant PRS. Inputs are primitive.
    ///
    /// For a prime not dividing either leading coefficient, the modular gcd
    /// degree is at least the true gcd degree; degree 0 certifies
    /// coprimality, and every nontrivial candidate is confirmed by exact
    /// trial division before being returned.
    pub(super) fn gcd(f: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
        let lcf = f.lc_big();
        let lcg = g.lc_big();
        let lc_gcd: BigInt = lcf.gcd(&lcg);
        let mut best_deg = usize::MAX;
        let mut acc: Vec<BigInt> = Vec::new();
        let mut modulus = BigInt::one();
        for &p in PRIMES.iter() {
            let pb = BigInt::from(p);
            if (&lcf % &pb).is_zero() || (&lcg % &pb).is_zero() {
                continue;
            }
            let gp = gcd_mod_p(reduce(f, p), reduce(g, p), p);
            if gp.len() <= 1 {
                return Some(ZPoly::one());
            }
            let deg = gp.len() - 1;
            if deg > best_deg {
                continue; // unlucky prime
            }
            let lcm_u = low_u64(&lc_gcd.mod_floor(&pb));
            let scaled: Vec<BigInt> = gp
                .iter()
                .map(|&c| BigInt::from(mulmod(c, lcm_u, p)))
                .collect();
            if deg < best_deg {
                best_deg = deg;
                acc = scaled;
                modulus = pb.clone();
            } else {
                let m_inv_p = invmod(low_u64(&modulus.mod_floor(&pb)), p);
                let step = modulus.clone();
                for (a, s) in acc.iter_mut().zip(scaled.iter()) {
                    let diff = (s - &*a).mod_floor(&pb);
                    let t = mulmod(low_u64(&diff), m_inv_p, p);
                    *a = &*a + &step * BigInt::from(t);
                }
                modulus = &step * &pb;
            }
            let lifted: Vec<BigInt> = acc.iter().map(|c| symmetric(c, &modulus)).collect();
            let cand = ZPoly::from_coeffs(trim_b(lifted)).primitive_abs();
            if !cand.is_zero() && f.div_exact(&cand).is_some() && g.div_exact(&cand).is_some() {
                return Some(cand);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(coeffs.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn mul_and_div_roundtrip() {
        let a = p(&[1, -1]); // 1 - q
        let b = p(&[1, 0, -1]); // 1 - q^2
        let ab = a.mul(&b);
        assert_eq!(ab, p(&[1, -1, -1, 1]));
        assert_eq!(ab.div_exact(&a).unwrap(), b);
        assert_eq!(ab.div_exact(&b).unwrap(), a);
        assert!(p(&[1, 0, 1]).div_exact(&a).is_none());
    }

    #[test]
    fn gcd_finds_common_factor() {
        let h = p(&[1, -1]); // 1 - q
        let a = h.mul(&p(&[1, 1])); // (1-q)(1+q)
        let b = h.mul(&p(&[2, 0, 3])); // (1-q)(2+3q^2)
        let g = ZPoly::gcd(&a, &b);
        // primitive, positive leading coefficient: q - 1
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime() {
        let a = p(&[1, 1]); // 1 + q
        let b = p(&[1, 0, 1]); // 1 + q^2
        assert_eq!(ZPoly::gcd(&a, &b), ZPoly::one());
    }

    #[test]
    fn gcd_matches_structure_example() {
        // (q;q)_3 and (q^2;q^2)_2 share (1-q)(1-q^2) up to sign
        let qq3 = p(&[1, -1]).mul(&p(&[1, 0, -1])).mul(&p(&[1, 0, 0, -1]));
        let q2q2 = p(&[1, 0, -1]).mul(&p(&[1, 0, 0, 0, -1]));
        let g = ZPoly::gcd(&qq3, &q2q2);
        let expect = p(&[1, -1]).mul(&p(&[1, 0, -1])).primitive_abs();
        assert_eq!(g, expect);
    }

    #[test]
    fn overflow_promotes_to_big() {
        // squaring near-maximal coefficients overflows i128 and must land
        // in the big representation, exactly
        let huge = ZPoly::small(vec![i128::MAX / 2, i128::MAX / 3]);
        let sq = huge.mul(&huge);
        assert!(matches!(sq, ZPoly::B(_)));
        let back = sq.div_exact(&huge).unwrap();
        assert_eq!(back, huge);
        // addition near the boundary also promotes
        let near = ZPoly::small(vec![i128::MAX - 1]);
        let sum = near.add(&near);
        assert!(matches!(sum, ZPoly::B(_)));
        assert_eq!(sum.div_scalar_exact(&BigInt::from(2)), near);
    }

    #[test]
    fn big_and_small_agree_on_gcd() {
        let h = p(&[3, 0, 7, 1]);
        let a = h.mul(&p(&[1, 5, 2]));
        let b = h.mul(&p(&[4, -3]));
        let big_a = ZPoly::B(a.to_big());
        assert_eq!(ZPoly::gcd(&big_a, &b), ZPoly::gcd(&a, &b));
    }

    #[test]
    fn eval_rational_double_horner() {
        let f = p(&[1, 2, 3]); // 1 + 2q + 3q^2
        let x = BigRational::new(BigInt::from(1), BigInt::from(2));
        let v = f.eval_rational(&x);
        assert_eq!(v, BigRational::new(BigInt::from(11), BigInt::from(4)));
    }

    #[test]
    fn render_ascending() {
        assert_eq!(p(&[1, -1, -1, 1]).render(), "1-q-q^2+q^3");
        assert_eq!(p(&[0, 2]).render(), "2*q");
        assert_eq!(p(&[-1]).render(), "-1");
        assert_eq!(ZPoly::zero().render(), "0");
    }
}
