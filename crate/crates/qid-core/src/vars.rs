//! The fixed variable universe and graded-lex monomials over it.
//!
//! All polynomials in this crate live over one canonical, ordered list of
//! named variables. The order is fixed so that rendering and comparison are
//! deterministic. `A` stands for q^alpha, `w` for omega, `s` for sigma and
//! `l` for lambda.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Number of variables in the universe.
pub const NVARS: usize = 13;

/// A ring variable. The declaration order is the canonical order used for
/// graded-lexicographic comparison and rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    /// `A`, standing for q^alpha.
    QAlpha,
    X,
    Y,
    Z,
    /// Lower-case `a`, the Pochhammer parameter.
    A,
    U,
    V,
    T,
    /// `w`, standing for omega.
    Omega,
    /// `s`, standing for sigma.
    Sigma,
    /// `l`, standing for lambda.
    Lambda,
    B,
    C,
}

/// All variables in canonical order.
pub const ALL_VARS: [Var; NVARS] = [
    Var::QAlpha,
    Var::X,
    Var::Y,
    Var::Z,
    Var::A,
    Var::U,
    Var::V,
    Var::T,
    Var::Omega,
    Var::Sigma,
    Var::Lambda,
    Var::B,
    Var::C,
];

impl Var {
    /// Position in the canonical order.
    pub fn index(self) -> usize {
        self as usize
    }

    /// Rendered name.
    pub fn name(self) -> &'static str {
        match self {
            Var::QAlpha => "A",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::A => "a",
            Var::U => "u",
            Var::V => "v",
            Var::T => "t",
            Var::Omega => "w",
            Var::Sigma => "s",
            Var::Lambda => "l",
            Var::B => "b",
            Var::C => "c",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        ALL_VARS.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of variables, as a bitmask over the canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VarSet(pub u16);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn of(vars: &[Var]) -> VarSet {
        let mut m = 0u16;
        for v in vars {
            m |= 1 << v.index();
        }
        VarSet(m)
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        ALL_VARS.into_iter().filter(move |v| self.contains(*v))
    }
}

/// The variable universe: the canonical variable list plus per-variable
/// Laurent permissions. Only variables flagged here may carry negative
/// exponents. `A` is always Laurent-allowed since q^{-alpha k} terms occur
/// throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarUniverse {
    laurent: VarSet,
}

impl Default for VarUniverse {
    fn default() -> Self {
        VarUniverse {
            laurent: VarSet::of(&[Var::QAlpha]),
        }
    }
}

impl VarUniverse {
    /// Extend the Laurent permission set. Used by the few identities that
    /// genuinely need negative powers (`a` in the inversion relation, `x` in
    /// the mixed trivariate corollary).
    pub fn allow_laurent(mut self, v: Var) -> Self {
        self.laurent = VarSet(self.laurent.0 | (1 << v.index()));
        self
    }

    pub fn laurent_allowed(&self, v: Var) -> bool {
        self.laurent.contains(v)
    }

    pub fn laurent_set(&self) -> VarSet {
        self.laurent
    }
}

/// An exponent vector over the universe, ordered graded-lexicographically:
/// first by total degree, then by the exponent of the earliest variable in
/// canonical order. Negative exponents are permitted here; Laurent validity
/// is enforced by [`crate::MPoly`] against its universe.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [i16; NVARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NVARS]);

    pub fn var(v: Var) -> Mono {
        let mut e = [0i16; NVARS];
        e[v.index()] = 1;
        Mono(e)
    }

    pub fn var_pow(v: Var, e: i16) -> Mono {
        let mut m = [0i16; NVARS];
        m[v.index()] = e;
        Mono(m)
    }

    pub fn exp(&self, v: Var) -> i16 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    /// Total degree restricted to a variable set.
    pub fn degree_in(&self, set: VarSet) -> i32 {
        ALL_VARS
            .iter()
            .filter(|v| set.contains(**v))
            .map(|v| self.0[v.index()] as i32)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for i in 0..NVARS {
            e[i] += other.0[i];
        }
        Mono(e)
    }

    pub fn div(&self, other: &Mono) -> Mono {
        let mut e = self.0;
        for i in 0..NVARS {
            e[i] -= other.0[i];
        }
        Mono(e)
    }

    pub fn pow(&self, n: i16) -> Mono {
        let mut e = self.0;
        for x in e.iter_mut() {
            *x *= n;
        }
        Mono(e)
    }

    /// Whether any variable of `set` appears with nonzero exponent.
    pub fn touches(&self, set: VarSet) -> bool {
        ALL_VARS
            .iter()
            .any(|v| set.contains(*v) && self.0[v.index()] != 0)
    }

    /// Split into (part supported on `set`, remaining part).
    pub fn split(&self, set: VarSet) -> (Mono, Mono) {
        let mut inside = [0i16; NVARS];
        let mut outside = [0i16; NVARS];
        for v in ALL_VARS {
            let i = v.index();
            if set.contains(v) {
                inside[i] = self.0[i];
            } else {
                outside[i] = self.0[i];
            }
        }
        (Mono(inside), Mono(outside))
    }

    /// True if all exponents are valid for the universe (negative only where
    /// Laurent-allowed).
    pub fn valid_in(&self, uni: &VarUniverse) -> bool {
        ALL_VARS
            .iter()
            .all(|v| self.0[v.index()] >= 0 || uni.laurent_allowed(*v))
    }

    /// Grading exponents as a vector in canonical order of `set`.
    pub fn exponents_in(&self, set: VarSet) -> Vec<i64> {
        set.iter().map(|v| self.0[v.index()] as i64).collect()
    }

    /// Render as `x^1*y^2`; the empty monomial renders as an empty string.
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for v in ALL_VARS {
            let e = self.0[v.index()];
            if e != 0 {
                parts.push(format!("{}^{}", v.name(), e));
            }
        }
        parts.join("*")
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            std::cmp::Ordering::Equal => {}
            o => return o,
        }
        // Same total degree: lexicographic, earlier variable with the larger
        // exponent wins.
        for i in 0..NVARS {
            match self.0[i].cmp(&other.0[i]) {
                std::cmp::Ordering::Equal => {}
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            f.write_str(&self.render())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_stable() {
        let names: Vec<&str> = ALL_VARS.iter().map(|v| v.name()).collect();
        assert_eq!(
            names,
            ["A", "x", "y", "z", "a", "u", "v", "t", "w", "s", "l", "b", "c"]
        );
        for (i, v) in ALL_VARS.iter().enumerate() {
            assert_eq!(v.index(), i);
            assert_eq!(Var::from_name(v.name()), Some(*v));
        }
    }

    #[test]
    fn grlex_ordering() {
        let x = Mono::var(Var::X);
        let y = Mono::var(Var::Y);
        let xy = x.mul(&y);
        let x2 = x.pow(2);
        assert!(xy > x); // degree first
        assert!(x2 > xy); // same degree: x^2 beats x*y (x exponent larger)
        assert!(x > y);
        assert!(Mono::ONE < y);
    }

    #[test]
    fn split_and_degree() {
        let m = Mono::var(Var::T)
            .mul(&Mono::var_pow(Var::X, 3))
            .mul(&Mono::var_pow(Var::Omega, 2));
        let g = VarSet::of(&[Var::T, Var::Omega]);
        let (inside, outside) = m.split(g);
        assert_eq!(inside.degree_in(g), 3);
        assert_eq!(outside.exp(Var::X), 3);
        assert!(!outside.touches(g));
    }
}
