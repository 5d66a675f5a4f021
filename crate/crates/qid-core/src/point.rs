//! Rational evaluation points for the random-point verification mode.

use rand::Rng;

use crate::rational::{rat_int, Rational};
use crate::vars::{Var, NVARS};

/// An assignment of exact rational values to q and to every ring variable.
/// Values are small fractions (numerators and denominators bounded by 97)
/// when drawn from [`RatPoint::sample`]. Denominator constraints are checked
/// dynamically: evaluation reports a pole and the caller resamples.
#[derive(Clone, Debug)]
pub struct RatPoint {
    pub q: Rational,
    values: [Rational; NVARS],
}

/// Bound on sampled numerators and denominators.
pub const POINT_BOUND: i64 = 97;

impl RatPoint {
    /// A point with the given q and every variable set to 1. Mostly a test
    /// convenience; use [`RatPoint::with`] to adjust coordinates.
    pub fn constant(q: Rational) -> RatPoint {
        RatPoint {
            q,
            values: std::array::from_fn(|_| rat_int(1)),
        }
    }

    pub fn with(mut self, v: Var, val: Rational) -> RatPoint {
        self.values[v.index()] = val;
        self
    }

    pub fn value(&self, v: Var) -> &Rational {
        &self.values[v.index()]
    }

    /// Draw a point with every coordinate a nonzero fraction with numerator
    /// and denominator at most 97. q additionally avoids ±1, where every
    /// (q;q)_n factor vanishes.
    pub fn sample<R: Rng>(rng: &mut R) -> RatPoint {
        let q = loop {
            let c = sample_fraction(rng);
            if c != rat_int(1) && c != rat_int(-1) {
                break c;
            }
        };
        RatPoint {
            q,
            values: std::array::from_fn(|_| sample_fraction(rng)),
        }
    }
}

fn sample_fraction<R: Rng>(rng: &mut R) -> Rational {
    let num = loop {
        let n = rng.gen_range(-POINT_BOUND..=POINT_BOUND);
        if n != 0 {
            break n;
        }
    };
    let den = rng.gen_range(1..=POINT_BOUND);
    rat(num, den)
}

use crate::rational::rat;

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sampling_is_seeded_and_bounded() {
        let mut r1 = ChaCha8Rng::seed_from_u64(42);
        let mut r2 = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let p1 = RatPoint::sample(&mut r1);
            let p2 = RatPoint::sample(&mut r2);
            assert_eq!(p1.q, p2.q);
            assert_eq!(p1.value(Var::X), p2.value(Var::X));
            assert!(p1.q.numer().magnitude() <= &num::BigUint::from(POINT_BOUND as u64));
            assert!(p1.q != rat(1, 1) && p1.q != rat(-1, 1));
        }
    }
}
