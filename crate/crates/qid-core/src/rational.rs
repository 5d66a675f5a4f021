//! Exact rational numbers.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; it is the coefficient substrate under everything
//! else in the crate.

use num::{BigInt, BigRational};

pub type Rational = BigRational;

/// Shorthand constructor, `rat(n, d) = n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;

    #[test]
    fn normalised_on_construction() {
        let r = rat(-4, -6);
        assert_eq!(r, rat(2, 3));
        assert!(r.denom().is_positive());
        let z = rat(0, 5);
        assert_eq!(z.denom(), &BigInt::from(1));
    }
}
