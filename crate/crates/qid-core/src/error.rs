//! Error types shared across the algebra tower.

use thiserror::Error;

use crate::mpoly::MPoly;
use crate::vars::Var;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    /// Exact division failed; the operand is outside the operator's natural
    /// domain. Carries the nonzero remainder for diagnostics.
    #[error("not divisible; remainder: {remainder}")]
    NotDivisible { remainder: Box<MPoly> },

    /// A result would need a negative exponent on a variable that is not
    /// Laurent-allowed in its universe.
    #[error("negative exponent on non-Laurent variable {var}")]
    NegativeExponent { var: Var },

    /// Series operands have different grading variable sets.
    #[error("grading variable sets differ")]
    GradingMismatch,

    /// Series inversion needs an invertible scalar constant term.
    #[error("constant term is not an invertible scalar")]
    NonUnitConstantTerm,

    /// A listed denominator vanishes at the evaluation point; resample.
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,

    /// The operand carries no grading variable, so truncation cannot bound
    /// the sum.
    #[error("expression carries no grading variable")]
    NotGraded,

    /// A denominator parameter is a non-grading multivariate polynomial and
    /// cannot be expanded as a series; use random-point mode instead.
    #[error("denominator parameter cannot be expanded as a series")]
    UnexpandableDenominator,

    /// A scalar denominator Pochhammer vanishes identically.
    #[error("denominator Pochhammer vanishes")]
    DenominatorVanishes,
}

pub type Result<T> = std::result::Result<T, Error>;
