//! Exact computer algebra over the rational function field Q(q), built for
//! coefficient-wise verification of q-series identities.
//!
//! The crate is organised as a tower:
//!
//! - [`vars`] — a fixed universe of named ring variables with per-variable
//!   Laurent permissions, and graded-lex monomials over it.
//! - [`qrat`] — the field Q(q): normalised ratios of integer-coefficient
//!   polynomials in q.
//! - [`mpoly`] — sparse multivariate Laurent polynomials over Q(q).
//! - [`series`] — truncated formal power series in designated grading
//!   variables, with multiplication and inversion exact through a total-degree
//!   bound.
//! - [`qseries`] — q-shifted factorials, Gaussian and generalized q-binomial
//!   coefficients, Euler product expansions, and truncated basic
//!   hypergeometric series.
//! - [`families`] — constructors for the q-polynomial families (Cauchy,
//!   generalized L-polynomials, Cigler, Rogers-Szego, Hahn, trivariate F).
//! - [`operators`] — the homogeneous operator D_xy, the q-derivative D_a and
//!   the truncated q-exponential operator T(bD_a).
//! - [`verify`] — a registry of identities with exact series comparison and
//!   exact rational-point evaluation modes, producing structured reports.
//!
//! Everything is immutable after construction and all operations are pure, so
//! values may be shared freely across threads.

pub mod error;
pub mod families;
pub mod mpoly;
pub mod operators;
pub mod point;
pub mod qrat;
pub mod qseries;
pub mod rational;
pub mod series;
pub mod vars;
pub mod verify;

mod zpoly;

pub use error::Error;
pub use mpoly::MPoly;
pub use point::RatPoint;
pub use qrat::QRat;
pub use qseries::{AlphaMode, GradedMonomial};
pub use rational::Rational;
pub use series::GradedSeries;
pub use vars::{Mono, Var, VarSet, VarUniverse, NVARS};
pub use verify::{
    run_suite, verify_at_points, IdentityReport, Mode, Params, Status, SuiteConfig, SuiteReport,
};

/// Version string embedded in machine reports.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
