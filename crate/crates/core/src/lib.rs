//! Logarithmic derivation modules of hyperplane arrangements.
//!
//! The crate computes, with exact rational arithmetic throughout:
//!
//! * minimal homogeneous generators of `D(A)` and `D(A, m)` ([`logderiv`]),
//! * graded minimal free resolutions and Betti tables ([`resolution`]),
//! * freeness, SPOG and deletion classifications with consistency checks
//!   against the known structure theorems ([`classify`]),
//! * an independent degree-by-degree linear-algebra oracle ([`oracle`]).
//!
//! Everything sits on a small module Gröbner-basis engine ([`groebner`])
//! over [`poly::Polynomial`] with [`rational::Rational`] coefficients.

pub mod arrangement;
pub mod arrfile;
pub mod classify;
pub mod golden;
pub mod groebner;
pub mod lattice;
pub mod linalg;
pub mod logderiv;
pub mod oracle;
pub mod poly;
mod polyparse;
pub mod rational;
pub mod resolution;

pub use arrangement::{Arrangement, LinearForm, Multiarrangement};
pub use groebner::{GradedFreeModule, ModuleVector};
pub use logderiv::{DegreeSequence, Derivation, DerivationModule};
pub use poly::{Monomial, Polynomial};
pub use rational::Rational;
pub use resolution::{BettiTable, FreeResolution};

/// Errors raised by computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("variable index x{index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("variable x{index} still occurs in the polynomial")]
    VariableOccurs { index: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor must have a constant leading coefficient in the division variable")]
    NonMonicDivisor,
    #[error("polynomial syntax: {0}")]
    PolynomialSyntax(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("hyperplane index {index} out of range 1..={len}")]
    HyperplaneIndex { index: usize, len: usize },
    #[error("module rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
