//! Numerical probe of the unit-power and permutation-sum constraints.
//!
//! The residual of a pair `(A, B)` at power `n` is
//! `‖Aⁿ − 𝟙‖² + ‖Bⁿ − 𝟙‖² + Σₖ ‖perm_sum(n,k)(A,B)‖²` in the Frobenius
//! norm. [`search`] minimizes it by gradient descent from seeded random
//! starts. A small residual floor is evidence, not a proof.

mod residual;
mod search;

use num_complex::Complex64;
use thiserror::Error;

use crate::linmat::Matrix;

pub use residual::{grad_check, gradient, residual};
pub use search::{search, SearchConfig, SearchResult};

pub type FloatMatrix = Matrix<Complex64>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid search configuration: {0}")]
    Config(String),
}

/// Float image of an exact matrix.
pub fn to_float<S: crate::scalar::Scalar>(
    m: &Matrix<S>,
    embed: impl Fn(&S) -> Complex64,
) -> FloatMatrix {
    m.map(embed)
}
