//! Exact dense matrices over any [`Scalar`](crate::scalar::Scalar), the
//! standard fixtures (Pauli, clock/shift, Γ-triples), and evaluation of
//! noncommutative polynomials at matrix assignments.

mod eval;
mod fixtures;
mod matrix;

use num_bigint::BigInt;
use thiserror::Error;

pub use eval::{evaluate, Bindings};
pub use fixtures::{
    all_triples, build_gamma_triple, clock_shift, pauli_x, pauli_y, pauli_z, primitive_triples,
    pythagorean_defect, GammaTriple, InvariantCheck,
};
pub use matrix::Matrix;

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("field error: cannot combine {0} and {1}")]
    Field(Field, Field),
    #[error("missing binding for {0}")]
    MissingBinding(String),
    #[error("not a Pythagorean triple (defect {defect})")]
    NotATriple { defect: BigInt },
    #[error("domain error: {0}")]
    Domain(String),
}
