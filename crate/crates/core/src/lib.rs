//! Exact and numerical tools for matrix linearizations of `xⁿ + yⁿ = zⁿ`.
//!
//! The algebra is generic over a [`scalar::Scalar`] coefficient type; the
//! aliases below name the concrete instantiations used throughout.
//!
//! - [`exactnum`]: rationals and cyclotomic numbers Q(ζₙ)
//! - [`ncalg`]: noncommutative polynomials, permutation sums, rewriting
//! - [`linmat`]: dense matrices, evaluation, the standard fixtures
//! - [`linearize`]: the power-n constraint system and certification
//! - [`dirac`]: Dirac alpha/beta and gamma matrix checks
//! - [`numsearch`]: residual minimization over complex matrices
//! - [`specdsl`]: the `.ncs` scripting language
//! - [`cli`]: the `nclin` command

pub mod cli;
pub mod dirac;
pub mod exactnum;
pub mod linearize;
pub mod linmat;
pub mod ncalg;
pub mod numsearch;
pub mod report;
pub mod scalar;
pub mod specdsl;

pub use exactnum::{Cyclotomic, Rational};
pub use num_complex::Complex64;
pub use scalar::{Field, Scalar};

pub type RatMatrix = linmat::Matrix<Rational>;
pub type CycloMatrix = linmat::Matrix<Cyclotomic>;
pub type FloatMatrix = linmat::Matrix<Complex64>;
pub type RatPoly = ncalg::NCPoly<Rational>;
pub type CycloPoly = ncalg::NCPoly<Cyclotomic>;
