//! Noncommutative polynomial algebra: words over formal symbols, terms with
//! commuting-variable monomials, permutation sums, power expansion, and
//! reduction by oriented rewrite rules.

mod monomial;
mod permsum;
mod poly;
mod rewrite;
mod word;

use thiserror::Error;

pub use monomial::CommMonomial;
pub use permsum::{
    distinct_arrangements, expand_power, grade, next_arrangement, perm_sum, perm_sum_of,
};
pub use poly::NCPoly;
pub use rewrite::{RelationSet, Rule, Strategy};
pub use word::{Symbol, Word};

use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("symbol {0} appears more than once")]
    DuplicateSymbol(Symbol),
    #[error("rule {rule}: {reason}")]
    NonTerminating { rule: String, reason: String },
    #[error("incompatible coefficient fields {0} and {1}")]
    IncompatibleFields(Field, Field),
}
