//! Exact scalar arithmetic: arbitrary-precision rationals and elements of
//! cyclotomic fields Q(ζₙ).

mod cyclotomic;
mod upoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("invalid root-of-unity order {0}")]
    InvalidOrder(u64),
    #[error("incompatible fields: Q(z{0}) and Q(z{1})")]
    IncompatibleFields(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse exact scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Parses `p`, `-p` or `p/q` into a normalized rational.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let err = |reason: &str| ExactError::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den == BigInt::from(0) {
        return Err(ExactError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
