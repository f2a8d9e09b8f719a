//! The coefficient abstraction shared by polynomials and matrices.
//!
//! Everything downstream (noncommutative polynomials, dense matrices, the
//! constraint checks) is written against [`Scalar`], so the same code runs
//! over exact rationals, exact cyclotomic numbers and complex doubles.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// The field a scalar value lives in.
///
/// Rationals embed into every cyclotomic field, so `Rational` joins with any
/// `Cyclotomic(n)`. Two different cyclotomic orders never join.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Field {
    Rational,
    Cyclotomic(u32),
    Complex,
}

impl Field {
    pub fn join(self, other: Field) -> Option<Field> {
        match (self, other) {
            (a, b) if a == b => Some(a),
            (Field::Rational, Field::Cyclotomic(n)) | (Field::Cyclotomic(n), Field::Rational) => {
                Some(Field::Cyclotomic(n))
            }
            _ => None,
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, Field::Complex)
    }
}

impl Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Cyclotomic(n) => write!(f, "cyclotomic:{n}"),
            Field::Complex => write!(f, "complex"),
        }
    }
}

/// A field element usable as a polynomial coefficient or matrix entry.
///
/// The arithmetic operators may panic when the operands live in
/// incompatible fields (two different cyclotomic orders); containers check
/// [`Field::join`] before combining values, so this only fires on misuse.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn field(&self) -> Field;

    /// Multiplicative inverse, `None` for zero.
    fn try_recip(&self) -> Option<Self>;

    fn from_bigint(value: &BigInt) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_bigint(&BigInt::from(value))
    }

    /// Image of a rational under the canonical embedding Q → field.
    fn from_rational(q: &BigRational) -> Self {
        let den = Self::from_bigint(q.denom())
            .try_recip()
            .expect("denominator is positive");
        Self::from_bigint(q.numer()) * den
    }

    /// Complex conjugate (the identity on real fields).
    fn conj(&self) -> Self;

    /// Whether the textual form needs parentheses when used as a factor.
    fn is_compound(&self) -> bool {
        let s = self.to_string();
        s.trim_start_matches('-').contains(['+', '-'])
    }
}

impl Scalar for BigRational {
    fn field(&self) -> Field {
        Field::Rational
    }

    fn try_recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_bigint(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn is_compound(&self) -> bool {
        false
    }
}

impl Scalar for Complex64 {
    fn field(&self) -> Field {
        Field::Complex
    }

    fn try_recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }

    fn from_bigint(value: &BigInt) -> Self {
        Complex64::new(value.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn from_rational(q: &BigRational) -> Self {
        Complex64::new(rational_to_f64(q), 0.0)
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn is_compound(&self) -> bool {
        self.re != 0.0 && self.im != 0.0
    }
}

/// Exact rational to double, used when building float images of exact data.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // huge operands: scale down before dividing
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer().abs() >> shift).to_f64().unwrap_or(f64::INFINITY);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::INFINITY);
            let v = n / d;
            if r.is_negative() {
                -v
            } else {
                v
            }
        }
    }
}

/// Renders `c * rest` with sign handling, where `rest` is a `*`-joined
/// product (possibly empty). Returns the sign and the magnitude text.
pub(crate) fn render_scaled<S: Scalar>(c: &S, rest: &str) -> (bool, String) {
    let text = c.to_string();
    let (negative, mag) = if c.is_compound() {
        (false, format!("({text})"))
    } else if let Some(stripped) = text.strip_prefix('-') {
        (true, stripped.to_string())
    } else {
        (false, text)
    };
    if rest.is_empty() {
        (negative, mag)
    } else if mag == "1" {
        (negative, rest.to_string())
    } else {
        (negative, format!("{mag}*{rest}"))
    }
}

/// Joins signed pieces into `a + b - c`.
pub(crate) fn join_signed(pieces: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, text)) in pieces.into_iter().enumerate() {
        match (i, negative) {
            (0, false) => out.push_str(&text),
            (0, true) => {
                out.push('-');
                out.push_str(&text);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&text);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&text);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_join_rules() {
        assert_eq!(Field::Rational.join(Field::Cyclotomic(3)), Some(Field::Cyclotomic(3)));
        assert_eq!(Field::Cyclotomic(4).join(Field::Cyclotomic(4)), Some(Field::Cyclotomic(4)));
        assert_eq!(Field::Cyclotomic(3).join(Field::Cyclotomic(4)), None);
        assert_eq!(Field::Complex.join(Field::Rational), None);
    }

    #[test]
    fn scaled_rendering() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(render_scaled(&r(1, 1), "X*Y"), (false, "X*Y".to_string()));
        assert_eq!(render_scaled(&r(-1, 1), "X*Y"), (true, "X*Y".to_string()));
        assert_eq!(render_scaled(&r(-3, 5), ""), (true, "3/5".to_string()));
        assert_eq!(
            join_signed(vec![(false, "a".into()), (true, "b".into())]),
            "a - b"
        );
        assert_eq!(join_signed(Vec::new()), "0");
    }

    #[test]
    fn huge_rational_to_float() {
        let big = BigInt::from(10).pow(400);
        let r = BigRational::new(big.clone() * 3, big);
        assert!((rational_to_f64(&r) - 3.0).abs() < 1e-12);
    }
}
