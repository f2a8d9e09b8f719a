use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::scalar::Field;

/// Location of a node in the source text. Lines and columns are 1-based
/// (columns count characters); `start..end` are byte offsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    /// Smallest span covering both (positions taken from the earlier one).
    pub fn to(self, other: SourceSpan) -> SourceSpan {
        let (first, _) = if self.start <= other.start {
            (self, other)
        } else {
            (other, self)
        };
        SourceSpan {
            end: self.end.max(other.end),
            ..first
        }
    }

    pub fn contains(&self, inner: &SourceSpan) -> bool {
        self.start <= inner.start && inner.end <= self.end
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum DslErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected {0}")]
    UnexpectedToken(String),
    #[error("integer {0} is too large here")]
    IntegerTooLarge(String),
    #[error("undeclared identifier {0}")]
    Undeclared(String),
    #[error("identifier {0} is already declared")]
    Redeclared(String),
    #[error("{name} must start with {expected}")]
    WrongCase { name: String, expected: &'static str },
    #[error("{0} is not a scalar expression")]
    NotScalar(String),
    #[error("left side of a relation must be a product of symbols")]
    RelationLhs,
    #[error("{reason}: {rule}")]
    NonTerminating { rule: String, reason: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field conflict: {0} vs {1}")]
    FieldConflict(Field, Field),
    #[error("{0}")]
    Domain(String),
}

/// A diagnostic with the span it refers to and, for syntax errors, the
/// tokens that would have been accepted.
#[derive(Clone, Debug, PartialEq, Error)]
pub struct DslError {
    pub kind: DslErrorKind,
    pub span: SourceSpan,
    pub expected: Vec<String>,
}

impl DslError {
    pub fn new(kind: DslErrorKind, span: SourceSpan) -> Self {
        DslError {
            kind,
            span,
            expected: Vec::new(),
        }
    }

    pub fn expecting(kind: DslErrorKind, span: SourceSpan, expected: &[&str]) -> Self {
        DslError {
            kind,
            span,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind, self.span)?;
        if !self.expected.is_empty() {
            write!(f, "; expected {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}
