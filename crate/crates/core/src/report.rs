//! Report records shared by the constraint certification and the Dirac
//! checks. Exact scalars are always serialized as strings.

use serde::{Deserialize, Serialize};

use crate::linmat::{Matrix, MatrixError};
use crate::scalar::Scalar;

/// The verdict for one matrix relation `lhs = rhs`, checked as `lhs − rhs = 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
    /// Squared Frobenius norm of the defect, present on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect_norm_sq: Option<String>,
    /// The defect matrix `lhs − rhs`, present on failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect: Option<Vec<Vec<String>>>,
}

impl RelationCheck {
    pub fn from_defect<S: Scalar>(name: impl Into<String>, defect: &Matrix<S>) -> Self {
        let passed = defect.is_zero();
        RelationCheck {
            name: name.into(),
            passed,
            defect_norm_sq: (!passed).then(|| defect.frobenius_norm_sq().to_string()),
            defect: (!passed).then(|| defect.to_string_rows()),
        }
    }

    /// Checks `lhs = rhs`.
    pub fn equality<S: Scalar>(
        name: impl Into<String>,
        lhs: &Matrix<S>,
        rhs: &Matrix<S>,
    ) -> Result<Self, MatrixError> {
        Ok(Self::from_defect(name, &lhs.try_sub(rhs)?))
    }
}

/// A named batch of relation checks over one matrix family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub dim: usize,
    pub field: String,
    pub checks: Vec<RelationCheck>,
    pub all_passed: bool,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>, dim: usize, field: String, checks: Vec<RelationCheck>) -> Self {
        let all_passed = checks.iter().all(|c| c.passed);
        CheckReport {
            subject: subject.into(),
            dim,
            field,
            checks,
            all_passed,
        }
    }

    pub fn check(&self, name: &str) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("{} ({}x{} over {})\n", self.subject, self.dim, self.dim, self.field);
        for c in &self.checks {
            out.push_str(&render_check(c));
        }
        out
    }
}

pub(crate) fn render_check(c: &RelationCheck) -> String {
    let mut line = format!("  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name);
    if let Some(n) = &c.defect_norm_sq {
        line.push_str(&format!("  (defect |.|^2 = {n})"));
    }
    line.push('\n');
    line
}
