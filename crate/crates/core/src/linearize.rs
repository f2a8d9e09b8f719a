//! The linearization program for `zⁿ = xⁿ + yⁿ`: the constraint system that
//! matrices `X`, `Y` must satisfy for `(x·X + y·Y)ⁿ = (xⁿ + yⁿ)·𝟙`, the
//! equation-counting compatibility verdict, and exact certification of
//! candidate matrices.
//!
//! Expanding `(x·X + y·Y)ⁿ` noncommutatively gives
//! `xⁿ·Xⁿ + Σₖ x^{n−k} yᵏ · PermSumₖ(X, Y) + yⁿ·Yⁿ`, so the candidate works for
//! every `(x, y)` exactly when `Xⁿ = Yⁿ = 𝟙` and every mixed permutation sum
//! `PermSumₖ`, `0 < k < n`, vanishes.

use num_bigint::BigInt;
use num_traits::Pow;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::Rational;
use crate::linmat::{evaluate, Bindings, Matrix, MatrixError};
use crate::ncalg::{perm_sum, AlgebraError, NCPoly, Symbol, Word};
use crate::report::{render_check, RelationCheck};
use crate::scalar::Scalar;

/// Number of unknown matrices (Γˣ, Γʸ, Γᶻ) in the counting argument.
pub const UNKNOWN_COUNT: u32 = 3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinearizeError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstraintKind {
    /// `symbolⁿ = 𝟙`.
    UnitPower { symbol: String },
    /// `PermSumₖ(X, Y) = 0`.
    PermSum { k: u32 },
}

/// One algebraic constraint `poly = rhs`, with `rhs` either 0 or ε.
#[derive(Clone, Debug, PartialEq)]
pub struct Constraint {
    pub kind: ConstraintKind,
    pub poly: NCPoly<Rational>,
    pub rhs_is_identity: bool,
}

impl Constraint {
    pub fn name(&self, n: u32) -> String {
        match &self.kind {
            ConstraintKind::UnitPower { symbol } => format!("{symbol}^{n} = 1"),
            ConstraintKind::PermSum { k } => format!("perm_sum({n},{k}) = 0"),
        }
    }

    /// `poly − rhs` as a single polynomial that must vanish.
    pub fn residual_poly(&self) -> NCPoly<Rational> {
        if self.rhs_is_identity {
            &self.poly - &NCPoly::one()
        } else {
            self.poly.clone()
        }
    }
}

impl std::fmt::Display for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = {}", self.poly, if self.rhs_is_identity { "1" } else { "0" })
    }
}

/// The full relation set for power `n`, plus the tally used by the counting
/// argument.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstraintSystem {
    pub n: u32,
    /// `Xⁿ = ε`, `Yⁿ = ε`, then `PermSumₖ = 0` for k = 1..n−1.
    pub constraints: Vec<Constraint>,
    /// `n + 1`: the n − 1 permutation-sum equations together with the scalar
    /// equation and the linear ansatz. Unit-power relations are not counted.
    pub condition_count: u32,
    pub unknown_count: u32,
}

impl ConstraintSystem {
    pub fn perm_sum_constraints(&self) -> impl Iterator<Item = &Constraint> {
        self.constraints
            .iter()
            .filter(|c| matches!(c.kind, ConstraintKind::PermSum { .. }))
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("constraint system for n = {}\n", self.n);
        for c in &self.constraints {
            out.push_str(&format!("  {c}\n"));
        }
        out
    }
}

pub fn constraint_system(n: u32) -> Result<ConstraintSystem, LinearizeError> {
    if n == 0 {
        return Err(LinearizeError::Domain("n must be at least 1".to_string()));
    }
    let mut constraints = Vec::with_capacity(n as usize + 1);
    for sym in ["X", "Y"] {
        constraints.push(Constraint {
            kind: ConstraintKind::UnitPower {
                symbol: sym.to_string(),
            },
            poly: NCPoly::word(Word::repeat(&Symbol::new(sym), n as usize)),
            rhs_is_identity: true,
        });
    }
    for k in 1..n {
        constraints.push(Constraint {
            kind: ConstraintKind::PermSum { k },
            poly: perm_sum(n, k)?,
            rhs_is_identity: false,
        });
    }
    Ok(ConstraintSystem {
        n,
        constraints,
        condition_count: n + 1,
        unknown_count: UNKNOWN_COUNT,
    })
}

/// The equation-counting verdict: compatible iff `n + 1 ≤ 3`.
///
/// This is only the counting heuristic; it says nothing about whether
/// matrices satisfying the constraints exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountingVerdict {
    pub n: u32,
    pub compatible: bool,
    pub conditions: u32,
    pub unknowns: u32,
    pub explanation: String,
}

pub fn counting_compatibility(n: u32) -> CountingVerdict {
    let conditions = n + 1;
    let compatible = conditions <= UNKNOWN_COUNT;
    let explanation = if compatible {
        format!(
            "{conditions} conditions <= {UNKNOWN_COUNT} unknowns: compatible by equation counting"
        )
    } else {
        format!(
            "{conditions} conditions > {UNKNOWN_COUNT} unknowns: incompatible by equation counting"
        )
    };
    CountingVerdict {
        n,
        compatible,
        conditions,
        unknowns: UNKNOWN_COUNT,
        explanation,
    }
}

/// Exact verdict on a candidate `(X, Y)` for power `n` and integers `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub n: u32,
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub dim: usize,
    pub field: String,
    pub constraints: Vec<RelationCheck>,
    pub all_constraints_pass: bool,
    /// Γᶻ = (x·X + y·Y)/z.
    pub gz: Vec<Vec<String>>,
    /// `(Γᶻ)ⁿ = 𝟙`.
    pub gz_power_check: bool,
    /// `c` when `(Γᶻ)ⁿ = c·𝟙`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gz_power_scalar: Option<String>,
    /// `zⁿ = xⁿ + yⁿ` over the integers.
    pub fermat_check: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CertificationReport {
    /// When every algebraic constraint holds, `(Γᶻ)ⁿ = (xⁿ + yⁿ)/zⁿ · 𝟙`, so
    /// the two final checks must agree.
    pub fn is_consistent(&self) -> bool {
        !self.all_constraints_pass || self.gz_power_check == self.fermat_check
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "certify n = {} at (x, y, z) = ({}, {}, {}), {}x{} over {}\n",
            self.n, self.x, self.y, self.z, self.dim, self.dim, self.field
        );
        for c in &self.constraints {
            out.push_str(&render_check(c));
        }
        let verdict = |b: bool| if b { "pass" } else { "FAIL" };
        out.push_str(&format!("  all algebraic constraints: {}\n", verdict(self.all_constraints_pass)));
        out.push_str(&format!("  Gz = {}\n", render_rows(&self.gz)));
        out.push_str(&format!("  Gz^{} = 1: {}", self.n, verdict(self.gz_power_check)));
        if let Some(c) = &self.gz_power_scalar {
            out.push_str(&format!("  (Gz^{} = {c} * 1)", self.n));
        }
        out.push('\n');
        out.push_str(&format!(
            "  z^n = x^n + y^n: {}\n",
            verdict(self.fermat_check)
        ));
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        out
    }
}

pub(crate) fn render_rows(rows: &[Vec<String>]) -> String {
    let inner: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", inner.join(", "))
}

/// Checks every constraint of `constraint_system(n)` at `(X, Y) = (gx, gy)`,
/// derives Γᶻ = (x·gx + y·gy)/z and checks `(Γᶻ)ⁿ = 𝟙`, and independently
/// checks `zⁿ = xⁿ + yⁿ` over the integers.
pub fn certify_solution<S: Scalar>(
    n: u32,
    x: u64,
    y: u64,
    z: u64,
    gx: &Matrix<S>,
    gy: &Matrix<S>,
) -> Result<CertificationReport, LinearizeError> {
    if z == 0 {
        return Err(LinearizeError::Domain("z must be nonzero".to_string()));
    }
    let system = constraint_system(n)?;
    let dim = gx.dim();
    let bindings = Bindings::new(dim)
        .with_symbol("X", gx.clone())?
        .with_symbol("Y", gy.clone())?;
    let field = gx.field()?;
    let field = field
        .join(gy.field()?)
        .ok_or(MatrixError::Field(field, gy.field()?))?;

    let mut checks = Vec::with_capacity(system.constraints.len());
    for c in &system.constraints {
        let residual = c.residual_poly().map_coeffs(|q| S::from_rational(q));
        let defect = evaluate(&residual, &bindings)?;
        checks.push(RelationCheck::from_defect(c.name(n), &defect));
    }
    let all_constraints_pass = checks.iter().all(|c| c.passed);

    let int = |v: u64| S::from_bigint(&BigInt::from(v));
    let inv_z = int(z).try_recip().expect("z is nonzero");
    let gz = gx
        .scale(&int(x))
        .try_add(&gy.scale(&int(y)))?
        .scale(&inv_z);
    let power = gz.mat_pow(n);
    let gz_power_scalar = power.is_scalar_multiple_of_identity();
    let gz_power_check = gz_power_scalar.as_ref().is_some_and(|c| c.is_one());

    let big = |v: u64| BigInt::from(v).pow(n);
    let fermat_check = big(z) == big(x) + big(y);

    let mut notes = Vec::new();
    if x == 0 || y == 0 {
        notes.push("degenerate input: x or y is zero, the linear form has one term".to_string());
    }
    if all_constraints_pass && !fermat_check {
        notes.push(format!(
            "constraints hold, so Gz^{n} = (x^{n} + y^{n})/z^{n} * 1 = {}/{} * 1",
            big(x) + big(y),
            big(z)
        ));
    }
    Ok(CertificationReport {
        n,
        x,
        y,
        z,
        dim,
        field: field.to_string(),
        constraints: checks,
        all_constraints_pass,
        gz: gz.to_string_rows(),
        gz_power_check,
        gz_power_scalar: gz_power_scalar.map(|c| c.to_string()),
        fermat_check,
        notes,
    })
}
