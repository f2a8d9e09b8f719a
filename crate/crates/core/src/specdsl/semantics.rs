use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;

use super::ast::{BinOp, Expr, ExprKind, Ident, Program, Stmt, StmtKind};
use super::error::{DslError, DslErrorKind, SourceSpan};
use super::format::expr_text;
use crate::exactnum::Cyclotomic;
use crate::ncalg::{AlgebraError, NCPoly, RelationSet, Rule, Symbol, Word};
use crate::scalar::{Field, Scalar};

pub(crate) type Poly = NCPoly<Cyclotomic>;

fn is_symbol_name(name: &str) -> bool {
    name.starts_with(|c: char| c.is_ascii_uppercase())
}

/// Declarations in force at some point of a script.
#[derive(Default)]
pub(crate) struct Scope {
    symbols: Vec<Symbol>,
    vars: BTreeSet<String>,
    lets: BTreeMap<String, Cyclotomic>,
    rules: Vec<Rule<Cyclotomic>>,
    rule_field: Option<Field>,
    relations: Option<RelationSet<Cyclotomic>>,
}

fn join(a: Field, b: Field, span: SourceSpan) -> Result<Field, DslError> {
    a.join(b)
        .ok_or_else(|| DslError::new(DslErrorKind::FieldConflict(a, b), span))
}

fn poly_field(p: &Poly, span: SourceSpan) -> Result<Field, DslError> {
    p.field().map_err(|e| match e {
        AlgebraError::IncompatibleFields(a, b) => DslError::new(DslErrorKind::FieldConflict(a, b), span),
        other => DslError::new(DslErrorKind::Domain(other.to_string()), span),
    })
}

/// The value of a polynomial with only a constant term.
fn constant_value(p: &Poly) -> Option<Cyclotomic> {
    if p.is_zero() {
        return Some(Cyclotomic::zero());
    }
    let (m, w, c) = p.iter().next()?;
    (p.len() == 1 && m.is_one() && w.is_empty()).then(|| c.clone())
}

impl Scope {
    fn is_declared(&self, name: &str) -> bool {
        self.symbols.iter().any(|s| s.name() == name)
            || self.vars.contains(name)
            || self.lets.contains_key(name)
    }

    fn declare_name(&self, id: &Ident, want_symbol: bool) -> Result<(), DslError> {
        if self.is_declared(&id.name) {
            return Err(DslError::new(DslErrorKind::Redeclared(id.name.clone()), id.span));
        }
        if is_symbol_name(&id.name) != want_symbol {
            let expected = if want_symbol {
                "an uppercase letter"
            } else {
                "a lowercase letter or underscore"
            };
            return Err(DslError::new(
                DslErrorKind::WrongCase {
                    name: id.name.clone(),
                    expected,
                },
                id.span,
            ));
        }
        Ok(())
    }

    pub(crate) fn relations(&self) -> RelationSet<Cyclotomic> {
        self.relations
            .clone()
            .unwrap_or_else(|| RelationSet::new(Vec::new()).expect("empty set terminates"))
    }

    /// Applies a declaration statement; commands are ignored.
    pub(crate) fn declare(&mut self, stmt: &Stmt) -> Result<(), DslError> {
        match &stmt.kind {
            StmtKind::Symbols(ids) => {
                for id in ids {
                    self.declare_name(id, true)?;
                    self.symbols.push(Symbol::new(&id.name));
                }
            }
            StmtKind::Vars(ids) => {
                for id in ids {
                    self.declare_name(id, false)?;
                    self.vars.insert(id.name.clone());
                }
            }
            StmtKind::Let(name, e) => {
                self.declare_name(name, false)?;
                self.resolve(e, true)?;
                let value = constant_value(&self.eval(e)?)
                    .ok_or_else(|| DslError::new(DslErrorKind::NotScalar(expr_text(e)), e.span))?;
                self.lets.insert(name.name.clone(), value);
            }
            StmtKind::Relation(lhs, rhs) => self.add_relation(stmt, lhs, rhs)?,
            _ => {}
        }
        Ok(())
    }

    fn add_relation(&mut self, stmt: &Stmt, lhs: &Expr, rhs: &Expr) -> Result<(), DslError> {
        self.resolve(lhs, false)?;
        self.resolve(rhs, false)?;
        let mut letters = Vec::new();
        collect_word(lhs, &mut letters)?;
        let replacement = self.eval(rhs)?;
        let field = poly_field(&replacement, rhs.span)?;
        let field = match self.rule_field {
            Some(prev) => join(prev, field, rhs.span)?,
            None => field,
        };
        let mut rules = self.rules.clone();
        rules.push(Rule::new(Word::from_symbols(letters), replacement));
        let set = RelationSet::with_preferred_order(rules.clone(), &self.symbols).map_err(|e| {
            let kind = match e {
                AlgebraError::NonTerminating { rule, reason } => DslErrorKind::NonTerminating { rule, reason },
                other => DslErrorKind::Domain(other.to_string()),
            };
            DslError::new(kind, stmt.span)
        })?;
        self.rules = rules;
        self.rule_field = Some(field);
        self.relations = Some(set);
        Ok(())
    }

    /// Checks that every identifier is declared; with `scalar_only`, only
    /// `let` constants are allowed.
    pub(crate) fn resolve(&self, e: &Expr, scalar_only: bool) -> Result<(), DslError> {
        if let ExprKind::Name(name) = &e.kind {
            if !self.is_declared(name) {
                return Err(DslError::new(DslErrorKind::Undeclared(name.clone()), e.span));
            }
            if scalar_only && !self.lets.contains_key(name) {
                return Err(DslError::new(DslErrorKind::NotScalar(name.clone()), e.span));
            }
        }
        e.children()
            .into_iter()
            .try_for_each(|c| self.resolve(c, scalar_only))
    }

    pub(crate) fn check_symbol(&self, id: &Ident) -> Result<Symbol, DslError> {
        self.symbols
            .iter()
            .find(|s| s.name() == id.name)
            .cloned()
            .ok_or_else(|| DslError::new(DslErrorKind::Undeclared(id.name.clone()), id.span))
    }

    /// Field every reduction input must be compatible with.
    pub(crate) fn rule_field(&self) -> Field {
        self.rule_field.unwrap_or(Field::Rational)
    }

    pub(crate) fn eval(&self, e: &Expr) -> Result<Poly, DslError> {
        Ok(match &e.kind {
            ExprKind::Int(v) => Poly::constant(Cyclotomic::from(BigRational::from_integer(v.clone()))),
            ExprKind::Name(name) => {
                if is_symbol_name(name) {
                    Poly::symbol(name)
                } else if let Some(c) = self.lets.get(name) {
                    Poly::constant(c.clone())
                } else {
                    Poly::var(name)
                }
            }
            ExprKind::Zeta(n) => Poly::constant(
                Cyclotomic::zeta(*n).map_err(|err| DslError::new(DslErrorKind::Domain(err.to_string()), e.span))?,
            ),
            ExprKind::Neg(inner) => -self.eval(inner)?,
            ExprKind::Pow(base, exp) => {
                let b = self.eval(base)?;
                poly_field(&b, base.span)?;
                b.pow(*exp)
            }
            ExprKind::Binary(op, l, r) => {
                let (a, b) = (self.eval(l)?, self.eval(r)?);
                join(poly_field(&a, l.span)?, poly_field(&b, r.span)?, e.span)?;
                match op {
                    BinOp::Add => &a + &b,
                    BinOp::Sub => &a - &b,
                    BinOp::Mul => &a * &b,
                    BinOp::Div => {
                        let d = constant_value(&b)
                            .ok_or_else(|| DslError::new(DslErrorKind::NotScalar(expr_text(r)), r.span))?;
                        let inv = d
                            .try_recip()
                            .ok_or_else(|| DslError::new(DslErrorKind::DivisionByZero, r.span))?;
                        a.scale(&inv)
                    }
                }
            }
        })
    }
}

/// Letters of a relation's left side, which must be a product of symbols.
fn collect_word(e: &Expr, out: &mut Vec<Symbol>) -> Result<(), DslError> {
    let bad = || DslError::new(DslErrorKind::RelationLhs, e.span);
    match &e.kind {
        ExprKind::Name(n) if is_symbol_name(n) => out.push(Symbol::new(n)),
        ExprKind::Binary(BinOp::Mul, l, r) => {
            collect_word(l, out)?;
            collect_word(r, out)?;
        }
        ExprKind::Pow(base, exp) if *exp > 0 => {
            let mut inner = Vec::new();
            collect_word(base, &mut inner)?;
            for _ in 0..*exp {
                out.extend(inner.iter().cloned());
            }
        }
        _ => return Err(bad()),
    }
    Ok(())
}

/// Declaration and relation checks for a whole program.
pub(crate) fn validate(program: &Program) -> Result<(), DslError> {
    let mut scope = Scope::default();
    for stmt in &program.statements {
        scope.declare(stmt)?;
        check_command(&scope, stmt)?;
    }
    Ok(())
}

pub(crate) fn check_command(scope: &Scope, stmt: &Stmt) -> Result<(), DslError> {
    if !stmt.is_command() {
        return Ok(());
    }
    for e in stmt.exprs() {
        scope.resolve(e, false)?;
    }
    if let StmtKind::PermSum { n, k, letters } = &stmt.kind {
        if k > n {
            return Err(DslError::new(
                DslErrorKind::Domain(format!("permsum needs k <= n, got n={n}, k={k}")),
                stmt.span,
            ));
        }
        if let Some((a, b)) = letters {
            scope.check_symbol(a)?;
            scope.check_symbol(b)?;
            if a.name == b.name {
                return Err(DslError::new(
                    DslErrorKind::Domain(format!("permsum letters must differ, got {} twice", a.name)),
                    b.span,
                ));
            }
        }
    }
    Ok(())
}
