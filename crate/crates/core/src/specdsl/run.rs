use serde::Serialize;

use super::ast::{Program, StmtKind};
use super::error::{DslError, DslErrorKind, SourceSpan};
use super::format::stmt_text;
use super::semantics::{check_command, Poly, Scope};
use crate::exactnum::Cyclotomic;
use crate::ncalg::{perm_sum_of, Symbol};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandOutput {
    pub command: String,
    pub span: SourceSpan,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize)]
pub struct Report {
    pub outputs: Vec<CommandOutput>,
}

impl Report {
    pub fn results(&self) -> Vec<&str> {
        self.outputs.iter().map(|o| o.result.as_str()).collect()
    }

    pub fn render_text(&self) -> String {
        self.outputs
            .iter()
            .map(|o| format!("{};\n  {}\n", o.command, o.result))
            .collect()
    }
}

/// Executes the commands of a program in order. `reduce` and `check` use
/// the relations declared before them.
pub fn run(program: &Program) -> Result<Report, DslError> {
    let mut scope = Scope::default();
    let mut report = Report::default();
    for stmt in &program.statements {
        scope.declare(stmt)?;
        check_command(&scope, stmt)?;
        let result = match &stmt.kind {
            StmtKind::Expand(e) => scope.eval(e)?.to_string(),
            StmtKind::Reduce(e) => reduce(&scope, scope.eval(e)?, stmt.span)?.to_string(),
            StmtKind::Check(l, r) => {
                let diff = &scope.eval(l)? - &scope.eval(r)?;
                let reduced = reduce(&scope, diff, stmt.span)?;
                if reduced.is_zero() {
                    "holds".to_string()
                } else {
                    format!("fails: difference reduces to {reduced}")
                }
            }
            StmtKind::PermSum { n, k, letters } => {
                let (a, b) = match letters {
                    Some((a, b)) => (Symbol::new(&a.name), Symbol::new(&b.name)),
                    None => (Symbol::new("X"), Symbol::new("Y")),
                };
                perm_sum_of::<Cyclotomic>(&a, &b, *n, *k, false)
                    .map_err(|e| DslError::new(DslErrorKind::Domain(e.to_string()), stmt.span))?
                    .to_string()
            }
            _ => continue,
        };
        report.outputs.push(CommandOutput {
            command: stmt_text(&stmt.kind),
            span: stmt.span,
            result,
        });
    }
    Ok(report)
}

fn reduce(scope: &Scope, p: Poly, span: SourceSpan) -> Result<Poly, DslError> {
    let field = p
        .field()
        .map_err(|e| DslError::new(DslErrorKind::Domain(e.to_string()), span))?;
    let rules = scope.rule_field();
    if field.join(rules).is_none() {
        return Err(DslError::new(DslErrorKind::FieldConflict(field, rules), span));
    }
    Ok(scope.relations().reduce(&p))
}
