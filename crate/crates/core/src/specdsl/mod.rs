//! A small scripting language for relation experiments.
//!
//! ```text
//! symbols X Y;
//! vars x y;
//! let w = zeta(3);
//! relation Y*X = w*X*Y;
//! relation X^3 = 1;
//! relation Y^3 = 1;
//! reduce (x*X + y*Y)^3;     # (x^3 + y^3)*1
//! ```
//!
//! Uppercase identifiers are noncommutative symbols, lowercase ones are
//! commutative variables or `let` constants. Every statement ends in `;`
//! and `#` starts a comment.

mod ast;
mod error;
mod format;
mod lexer;
mod parser;
mod run;
mod semantics;

pub use ast::{BinOp, Expr, ExprKind, Ident, Program, Stmt, StmtKind};
pub use error::{DslError, DslErrorKind, SourceSpan};
pub use format::format;
pub use run::{run, CommandOutput, Report};

/// Parses and validates a script: syntax, declarations, and termination of
/// the declared relations.
pub fn parse(text: &str) -> Result<Program, DslError> {
    let program = parser::parse_syntax(text)?;
    semantics::validate(&program)?;
    Ok(program)
}

/// Parses then runs a script.
pub fn run_text(text: &str) -> Result<Report, DslError> {
    run(&parse(text)?)
}
