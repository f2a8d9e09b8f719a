use super::ast::{BinOp, Expr, ExprKind, Program, StmtKind};

fn precedence(e: &Expr) -> u8 {
    match &e.kind {
        ExprKind::Binary(BinOp::Add | BinOp::Sub, ..) => 1,
        ExprKind::Binary(BinOp::Mul | BinOp::Div, ..) => 2,
        ExprKind::Neg(_) => 3,
        ExprKind::Pow(..) => 4,
        ExprKind::Int(_) | ExprKind::Name(_) | ExprKind::Zeta(_) => 5,
    }
}

fn wrapped(e: &Expr, parens: bool) -> String {
    let text = expr_text(e);
    if parens {
        format!("({text})")
    } else {
        text
    }
}

/// Canonical text of an expression: minimal parentheses that preserve the
/// tree (operators are left-associative).
pub fn expr_text(e: &Expr) -> String {
    match &e.kind {
        ExprKind::Int(v) => v.to_string(),
        ExprKind::Name(n) => n.clone(),
        ExprKind::Zeta(n) => format!("zeta({n})"),
        ExprKind::Neg(inner) => format!("-{}", wrapped(inner, precedence(inner) <= 3)),
        ExprKind::Pow(base, exp) => format!("{}^{exp}", wrapped(base, precedence(base) <= 4)),
        ExprKind::Binary(op, l, r) => {
            let p = precedence(e);
            let (left, right) = (wrapped(l, precedence(l) < p), wrapped(r, precedence(r) <= p));
            match op {
                BinOp::Add => format!("{left} + {right}"),
                BinOp::Sub => format!("{left} - {right}"),
                BinOp::Mul => format!("{left}*{right}"),
                BinOp::Div => format!("{left}/{right}"),
            }
        }
    }
}

pub(crate) fn stmt_text(kind: &StmtKind) -> String {
    let names = |ids: &[super::ast::Ident]| {
        ids.iter().map(|i| i.name.as_str()).collect::<Vec<_>>().join(" ")
    };
    match kind {
        StmtKind::Symbols(ids) => format!("symbols {}", names(ids)),
        StmtKind::Vars(ids) => format!("vars {}", names(ids)),
        StmtKind::Let(name, e) => format!("let {} = {}", name.name, expr_text(e)),
        StmtKind::Relation(l, r) => format!("relation {} = {}", expr_text(l), expr_text(r)),
        StmtKind::Check(l, r) => format!("check {} = {}", expr_text(l), expr_text(r)),
        StmtKind::Expand(e) => format!("expand {}", expr_text(e)),
        StmtKind::Reduce(e) => format!("reduce {}", expr_text(e)),
        StmtKind::PermSum { n, k, letters } => match letters {
            Some((a, b)) => format!("permsum {n} {k} {} {}", a.name, b.name),
            None => format!("permsum {n} {k}"),
        },
    }
}

/// Pretty-prints a program, one statement per line. Comments are dropped.
pub fn format(program: &Program) -> String {
    program
        .statements
        .iter()
        .map(|s| format!("{};\n", stmt_text(&s.kind)))
        .collect()
}
