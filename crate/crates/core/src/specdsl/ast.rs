//! Syntax tree. Equality ignores spans, so a program compares equal to the
//! result of re-parsing its formatted text.

use num_bigint::BigInt;

use super::error::SourceSpan;

#[derive(Clone, Debug)]
pub struct Ident {
    pub name: String,
    pub span: SourceSpan,
}

impl PartialEq for Ident {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Int(BigInt),
    Name(String),
    Zeta(u32),
    Neg(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: SourceSpan,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn children(&self) -> Vec<&Expr> {
        match &self.kind {
            ExprKind::Int(_) | ExprKind::Name(_) | ExprKind::Zeta(_) => Vec::new(),
            ExprKind::Neg(e) | ExprKind::Pow(e, _) => vec![e],
            ExprKind::Binary(_, l, r) => vec![l, r],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum StmtKind {
    Symbols(Vec<Ident>),
    Vars(Vec<Ident>),
    Let(Ident, Expr),
    Relation(Expr, Expr),
    Expand(Expr),
    Reduce(Expr),
    PermSum {
        n: u32,
        k: u32,
        letters: Option<(Ident, Ident)>,
    },
    Check(Expr, Expr),
}

#[derive(Clone, Debug)]
pub struct Stmt {
    pub kind: StmtKind,
    pub span: SourceSpan,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Stmt {
    pub fn is_command(&self) -> bool {
        matches!(
            self.kind,
            StmtKind::Expand(_) | StmtKind::Reduce(_) | StmtKind::PermSum { .. } | StmtKind::Check(..)
        )
    }

    pub fn exprs(&self) -> Vec<&Expr> {
        match &self.kind {
            StmtKind::Symbols(_) | StmtKind::Vars(_) | StmtKind::PermSum { .. } => Vec::new(),
            StmtKind::Let(_, e) | StmtKind::Expand(e) | StmtKind::Reduce(e) => vec![e],
            StmtKind::Relation(l, r) | StmtKind::Check(l, r) => vec![l, r],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Program {
    pub statements: Vec<Stmt>,
}

impl Program {
    pub fn symbol_count(&self) -> usize {
        self.decl_count(|k| match k {
            StmtKind::Symbols(ids) => ids.len(),
            _ => 0,
        })
    }

    pub fn relation_count(&self) -> usize {
        self.decl_count(|k| usize::from(matches!(k, StmtKind::Relation(..))))
    }

    fn decl_count(&self, f: impl Fn(&StmtKind) -> usize) -> usize {
        self.statements.iter().map(|s| f(&s.kind)).sum()
    }
}
