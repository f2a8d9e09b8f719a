use num_traits::ToPrimitive;

use super::ast::{BinOp, Expr, ExprKind, Ident, Program, Stmt, StmtKind};
use super::error::{DslError, DslErrorKind, SourceSpan};
use super::lexer::{tokenize, Tok, Token};

/// Largest accepted `^` exponent.
pub const MAX_EXPONENT: u32 = 64;
/// Largest accepted `permsum` length.
pub const MAX_PERMSUM: u32 = 24;

const EXPR_START: &[&str] = &["identifier", "integer", "zeta", "'('", "'-'"];
const STMT_START: &[&str] = &[
    "symbols", "vars", "let", "relation", "expand", "reduce", "permsum", "check",
];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

pub(crate) fn parse_syntax(text: &str) -> Result<Program, DslError> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let mut statements = Vec::new();
    while p.peek() != &Tok::Eof {
        statements.push(p.statement()?);
    }
    Ok(Program { statements })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn span(&self) -> SourceSpan {
        self.tokens[self.pos].span
    }

    fn prev_span(&self) -> SourceSpan {
        self.tokens[self.pos.saturating_sub(1)].span
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> DslError {
        DslError::expecting(
            DslErrorKind::UnexpectedToken(self.peek().describe()),
            self.span(),
            expected,
        )
    }

    fn eat_punct(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Punct(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_punct(&mut self, c: char) -> Result<SourceSpan, DslError> {
        if self.eat_punct(c) {
            Ok(self.prev_span())
        } else {
            Err(self.unexpected(&[&format!("'{c}'")]))
        }
    }

    fn ident(&mut self) -> Result<Ident, DslError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let span = self.bump().span;
                Ok(Ident { name, span })
            }
            _ => Err(self.unexpected(&["identifier"])),
        }
    }

    fn small_int(&mut self, limit: u32) -> Result<u32, DslError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                let span = self.bump().span;
                v.to_u32()
                    .filter(|&x| x <= limit)
                    .ok_or_else(|| DslError::new(DslErrorKind::IntegerTooLarge(v.to_string()), span))
            }
            _ => Err(self.unexpected(&["integer"])),
        }
    }

    fn statement(&mut self) -> Result<Stmt, DslError> {
        let start = self.span();
        let kind = match self.peek().clone() {
            Tok::Keyword("symbols") | Tok::Keyword("vars") => {
                let is_symbols = self.peek() == &Tok::Keyword("symbols");
                self.bump();
                let mut ids = vec![self.ident()?];
                while matches!(self.peek(), Tok::Ident(_)) {
                    ids.push(self.ident()?);
                }
                if is_symbols {
                    StmtKind::Symbols(ids)
                } else {
                    StmtKind::Vars(ids)
                }
            }
            Tok::Keyword("let") => {
                self.bump();
                let name = self.ident()?;
                self.expect_punct('=')?;
                StmtKind::Let(name, self.expr()?)
            }
            Tok::Keyword("relation") => {
                self.bump();
                let lhs = self.expr()?;
                self.expect_punct('=')?;
                StmtKind::Relation(lhs, self.expr()?)
            }
            Tok::Keyword("check") => {
                self.bump();
                let lhs = self.expr()?;
                self.expect_punct('=')?;
                StmtKind::Check(lhs, self.expr()?)
            }
            Tok::Keyword("expand") => {
                self.bump();
                StmtKind::Expand(self.expr()?)
            }
            Tok::Keyword("reduce") => {
                self.bump();
                StmtKind::Reduce(self.expr()?)
            }
            Tok::Keyword("permsum") => {
                self.bump();
                let n = self.small_int(MAX_PERMSUM)?;
                let k = self.small_int(MAX_PERMSUM)?;
                let letters = if matches!(self.peek(), Tok::Ident(_)) {
                    Some((self.ident()?, self.ident()?))
                } else {
                    None
                };
                StmtKind::PermSum { n, k, letters }
            }
            _ => return Err(self.unexpected(STMT_START)),
        };
        if !self.eat_punct(';') {
            let mut expected = vec!["';'"];
            if let StmtKind::Symbols(_) | StmtKind::Vars(_) = kind {
                expected.push("identifier");
            } else {
                expected.extend(["'+'", "'-'", "'*'", "'/'", "'^'"]);
            }
            return Err(self.unexpected(&expected));
        }
        Ok(Stmt {
            kind,
            span: start.to(self.prev_span()),
        })
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Punct('+') => BinOp::Add,
                Tok::Punct('-') => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    // term := unary (('*' | '/') unary)*
    fn term(&mut self) -> Result<Expr, DslError> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                Tok::Punct('*') => BinOp::Mul,
                Tok::Punct('/') => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = binary(op, lhs, rhs);
        }
    }

    // unary := '-' unary | power
    fn unary(&mut self) -> Result<Expr, DslError> {
        if self.eat_punct('-') {
            let start = self.prev_span();
            let inner = self.unary()?;
            return Ok(Expr {
                span: start.to(inner.span),
                kind: ExprKind::Neg(Box::new(inner)),
            });
        }
        self.power()
    }

    // power := atom ('^' integer)?
    fn power(&mut self) -> Result<Expr, DslError> {
        let base = self.atom()?;
        if self.eat_punct('^') {
            let exp = self.small_int(MAX_EXPONENT)?;
            return Ok(Expr {
                span: base.span.to(self.prev_span()),
                kind: ExprKind::Pow(Box::new(base), exp),
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, DslError> {
        let start = self.span();
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Int(v),
                    span: start,
                })
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Name(name),
                    span: start,
                })
            }
            Tok::Keyword("zeta") => {
                self.bump();
                self.expect_punct('(')?;
                let n = self.small_int(u32::MAX)?;
                let end = self.expect_punct(')')?;
                Ok(Expr {
                    kind: ExprKind::Zeta(n),
                    span: start.to(end),
                })
            }
            Tok::Punct('(') => {
                self.bump();
                let inner = self.expr()?;
                let end = self.expect_punct(')')?;
                // parentheses leave no node; the span widens to cover them
                Ok(Expr {
                    kind: inner.kind,
                    span: start.to(end),
                })
            }
            _ => Err(self.unexpected(EXPR_START)),
        }
    }
}

fn binary(op: BinOp, lhs: Expr, rhs: Expr) -> Expr {
    Expr {
        span: lhs.span.to(rhs.span),
        kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        let p = parse_syntax("expand a - b - c*d^2;").unwrap();
        let StmtKind::Expand(e) = &p.statements[0].kind else { panic!() };
        let ExprKind::Binary(BinOp::Sub, l, r) = &e.kind else { panic!() };
        assert!(matches!(l.kind, ExprKind::Binary(BinOp::Sub, ..)));
        let ExprKind::Binary(BinOp::Mul, _, pw) = &r.kind else { panic!() };
        assert!(matches!(pw.kind, ExprKind::Pow(_, 2)));
    }

    #[test]
    fn unary_minus_binds_tightest() {
        let p = parse_syntax("expand -1*Y*X;").unwrap();
        let StmtKind::Expand(e) = &p.statements[0].kind else { panic!() };
        let ExprKind::Binary(BinOp::Mul, l, _) = &e.kind else { panic!() };
        let ExprKind::Binary(BinOp::Mul, ll, _) = &l.kind else { panic!() };
        assert!(matches!(ll.kind, ExprKind::Neg(_)));
    }

    #[test]
    fn missing_semicolon_lists_expectations() {
        let err = parse_syntax("symbols X Y\nvars x;").unwrap_err();
        assert_eq!(err.span.line, 2);
        assert!(err.expected.contains(&"';'".to_string()));
    }

    #[test]
    fn exponent_limit() {
        let err = parse_syntax("expand X^65;").unwrap_err();
        assert!(matches!(err.kind, DslErrorKind::IntegerTooLarge(_)));
    }

    #[test]
    fn statement_span_covers_semicolon() {
        let text = "  reduce (X);";
        let p = parse_syntax(text).unwrap();
        let s = p.statements[0].span;
        assert_eq!(&text[s.start..s.end], "reduce (X);");
    }
}
