use num_bigint::BigInt;

use super::error::{DslError, DslErrorKind, SourceSpan};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    Keyword(&'static str),
    Punct(char),
    Eof,
}

pub(crate) const KEYWORDS: [&str; 9] = [
    "symbols", "vars", "let", "relation", "expand", "reduce", "permsum", "check", "zeta",
];

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier {name}"),
            Tok::Int(v) => format!("integer {v}"),
            Tok::Keyword(k) => format!("keyword {k}"),
            Tok::Punct(c) => format!("'{c}'"),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&(start, c)) = chars.peek() {
        let span_from = |end: usize, line: usize, column: usize| SourceSpan {
            line,
            column,
            start,
            end,
        };
        if c == '\n' || c == '\r' {
            chars.next();
            // \r\n counts once
            if c == '\r' && matches!(chars.peek(), Some(&(_, '\n'))) {
                chars.next();
            }
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c == '#' {
            while let Some(&(_, c)) = chars.peek() {
                if c == '\n' || c == '\r' {
                    break;
                }
                chars.next();
            }
            continue;
        }
        let (tok, end, width) = if c.is_ascii_alphabetic() || c == '_' {
            let mut end = start;
            let mut width = 0;
            while let Some(&(i, c)) = chars.peek() {
                if !(c.is_ascii_alphanumeric() || c == '_') {
                    break;
                }
                end = i + c.len_utf8();
                width += 1;
                chars.next();
            }
            let word = &text[start..end];
            let tok = match KEYWORDS.iter().find(|k| **k == word) {
                Some(k) => Tok::Keyword(k),
                None => Tok::Ident(word.to_string()),
            };
            (tok, end, width)
        } else if c.is_ascii_digit() {
            let mut end = start;
            let mut width = 0;
            while let Some(&(i, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                end = i + 1;
                width += 1;
                chars.next();
            }
            let value: BigInt = text[start..end].parse().expect("digits only");
            (Tok::Int(value), end, width)
        } else if "*+-/^()=;".contains(c) {
            chars.next();
            (Tok::Punct(c), start + 1, 1)
        } else {
            return Err(DslError::new(
                DslErrorKind::UnexpectedChar(c),
                span_from(start + c.len_utf8(), line, column),
            ));
        };
        out.push(Token {
            tok,
            span: span_from(end, line, column),
        });
        column += width;
    }
    out.push(Token {
        tok: Tok::Eof,
        span: SourceSpan {
            line,
            column,
            start: text.len(),
            end: text.len(),
        },
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_positions() {
        let toks = tokenize("symbols X;\r\n  # note\nlet w=zeta(3);").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(kinds[0], Tok::Keyword("symbols"));
        assert_eq!(kinds[1], Tok::Ident("X".into()));
        assert_eq!(kinds[3], Tok::Keyword("let"));
        let w = &toks[4];
        assert_eq!((w.span.line, w.span.column), (3, 5));
        assert_eq!(kinds.last(), Some(&Tok::Eof));
    }

    #[test]
    fn bad_character_is_spanned() {
        let err = tokenize("symbols X;\n  X @").unwrap_err();
        assert_eq!(err.kind, DslErrorKind::UnexpectedChar('@'));
        assert_eq!((err.span.line, err.span.column), (2, 5));
    }
}
