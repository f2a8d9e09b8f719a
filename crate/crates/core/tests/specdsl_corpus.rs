use std::fs;
use std::path::{Path, PathBuf};

use nclin::specdsl::{format, parse, run, DslError, Expr, Program, SourceSpan};
use proptest::prelude::*;

fn scripts(dir: &str) -> Vec<(PathBuf, String)> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus").join(dir);
    let mut out: Vec<_> = fs::read_dir(&root)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "ncs"))
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    out
}

fn expected_results(text: &str) -> Vec<String> {
    text.lines()
        .filter_map(|l| l.trim_end_matches('\r').strip_prefix("# => "))
        .map(str::to_string)
        .collect()
}

/// Line and column of a byte offset, counting \r\n, \r and \n as one break.
fn position(text: &str, offset: usize) -> (usize, usize) {
    let (mut line, mut col) = (1, 1);
    let mut chars = text[..offset].chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\r' => {
                if chars.peek() == Some(&'\n') {
                    chars.next();
                }
                line += 1;
                col = 1;
            }
            '\n' => {
                line += 1;
                col = 1;
            }
            _ => col += 1,
        }
    }
    (line, col)
}

fn assert_span_in(text: &str, span: &SourceSpan) {
    assert!(span.start <= span.end && span.end <= text.len(), "{span:?}");
    assert_eq!(position(text, span.start), (span.line, span.column), "{span:?}");
}

fn check_expr_spans(text: &str, e: &Expr, parent: &SourceSpan) {
    assert_span_in(text, &e.span);
    assert!(parent.contains(&e.span), "{:?} not inside {:?}", e.span, parent);
    for c in e.children() {
        check_expr_spans(text, c, &e.span);
    }
}

fn check_spans(text: &str, program: &Program) {
    for stmt in &program.statements {
        assert_span_in(text, &stmt.span);
        assert!(text[stmt.span.start..stmt.span.end].ends_with(';'));
        for e in stmt.exprs() {
            check_expr_spans(text, e, &stmt.span);
        }
    }
}

#[test]
fn corpus_has_twenty_scripts() {
    assert_eq!(scripts("").len(), 20);
    assert!(scripts("errors").len() >= 10);
}

#[test]
fn corpus_round_trips() {
    for (path, text) in scripts("") {
        let p = parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let canonical = format(&p);
        let again = parse(&canonical).unwrap();
        assert_eq!(again, p, "{}", path.display());
        assert_eq!(format(&again), canonical, "{}", path.display());
    }
}

#[test]
fn corpus_spans_nest() {
    for (_, text) in scripts("") {
        let p = parse(&text).unwrap();
        check_spans(&text, &p);
        check_spans(&format(&p), &parse(&format(&p)).unwrap());
    }
}

#[test]
fn corpus_outputs_match_annotations() {
    for (path, text) in scripts("") {
        let expected = expected_results(&text);
        let report = run(&parse(&text).unwrap()).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if !expected.is_empty() {
            assert_eq!(report.results(), expected, "{}", path.display());
        }
    }
}

fn failure(text: &str) -> DslError {
    match parse(text) {
        Err(e) => e,
        Ok(p) => run(&p).expect_err("script should fail"),
    }
}

#[test]
fn error_scripts_produce_spanned_diagnostics() {
    for (path, text) in scripts("errors") {
        let err = failure(&text);
        assert_span_in(&text, &err.span);
        let msg = err.to_string();
        assert!(msg.contains(&format!("at line {}, column {}", err.span.line, err.span.column)), "{}: {msg}", path.display());
    }
}

#[test]
fn documented_examples() {
    let p = parse("symbols X Y; relation X*Y = -1*Y*X;").unwrap();
    assert_eq!((p.symbol_count(), p.relation_count()), (2, 1));
    assert_eq!(parse(&format(&p)).unwrap(), p);

    let p = parse("symbols X Y; vars x y; expand (x*X + y*Y)^3;").unwrap();
    assert_eq!(format(&p).lines().last(), Some("expand (x*X + y*Y)^3;"));

    let e = failure("symbols X; relation X = X;");
    assert!(e.to_string().contains("relation does not decrease term order"));
    let e = failure("symbols X; relation Y*X = X;");
    assert!(e.to_string().starts_with("undeclared identifier Y at line 1"), "{e}");

    let p = parse("let w = zeta(3);").unwrap();
    assert_eq!(format(&p), "let w = zeta(3);\n");
}

#[test]
fn syntax_errors_list_expected_tokens() {
    let e = failure("symbols X\nvars x;\n");
    assert!(e.expected.iter().any(|t| t == "';'"));
    let e = failure("symbols X;\nexpand (X + ;\n");
    assert!(e.expected.iter().any(|t| t == "identifier"));
    assert_eq!((e.span.line, e.span.column), (2, 13));
}

const VOCAB: &[&str] = &[
    "symbols", "vars", "let", "relation", "expand", "reduce", "permsum", "check", "zeta", "X", "Y", "Z", "x",
    "y", "w", "0", "1", "2", "3", "65", "*", "+", "-", "/", "^", "(", ")", "=", ";", "#c\n", "\n", "@",
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn random_token_streams_never_panic(tokens in prop::collection::vec(prop::sample::select(VOCAB), 0..30)) {
        let text = tokens.join(" ");
        match parse(&text) {
            Ok(p) => {
                prop_assert_eq!(&parse(&format(&p)).unwrap(), &p);
                check_spans(&text, &p);
            }
            Err(e) => prop_assert!(e.span.end <= text.len()),
        }
    }

    #[test]
    fn arbitrary_text_never_panics(text in "\\PC{0,60}") {
        if let Err(e) = parse(&text) {
            prop_assert!(e.span.start <= e.span.end && e.span.end <= text.len());
        }
    }

    #[test]
    fn structured_scripts_round_trip(exprs in prop::collection::vec(expr_text(), 1..4)) {
        let mut text = String::from("symbols X Y; vars x y; let w = zeta(3);\n");
        for e in &exprs {
            text.push_str(&format!("expand {e};\n"));
        }
        let p = parse(&text).unwrap();
        prop_assert_eq!(&parse(&format(&p)).unwrap(), &p);
        check_spans(&text, &p);
    }
}

fn expr_text() -> impl Strategy<Value = String> {
    let leaf = prop::sample::select(vec!["X", "Y", "x", "y", "w", "2", "zeta(3)"]).prop_map(str::to_string);
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone(), prop::sample::select(vec!["+", "-", "*"]))
                .prop_map(|(a, b, op)| format!("{a} {op} {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            inner.clone().prop_map(|a| format!("-({a})")),
            (inner, 0u32..4).prop_map(|(a, e)| format!("({a})^{e}")),
        ]
    })
}
