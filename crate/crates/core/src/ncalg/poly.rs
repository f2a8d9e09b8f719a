use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, CommMonomial, Symbol, Word};
use crate::scalar::{join_signed, render_scaled, Field, Scalar};

/// A finite sum of `coefficient · monomial · word` terms.
///
/// Terms are kept in a map keyed by `(CommMonomial, Word)`; no stored
/// coefficient is ever zero.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<S> {
    terms: BTreeMap<(CommMonomial, Word), S>,
}

impl<S: Scalar> NCPoly<S> {
    pub fn zero() -> Self {
        NCPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::term(c, CommMonomial::one(), Word::empty())
    }

    pub fn term(c: S, monomial: CommMonomial, word: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(monomial, word, c);
        p
    }

    pub fn word(word: Word) -> Self {
        Self::term(S::one(), CommMonomial::one(), word)
    }

    pub fn symbol(name: &str) -> Self {
        Self::word(Word::from_symbols([Symbol::new(name)]))
    }

    pub fn var(name: &str) -> Self {
        Self::term(S::one(), CommMonomial::var(name), Word::empty())
    }

    pub fn add_term(&mut self, monomial: CommMonomial, word: Word, c: S) {
        if c.is_zero() {
            return;
        }
        let key = (monomial, word);
        match self.terms.remove(&key) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CommMonomial, &Word, &S)> {
        self.terms.iter().map(|((m, w), c)| (m, w, c))
    }

    pub fn coefficient(&self, monomial: &CommMonomial, word: &Word) -> S {
        self.terms
            .get(&(monomial.clone(), word.clone()))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn words(&self) -> BTreeSet<Word> {
        self.terms.keys().map(|(_, w)| w.clone()).collect()
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|(_, w)| w.symbols().iter().cloned())
            .collect()
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|(m, _)| m.exponents().keys().cloned())
            .collect()
    }

    /// Common field of all coefficients (`Rational` for the zero polynomial).
    pub fn field(&self) -> Result<Field, AlgebraError> {
        let Some(first) = self.terms.values().next() else {
            return Ok(Field::Rational);
        };
        self.terms.values().try_fold(first.field(), |acc, c| {
            acc.join(c.field())
                .ok_or(AlgebraError::IncompatibleFields(acc, c.field()))
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for ((m, w), v) in &self.terms {
            out.add_term(m.clone(), w.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> NCPoly<T> {
        let mut out = NCPoly::zero();
        for ((m, w), c) in &self.terms {
            out.add_term(m.clone(), w.clone(), f(c));
        }
        out
    }

    /// Substitutes a scalar value for a commutative variable.
    pub fn specialize(&self, var: &str, value: &S) -> Self {
        let mut out = Self::zero();
        for ((m, w), c) in &self.terms {
            let (rest, e) = m.without(var);
            let factor = (0..e).fold(S::one(), |acc, _| acc * value.clone());
            out.add_term(rest, w.clone(), c.clone() * factor);
        }
        out
    }

    /// Sends every word to ε, i.e. lets all symbols commute away to 1.
    pub fn erase_symbols(&self) -> Self {
        let mut out = Self::zero();
        for ((m, _), c) in &self.terms {
            out.add_term(m.clone(), Word::empty(), c.clone());
        }
        out
    }

    pub fn rename_symbols(&self, f: impl Fn(&Symbol) -> Symbol) -> Self {
        let mut out = Self::zero();
        for ((m, w), c) in &self.terms {
            out.add_term(m.clone(), w.rename(&f), c.clone());
        }
        out
    }

    /// Terms grouped by word, each word carrying its commutative coefficient.
    pub fn by_word(&self) -> BTreeMap<Word, Vec<(CommMonomial, S)>> {
        let mut groups: BTreeMap<Word, Vec<(CommMonomial, S)>> = BTreeMap::new();
        for ((m, w), c) in &self.terms {
            groups.entry(w.clone()).or_default().push((m.clone(), c.clone()));
        }
        groups
    }
}

impl<S: Scalar> Default for NCPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Add<&NCPoly<S>> for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn add(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for ((m, w), c) in &rhs.terms {
            out.add_term(m.clone(), w.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub<&NCPoly<S>> for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn sub(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = self.clone();
        for ((m, w), c) in &rhs.terms {
            out.add_term(m.clone(), w.clone(), -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul<&NCPoly<S>> for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn mul(self, rhs: &NCPoly<S>) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for ((m1, w1), c1) in &self.terms {
            for ((m2, w2), c2) in &rhs.terms {
                out.add_term(m1.mul(m2), w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &NCPoly<S> {
    type Output = NCPoly<S>;

    fn neg(self) -> NCPoly<S> {
        self.scale(&-S::one())
    }
}

macro_rules! by_value {
    ($tr:ident, $method:ident) => {
        impl<S: Scalar> $tr for NCPoly<S> {
            type Output = NCPoly<S>;

            fn $method(self, rhs: NCPoly<S>) -> NCPoly<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl<S: Scalar> Neg for NCPoly<S> {
    type Output = NCPoly<S>;

    fn neg(self) -> NCPoly<S> {
        -&self
    }
}

/// Renders terms grouped by word: `X*X*Y + X*Y*X`, `(x^2 + y^2)*1`,
/// `-z3*x*X*Y`. A word whose coefficient has several terms is written as a
/// parenthesized commutative polynomial times the word.
impl<S: Scalar> fmt::Display for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((m, w, c)) = self.terms.iter().next().map(|((m, w), c)| (m, w, c)) {
            if self.terms.len() == 1 && m.is_one() && w.is_empty() {
                return write!(f, "{c}");
            }
        }
        let groups = self.by_word();
        let pieces = groups.iter().map(|(word, coeffs)| {
            let word_text = if word.is_empty() {
                String::new()
            } else {
                word.to_string()
            };
            if let [(m, c)] = coeffs.as_slice() {
                let rest = match (m.is_one(), word_text.is_empty()) {
                    (true, _) => word_text,
                    (false, true) => m.to_string(),
                    (false, false) => format!("{m}*{word_text}"),
                };
                return render_scaled(c, &rest);
            }
            let mut sorted = coeffs.clone();
            sorted.sort_by(|a, b| a.0.cmp(&b.0));
            let inner = join_signed(sorted.iter().map(|(m, c)| {
                let mono = if m.is_one() { String::new() } else { m.to_string() };
                render_scaled(c, &mono)
            }));
            let tail = if word_text.is_empty() { "1".to_string() } else { word_text };
            (false, format!("({inner})*{tail}"))
        });
        f.write_str(&join_signed(pieces))
    }
}
