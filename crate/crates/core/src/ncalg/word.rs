use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A noncommutative generator such as `X`, `Y`, `A1` or `B`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

/// A product of symbols; the empty word is the identity ε.
///
/// Words are ordered degree-lexicographically (shorter first, then by symbol
/// name), which is the canonical storage and rendering order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        Word(symbols.into_iter().collect())
    }

    /// `Word::parse("X*Y*X")`; `"1"` and `""` give ε.
    pub fn parse(text: &str) -> Self {
        let t = text.trim();
        if t.is_empty() || t == "1" {
            return Word::empty();
        }
        Word(t.split('*').map(|s| Symbol::new(s.trim())).collect())
    }

    pub fn repeat(symbol: &Symbol, times: usize) -> Self {
        Word(vec![symbol.clone(); times])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn count(&self, symbol: &Symbol) -> usize {
        self.0.iter().filter(|s| *s == symbol).count()
    }

    /// Start positions of every occurrence of `pattern` as a subword.
    pub fn occurrences<'a>(&'a self, pattern: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = pattern.len();
        (0..=self.len().saturating_sub(n))
            .filter(move |&i| n > 0 && self.len() >= n && self.0[i..i + n] == pattern.0[..])
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        self.occurrences(pattern).next().is_some()
    }

    /// Replaces every symbol through `f`.
    pub fn rename(&self, f: impl Fn(&Symbol) -> Symbol) -> Word {
        Word(self.0.iter().map(f).collect())
    }

    /// Symbol multiplicities.
    pub fn content(&self) -> BTreeMap<Symbol, usize> {
        let mut m = BTreeMap::new();
        for s in &self.0 {
            *m.entry(s.clone()).or_insert(0) += 1;
        }
        m
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(s.name())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
