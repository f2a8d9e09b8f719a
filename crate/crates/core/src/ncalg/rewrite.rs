use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;


use super::{AlgebraError, CommMonomial, NCPoly, Symbol, Word};
use crate::scalar::Scalar;

/// An oriented rewrite rule `pattern → replacement`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule<S> {
    pub pattern: Word,
    pub replacement: NCPoly<S>,
}

impl<S: Scalar> Rule<S> {
    pub fn new(pattern: Word, replacement: NCPoly<S>) -> Self {
        Rule {
            pattern,
            replacement,
        }
    }

    /// `pattern → c · target`.
    pub fn scaled(pattern: &str, c: S, target: &str) -> Self {
        Rule::new(
            Word::parse(pattern),
            NCPoly::term(c, CommMonomial::one(), Word::parse(target)),
        )
    }
}

impl<S: Scalar> fmt::Display for Rule<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.pattern, self.replacement)
    }
}

/// Which occurrence of a rule pattern gets rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// A terminating set of rewrite rules together with the symbol order that
/// proves termination.
///
/// Every rule must send its pattern to a combination of words that are
/// strictly smaller in the degree-lexicographic order induced by the symbol
/// order. The symbol order is derived from the rules themselves: each
/// equal-length replacement word forces one comparison between two symbols,
/// and the forced comparisons must be acyclic.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationSet<S> {
    rules: Vec<Rule<S>>,
    order: Vec<Symbol>,
}

impl<S: Scalar> RelationSet<S> {
    pub fn new(rules: Vec<Rule<S>>) -> Result<Self, AlgebraError> {
        Self::with_preferred_order(rules, &[])
    }

    /// Like [`RelationSet::new`], breaking ties in the derived symbol order
    /// by position in `preferred` (then by name).
    pub fn with_preferred_order(rules: Vec<Rule<S>>, preferred: &[Symbol]) -> Result<Self, AlgebraError> {
        let mut edges: Vec<(Symbol, Symbol, usize)> = Vec::new();
        for (idx, rule) in rules.iter().enumerate() {
            if rule.pattern.is_empty() {
                return Err(AlgebraError::NonTerminating {
                    rule: rule.to_string(),
                    reason: "pattern is the empty word".to_string(),
                });
            }
            for w in rule.replacement.words() {
                match w.len().cmp(&rule.pattern.len()) {
                    Ordering::Less => {}
                    Ordering::Greater => {
                        return Err(AlgebraError::NonTerminating {
                            rule: rule.to_string(),
                            reason: format!("replacement word {w} is longer than the pattern"),
                        })
                    }
                    Ordering::Equal => {
                        let diff = w
                            .symbols()
                            .iter()
                            .zip(rule.pattern.symbols())
                            .find(|(a, b)| a != b);
                        match diff {
                            None => {
                                return Err(AlgebraError::NonTerminating {
                                    rule: rule.to_string(),
                                    reason: "relation does not decrease term order".to_string(),
                                })
                            }
                            Some((small, big)) => edges.push((small.clone(), big.clone(), idx)),
                        }
                    }
                }
            }
        }
        let mut nodes: BTreeSet<Symbol> = preferred.iter().cloned().collect();
        for rule in &rules {
            nodes.extend(rule.pattern.symbols().iter().cloned());
            nodes.extend(rule.replacement.symbols());
        }
        let rank_hint = |s: &Symbol| {
            (
                preferred.iter().position(|p| p == s).unwrap_or(usize::MAX),
                s.clone(),
            )
        };
        // Kahn's algorithm, smallest available symbol first
        let mut order = Vec::with_capacity(nodes.len());
        let mut remaining = nodes;
        while !remaining.is_empty() {
            let next = remaining
                .iter()
                .filter(|s| !edges.iter().any(|(a, b, _)| b == *s && remaining.contains(a)))
                .min_by_key(|s| rank_hint(s))
                .cloned();
            match next {
                Some(s) => {
                    remaining.remove(&s);
                    order.push(s);
                }
                None => {
                    let idx = edges
                        .iter()
                        .find(|(a, b, _)| remaining.contains(a) && remaining.contains(b))
                        .map(|e| e.2)
                        .unwrap_or(0);
                    return Err(AlgebraError::NonTerminating {
                        rule: rules[idx].to_string(),
                        reason: "relation does not decrease term order (cyclic symbol constraints)"
                            .to_string(),
                    });
                }
            }
        }
        Ok(RelationSet { rules, order })
    }

    pub fn rules(&self) -> &[Rule<S>] {
        &self.rules
    }

    /// The symbol order, smallest first.
    pub fn symbol_order(&self) -> &[Symbol] {
        &self.order
    }

    /// Compares words in the degree-lexicographic order of this set.
    pub fn compare_words(&self, a: &Word, b: &Word) -> Ordering {
        self.word_key(a).cmp(&self.word_key(b))
    }

    fn word_key(&self, w: &Word) -> (usize, Vec<(usize, Symbol)>) {
        let ranks = w
            .symbols()
            .iter()
            .map(|s| {
                (
                    self.order.iter().position(|o| o == s).unwrap_or(usize::MAX),
                    s.clone(),
                )
            })
            .collect();
        (w.len(), ranks)
    }

    fn find_redex(&self, w: &Word, strategy: Strategy) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (idx, rule) in self.rules.iter().enumerate() {
            let pos = match strategy {
                Strategy::Leftmost => w.occurrences(&rule.pattern).next(),
                Strategy::Rightmost => w.occurrences(&rule.pattern).last(),
            };
            if let Some(pos) = pos {
                let better = match (best, strategy) {
                    (None, _) => true,
                    (Some((p, _)), Strategy::Leftmost) => pos < p,
                    (Some((p, _)), Strategy::Rightmost) => pos > p,
                };
                if better {
                    best = Some((pos, idx));
                }
            }
        }
        best
    }

    pub fn is_normal(&self, p: &NCPoly<S>) -> bool {
        p.words()
            .iter()
            .all(|w| self.rules.iter().all(|r| !w.contains(&r.pattern)))
    }

    pub fn reduce(&self, p: &NCPoly<S>) -> NCPoly<S> {
        self.reduce_with(p, Strategy::Leftmost)
    }

    /// Rewrites `p` to normal form. The largest pending word is always
    /// rewritten next; since replacements only produce smaller words, each
    /// word is visited at most once and like terms combine before they are
    /// rewritten further.
    pub fn reduce_with(&self, p: &NCPoly<S>, strategy: Strategy) -> NCPoly<S> {
        type Key = ((usize, Vec<(usize, Symbol)>), Word, CommMonomial);
        let mut pending: BTreeMap<Key, S> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<Key, S>, m: CommMonomial, w: Word, c: S| {
            let key = (self.word_key(&w), w, m);
            let sum = match pending.remove(&key) {
                Some(old) => old + c,
                None => c,
            };
            if !sum.is_zero() {
                pending.insert(key, sum);
            }
        };
        for (m, w, c) in p.iter() {
            push(&mut pending, m.clone(), w.clone(), c.clone());
        }
        let mut out = NCPoly::zero();
        while let Some(((_, word, mono), coeff)) = pending.pop_last() {
            match self.find_redex(&word, strategy) {
                None => out.add_term(mono, word, coeff),
                Some((pos, idx)) => {
                    let rule = &self.rules[idx];
                    let prefix = word.slice(0, pos);
                    let suffix = word.slice(pos + rule.pattern.len(), word.len());
                    for (m, w, c) in rule.replacement.iter() {
                        push(
                            &mut pending,
                            mono.mul(m),
                            prefix.concat(w).concat(&suffix),
                            coeff.clone() * c.clone(),
                        );
                    }
                }
            }
        }
        out
    }
}
