use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;

use super::{AlgebraError, CommMonomial, NCPoly, Symbol, Word};
use crate::scalar::Scalar;

/// Rearranges `items` into the next lexicographically larger arrangement;
/// returns `false` (leaving the slice sorted) after the last one.
pub fn next_arrangement<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// Every distinct arrangement of a multiset, in lexicographic order.
pub fn distinct_arrangements<T: Ord + Clone>(mut items: Vec<T>) -> Vec<Vec<T>> {
    items.sort();
    let mut out = vec![items.clone()];
    while next_arrangement(&mut items) {
        out.push(items.clone());
    }
    out
}

/// Sum over the distinct arrangements of `n - k` copies of `first` and `k`
/// copies of `second`, each with coefficient one (or `(n-k)!·k!` when
/// `with_multiplicity` is set, counting labelled permutations instead).
pub fn perm_sum_of<S: Scalar>(
    first: &Symbol,
    second: &Symbol,
    n: u32,
    k: u32,
    with_multiplicity: bool,
) -> Result<NCPoly<S>, AlgebraError> {
    if k > n {
        return Err(AlgebraError::Domain(format!("perm_sum needs 0 <= k <= n, got n={n}, k={k}")));
    }
    if first == second {
        return Err(AlgebraError::DuplicateSymbol(first.clone()));
    }
    // arrangements are enumerated over positions 0/1 so the order follows
    // `first` before `second` whatever their names
    let mut slots = vec![0u8; (n - k) as usize];
    slots.extend(std::iter::repeat_n(1u8, k as usize));
    let coeff = if with_multiplicity {
        S::from_bigint(&(factorial(n - k) * factorial(k)))
    } else {
        S::one()
    };
    let mut out = NCPoly::zero();
    for arrangement in distinct_arrangements(slots) {
        let word = Word::from_symbols(
            arrangement
                .iter()
                .map(|&s| if s == 0 { first.clone() } else { second.clone() }),
        );
        out.add_term(CommMonomial::one(), word, coeff.clone());
    }
    Ok(out)
}

/// `perm_sum_of(X, Y, n, k)` without multiplicity.
pub fn perm_sum<S: Scalar>(n: u32, k: u32) -> Result<NCPoly<S>, AlgebraError> {
    perm_sum_of(&Symbol::new("X"), &Symbol::new("Y"), n, k, false)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Full noncommutative expansion of `(Σ varᵢ · symᵢ)ⁿ`.
pub fn expand_power<S: Scalar>(
    linear_form: &[(&str, Symbol)],
    n: u32,
) -> Result<NCPoly<S>, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::Domain("expand_power needs n >= 1".to_string()));
    }
    let mut seen = BTreeSet::new();
    for (_, s) in linear_form {
        if !seen.insert(s.clone()) {
            return Err(AlgebraError::DuplicateSymbol(s.clone()));
        }
    }
    let mut base = NCPoly::zero();
    for (var, sym) in linear_form {
        base.add_term(
            CommMonomial::var(var),
            Word::from_symbols([sym.clone()]),
            S::one(),
        );
    }
    Ok(base.pow(n))
}

/// Splits a polynomial by commutative monomial; the parts sum back to `p`.
pub fn grade<S: Scalar>(p: &NCPoly<S>) -> BTreeMap<CommMonomial, NCPoly<S>> {
    let mut out: BTreeMap<CommMonomial, NCPoly<S>> = BTreeMap::new();
    for (m, w, c) in p.iter() {
        out.entry(m.clone())
            .or_default()
            .add_term(CommMonomial::one(), w.clone(), c.clone());
    }
    out
}
