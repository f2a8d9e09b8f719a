use nclin::exactnum::{rat, Cyclotomic, Rational};
use nclin::ncalg::{
    distinct_arrangements, expand_power, next_arrangement, perm_sum, CommMonomial, NCPoly,
    RelationSet, Rule, Strategy as Order, Symbol, Word,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn xy() -> Vec<(&'static str, Symbol)> {
    vec![("x", Symbol::new("X")), ("y", Symbol::new("Y"))]
}

fn binomial(n: u32, k: u32) -> u64 {
    // Pascal's triangle
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k as usize]
}

/// Σ over arrangements of (n−k) X's and k Y's of ω^(#Y-before-X pairs),
/// enumerated as n-bit masks.
fn q_binomial_brute(n: u32, k: u32, omega: &Cyclotomic) -> Cyclotomic {
    let mut total = Cyclotomic::zero();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != k {
            continue;
        }
        let mut inversions = 0u64;
        let mut ys_seen = 0u64;
        for pos in 0..n {
            if mask & (1 << pos) != 0 {
                ys_seen += 1;
            } else {
                inversions += ys_seen;
            }
        }
        total = &total + &omega.pow(inversions);
    }
    total
}

fn mono(k: u32, n: u32) -> CommMonomial {
    CommMonomial::from_exponents([("x", n - k), ("y", k)].into_iter().filter(|p| p.1 > 0))
}

fn word_xy(n: u32, k: u32) -> Word {
    Word::repeat(&Symbol::new("X"), (n - k) as usize).concat(&Word::repeat(&Symbol::new("Y"), k as usize))
}

#[test]
fn q_commutation_matches_brute_force() {
    for m in 2..=6u32 {
        let omega = Cyclotomic::zeta(m).unwrap();
        let rules = RelationSet::new(vec![Rule::scaled("Y*X", omega.clone(), "X*Y")]).unwrap();
        for n in 1..=6u32 {
            let reduced = rules.reduce(&expand_power::<Cyclotomic>(&xy(), n).unwrap());
            let mut expected = NCPoly::zero();
            for k in 0..=n {
                expected.add_term(mono(k, n), word_xy(n, k), q_binomial_brute(n, k, &omega));
            }
            assert_eq!(reduced, expected, "omega = zeta({m}), n = {n}");
        }
    }
}

#[test]
fn q_binomials_vanish_at_primitive_roots() {
    for n in 2..=6u32 {
        let omega = Cyclotomic::zeta(n).unwrap();
        let x = Symbol::new("X");
        let y = Symbol::new("Y");
        let rules = RelationSet::new(vec![
            Rule::scaled("Y*X", omega.clone(), "X*Y"),
            Rule::new(Word::repeat(&x, n as usize), NCPoly::one()),
            Rule::new(Word::repeat(&y, n as usize), NCPoly::one()),
        ])
        .unwrap();
        let reduced = rules.reduce(&expand_power::<Cyclotomic>(&xy(), n).unwrap());
        let expected = &NCPoly::var("x").pow(n) + &NCPoly::var("y").pow(n);
        assert_eq!(reduced, expected, "n = {n}");
        assert_eq!(reduced.to_string(), format!("(x^{n} + y^{n})*1"));
        for k in 1..n {
            assert!(q_binomial_brute(n, k, &omega).is_zero());
        }
    }
}

#[test]
fn commuting_specialization_gives_binomials() {
    for n in 1..=8u32 {
        let flat = expand_power::<Rational>(&xy(), n).unwrap().erase_symbols();
        for k in 0..=n {
            let c = flat.coefficient(&mono(k, n), &Word::empty());
            assert_eq!(c, rat(binomial(n, k) as i64, 1), "n={n} k={k}");
        }
        assert_eq!(flat.len() as u32, n + 1);
    }
}

#[test]
fn perm_sums_partition_the_expansion() {
    for n in 1..=7u32 {
        let mut total = NCPoly::<Rational>::zero();
        for k in 0..=n {
            let p = perm_sum::<Rational>(n, k).unwrap();
            assert_eq!(p.len() as u64, binomial(n, k));
            for w in p.words() {
                assert_eq!(w.count(&Symbol::new("Y")), k as usize);
                assert_eq!(w.len(), n as usize);
            }
            total = &total + &p;
        }
        let expanded = expand_power::<Rational>(&xy(), n)
            .unwrap()
            .specialize("x", &Rational::one())
            .specialize("y", &Rational::one());
        assert_eq!(total, expanded);
    }
}

fn poly() -> impl Strategy<Value = NCPoly<Rational>> {
    let term = (-5i64..=5, prop::collection::vec(prop::bool::ANY, 0..5));
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (c, letters) in terms {
            let w = Word::from_symbols(letters.iter().map(|&b| Symbol::new(if b { "Y" } else { "X" })));
            p.add_term(CommMonomial::one(), w, rat(c, 1));
        }
        p
    })
}

fn anticommuting() -> RelationSet<Rational> {
    RelationSet::new(vec![
        Rule::scaled("X*X", rat(1, 1), ""),
        Rule::scaled("Y*Y", rat(1, 1), ""),
        Rule::scaled("Y*X", rat(-1, 1), "X*Y"),
    ])
    .unwrap()
}

proptest! {
    #[test]
    fn arrangements_are_sorted_and_complete(items in prop::collection::vec(0u8..3, 0..7)) {
        let all = distinct_arrangements(items.clone());
        for pair in all.windows(2) {
            prop_assert!(pair[0] < pair[1]);
        }
        // multinomial count
        let mut counts = [0u64; 3];
        for &i in &items {
            counts[i as usize] += 1;
        }
        let fact = |n: u64| (1..=n).product::<u64>();
        let expected = fact(items.len() as u64) / counts.iter().map(|&c| fact(c)).product::<u64>();
        prop_assert_eq!(all.len() as u64, expected);
        let mut sorted = items.clone();
        sorted.sort();
        let mut walk = sorted.clone();
        let mut steps = 1;
        while next_arrangement(&mut walk) {
            steps += 1;
        }
        prop_assert_eq!(steps, all.len());
        prop_assert_eq!(walk, sorted);
    }

    #[test]
    fn strategies_reach_the_same_normal_form(p in poly()) {
        let rules = anticommuting();
        let left = rules.reduce_with(&p, Order::Leftmost);
        let right = rules.reduce_with(&p, Order::Rightmost);
        prop_assert!(rules.is_normal(&left));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn reduction_respects_products(p in poly(), q in poly()) {
        let rules = anticommuting();
        let whole = rules.reduce(&(&p * &q));
        let parts = rules.reduce(&(&rules.reduce(&p) * &rules.reduce(&q)));
        prop_assert_eq!(whole, parts);
    }
}

#[test]
fn cyclic_orientation_is_rejected() {
    let err = RelationSet::new(vec![
        Rule::scaled("X*Y", rat(1, 1), "Y*X"),
        Rule::scaled("Y*X", rat(1, 1), "X*Y"),
    ])
    .unwrap_err();
    assert!(err.to_string().contains("does not decrease term order"));
}
