use nclin::exactnum::{rat, Cyclotomic, Rational};
use nclin::linmat::{
    all_triples, build_gamma_triple, clock_shift, evaluate, pauli_x, pauli_y, pauli_z, primitive_triples,
    Bindings, Matrix, MatrixError,
};
use nclin::ncalg::{perm_sum, CommMonomial, NCPoly, Symbol, Word};
use num_integer::Integer;
use proptest::prelude::*;

fn brute_force_triples(max_z: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for z in 1..=max_z {
        for x in 1..z {
            for y in x..z {
                if x * x + y * y == z * z {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

fn sorted_legs(v: &[(u64, u64, u64)]) -> Vec<(u64, u64, u64)> {
    let mut out: Vec<_> = v.iter().map(|&(a, b, c)| (a.min(b), a.max(b), c)).collect();
    out.sort();
    out
}

#[test]
fn triple_enumeration_matches_brute_force() {
    let brute = brute_force_triples(100);
    assert_eq!(sorted_legs(&all_triples(100)), sorted_legs(&brute));
    let primitive: Vec<_> = brute.iter().copied().filter(|&(x, y, _)| x.gcd(&y) == 1).collect();
    assert_eq!(sorted_legs(&primitive_triples(100)), sorted_legs(&primitive));
}

#[test]
fn every_triple_up_to_100_satisfies_all_invariants() {
    for (x, y, z) in all_triples(100) {
        for (a, b) in [(x, y), (y, x)] {
            let t = build_gamma_triple(a, b, z).unwrap();
            for c in t.invariant_checks() {
                assert!(c.holds, "({a}, {b}, {z}): {}", c.name);
            }
        }
    }
}

#[test]
fn non_triples_report_their_defect() {
    let err = build_gamma_triple(1, 1, 2).unwrap_err();
    assert_eq!(err.to_string(), "not a Pythagorean triple (defect 2)");
    assert!(matches!(build_gamma_triple(2, 3, 4), Err(MatrixError::NotATriple { .. })));
}

#[test]
fn pauli_matrices_anticommute() {
    let (x, z) = (pauli_x::<Cyclotomic>(), pauli_z::<Cyclotomic>());
    let y = pauli_y();
    let one = Matrix::identity(2);
    for m in [&x, &y, &z] {
        assert_eq!(m.mat_mul(m).unwrap(), one);
    }
    for (a, b) in [(&x, &y), (&y, &z), (&x, &z)] {
        assert!(a.mat_mul(b).unwrap().try_add(&b.mat_mul(a).unwrap()).unwrap().is_zero());
    }
}

#[test]
fn clock_and_shift_satisfy_every_constraint() {
    for n in 2..=6u32 {
        let (u, v) = clock_shift(n).unwrap();
        let one = Matrix::identity(n as usize);
        assert_eq!(u.mat_pow(n), one);
        assert_eq!(v.mat_pow(n), one);
        let omega = Cyclotomic::zeta(n).unwrap();
        assert_eq!(v.mat_mul(&u).unwrap(), u.mat_mul(&v).unwrap().scale(&omega));
        let b = Bindings::new(n as usize).with_symbol("X", u.clone()).unwrap().with_symbol("Y", v.clone()).unwrap();
        for k in 1..n {
            let p = perm_sum::<Cyclotomic>(n, k).unwrap();
            assert!(evaluate(&p, &b).unwrap().is_zero(), "n={n} k={k}");
        }
    }
}

fn rat_matrix(dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec((-4i64..=4, 1i64..=3), dim * dim).prop_map(move |v| {
        Matrix::from_fn(dim, |i, j| {
            let (n, d) = v[i * dim + j];
            rat(n, d)
        })
    })
}

fn poly() -> impl Strategy<Value = NCPoly<Rational>> {
    let term = (-3i64..=3, 0u32..3, prop::collection::vec(prop::bool::ANY, 0..4));
    prop::collection::vec(term, 0..4).prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (c, e, letters) in terms {
            let w = Word::from_symbols(letters.iter().map(|&b| Symbol::new(if b { "Y" } else { "X" })));
            let m = if e == 0 { CommMonomial::one() } else { CommMonomial::var_pow("t", e) };
            p.add_term(m, w, rat(c, 1));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), a in rat_matrix(2), b in rat_matrix(2), t in -3i64..=3) {
        let bind = Bindings::new(2)
            .with_symbol("X", a).unwrap()
            .with_symbol("Y", b).unwrap()
            .with_var("t", rat(t, 1));
        let (ep, eq) = (evaluate(&p, &bind).unwrap(), evaluate(&q, &bind).unwrap());
        prop_assert_eq!(evaluate(&(&p * &q), &bind).unwrap(), ep.mat_mul(&eq).unwrap());
        prop_assert_eq!(evaluate(&(&p + &q), &bind).unwrap(), ep.try_add(&eq).unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(a in rat_matrix(3), b in rat_matrix(3)) {
        prop_assert_eq!(a.mat_mul(&b).unwrap().determinant(), a.determinant() * b.determinant());
    }

    #[test]
    fn products_associate(a in rat_matrix(3), b in rat_matrix(3), c in rat_matrix(3)) {
        prop_assert_eq!(
            a.mat_mul(&b).unwrap().mat_mul(&c).unwrap(),
            a.mat_mul(&b.mat_mul(&c).unwrap()).unwrap()
        );
    }
}
