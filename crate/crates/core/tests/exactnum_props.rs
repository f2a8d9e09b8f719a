use nclin::exactnum::{cyclotomic_polynomial, euler_phi, rat, Cyclotomic, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

/// A random element of Q(ζₙ) given by an arbitrary polynomial in ζₙ.
fn element(order: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(small_rational(), order as usize)
        .prop_map(move |coeffs| Cyclotomic::from_poly(order, coeffs).unwrap())
}

fn triple() -> impl Strategy<Value = (Cyclotomic, Cyclotomic, Cyclotomic)> {
    (1u32..=12).prop_flat_map(|n| (element(n), element(n), element(n)))
}

fn close(a: num_complex::Complex64, b: num_complex::Complex64) -> bool {
    (a - b).norm() <= 1e-9 * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Cyclotomic::zero(), a.clone());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses((a, _, _) in triple()) {
        if a.is_zero() {
            prop_assert!(a.inverse().is_err());
        } else {
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, Cyclotomic::one());
        }
    }

    #[test]
    fn complex_image_is_a_homomorphism((a, b, _) in triple()) {
        prop_assert!(close((&a + &b).to_complex(), a.to_complex() + b.to_complex()));
        prop_assert!(close((&a * &b).to_complex(), a.to_complex() * b.to_complex()));
        prop_assert!(close(a.conjugate().to_complex(), a.to_complex().conj()));
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism((a, b, _) in triple()) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
    }

    #[test]
    fn text_round_trip((a, _, _) in triple()) {
        let parsed: Cyclotomic = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }
}

#[test]
fn cyclotomic_polynomial_degrees() {
    for n in 1..=30 {
        assert_eq!(cyclotomic_polynomial(n).len() as u32 - 1, euler_phi(n), "n={n}");
    }
}

#[test]
fn roots_of_unity_sum_to_zero() {
    // 1 + ζ + … + ζⁿ⁻¹ = 0 for n ≥ 2, checked against the float image too
    for n in 2..=16 {
        let sum = (0..n as u64).fold(Cyclotomic::zero(), |acc, k| &acc + &Cyclotomic::zeta_pow(n, k).unwrap());
        assert!(sum.is_zero(), "n={n}");
        assert!(Cyclotomic::zeta(n).unwrap().pow(n as u64).is_one());
    }
}

#[test]
fn mixed_orders_are_rejected() {
    let a = Cyclotomic::zeta(3).unwrap();
    let b = Cyclotomic::zeta(4).unwrap();
    assert!(a.checked_add(&b).is_err());
    assert!(a.checked_mul(&Cyclotomic::from(rat(2, 3))).is_ok());
}
