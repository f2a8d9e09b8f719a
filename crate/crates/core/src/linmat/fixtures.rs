//! Concrete matrix fixtures: Pauli matrices, clock/shift pairs and the
//! explicit n = 2 Γ-triples.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{Matrix, MatrixError};
use crate::exactnum::{Cyclotomic, Rational};
use crate::scalar::Scalar;

fn int_matrix<S: Scalar>(rows: [[i64; 2]; 2]) -> Matrix<S> {
    Matrix::from_fn(2, |i, j| S::from_i64(rows[i][j]))
}

/// σˣ = [[0, 1], [1, 0]].
pub fn pauli_x<S: Scalar>() -> Matrix<S> {
    int_matrix([[0, 1], [1, 0]])
}

/// σᶻ = [[1, 0], [0, -1]].
pub fn pauli_z<S: Scalar>() -> Matrix<S> {
    int_matrix([[1, 0], [0, -1]])
}

/// σʸ = [[0, -i], [i, 0]], over Q(ζ₄).
pub fn pauli_y() -> Matrix<Cyclotomic> {
    let i = Cyclotomic::zeta(4).expect("order 4");
    Matrix::from_fn(2, |r, c| match (r, c) {
        (0, 1) => -i.clone(),
        (1, 0) => i.clone(),
        _ => Cyclotomic::zero(),
    })
}

/// The generalized Pauli (clock, shift) pair over Q(ζₙ):
/// `U = diag(1, ω, …, ωⁿ⁻¹)` and the cyclic shift `V` with ones at
/// `(i, i+1 mod n)`. They satisfy `Uⁿ = Vⁿ = 𝟙` and `V·U = ω·U·V`.
pub fn clock_shift(n: u32) -> Result<(Matrix<Cyclotomic>, Matrix<Cyclotomic>), MatrixError> {
    if n < 2 {
        return Err(MatrixError::Domain(format!("clock_shift needs n >= 2, got {n}")));
    }
    let d = n as usize;
    let clock = Matrix::from_diagonal(
        (0..n)
            .map(|k| Cyclotomic::zeta_pow(n, k as u64).expect("n >= 2"))
            .collect(),
    );
    let shift = Matrix::from_fn(d, |i, j| {
        if j == (i + 1) % d {
            Cyclotomic::one()
        } else {
            Cyclotomic::zero()
        }
    });
    Ok((clock, shift))
}

/// A Pythagorean triple with its 2×2 linearization matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaTriple {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub gx: Matrix<Rational>,
    pub gy: Matrix<Rational>,
    pub gz: Matrix<Rational>,
}

/// One named invariant and whether it holds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub holds: bool,
}

/// `z² − x² − y²`.
pub fn pythagorean_defect(x: u64, y: u64, z: u64) -> BigInt {
    let sq = |v: u64| BigInt::from(v) * BigInt::from(v);
    sq(z) - sq(x) - sq(y)
}

/// Builds Γˣ = σˣ, Γʸ = σᶻ and Γᶻ = (x·Γˣ + y·Γʸ)/z = [[y/z, x/z], [x/z, −y/z]].
pub fn build_gamma_triple(x: u64, y: u64, z: u64) -> Result<GammaTriple, MatrixError> {
    if z == 0 {
        return Err(MatrixError::Domain("z must be positive".to_string()));
    }
    let defect = pythagorean_defect(x, y, z);
    if !defect.is_zero() {
        return Err(MatrixError::NotATriple { defect });
    }
    let q = |num: u64| Rational::new(BigInt::from(num), BigInt::from(z));
    let gz = Matrix::from_rows(vec![vec![q(y), q(x)], vec![q(x), -q(y)]])?;
    Ok(GammaTriple {
        x,
        y,
        z,
        gx: pauli_x(),
        gy: pauli_z(),
        gz,
    })
}

impl GammaTriple {
    /// Every defining relation, checked exactly.
    pub fn invariant_checks(&self) -> Vec<InvariantCheck> {
        let r = |v: u64| Rational::from_integer(BigInt::from(v));
        let one = Matrix::<Rational>::identity(2);
        let lhs = self.gz.scale(&r(self.z));
        let rhs = self.gx.scale(&r(self.x)).try_add(&self.gy.scale(&r(self.y)));
        let anti = self
            .gx
            .mul_unchecked(&self.gy)
            .try_add(&self.gy.mul_unchecked(&self.gx));
        let check = |name: &str, holds: bool| InvariantCheck {
            name: name.to_string(),
            holds,
        };
        vec![
            check("x^2 + y^2 = z^2", pythagorean_defect(self.x, self.y, self.z).is_zero()),
            check("z*Gz = x*Gx + y*Gy", rhs.is_ok_and(|m| m == lhs)),
            check("Gx^2 = 1", self.gx.mat_pow(2) == one),
            check("Gy^2 = 1", self.gy.mat_pow(2) == one),
            check("Gz^2 = 1", self.gz.mat_pow(2) == one),
            check("Gx*Gy + Gy*Gx = 0", anti.is_ok_and(|m| m.is_zero())),
            check("tr Gz = 0", self.gz.trace().is_zero()),
            check("det Gz = -1", self.gz.determinant() == -Rational::one()),
        ]
    }

    pub fn all_invariants_hold(&self) -> bool {
        self.invariant_checks().iter().all(|c| c.holds)
    }
}

/// Primitive triples `(a, b, c)` with `a² + b² = c²`, `c ≤ max_z`, from the
/// parameterization `(m² − n², 2mn, m² + n²)` with `m > n`, coprime, of
/// opposite parity. The odd leg comes first.
pub fn primitive_triples(max_z: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    let mut m = 2u64;
    while m * m + 1 <= max_z {
        for n in 1..m {
            if (m - n) % 2 == 1 && m.gcd(&n) == 1 {
                let c = m * m + n * n;
                if c <= max_z {
                    out.push((m * m - n * n, 2 * m * n, c));
                }
            }
        }
        m += 1;
    }
    out.sort_by_key(|&(a, b, c)| (c, a, b));
    out
}

/// All triples with `c ≤ max_z`: multiples of the primitive ones.
pub fn all_triples(max_z: u64) -> Vec<(u64, u64, u64)> {
    let mut out: Vec<_> = primitive_triples(max_z)
        .into_iter()
        .flat_map(|(a, b, c)| (1..=max_z / c).map(move |k| (k * a, k * b, k * c)))
        .collect();
    out.sort_by_key(|&(a, b, c)| (c, a, b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn gamma_triple_three_four_five() {
        let t = build_gamma_triple(3, 4, 5).unwrap();
        assert_eq!(t.gz.to_string(), "[[4/5, 3/5], [3/5, -4/5]]");
        assert!(t.all_invariants_hold());
        assert_eq!(t.gx.mat_pow(2), Matrix::identity(2));
        assert_eq!(t.gz.mat_pow(2).is_scalar_multiple_of_identity(), Some(rat(1, 1)));
    }

    #[test]
    fn gamma_triple_five_twelve_thirteen() {
        let t = build_gamma_triple(5, 12, 13).unwrap();
        assert_eq!(t.gz.to_string(), "[[12/13, 5/13], [5/13, -12/13]]");
    }

    #[test]
    fn not_a_triple_carries_defect() {
        match build_gamma_triple(1, 1, 2) {
            Err(MatrixError::NotATriple { defect }) => assert_eq!(defect, BigInt::from(2)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(build_gamma_triple(0, 0, 0).is_err());
    }

    #[test]
    fn degenerate_triples_are_accepted() {
        assert!(build_gamma_triple(0, 7, 7).unwrap().all_invariants_hold());
    }

    #[test]
    fn triple_enumeration() {
        let prim = primitive_triples(30);
        assert_eq!(prim, vec![(3, 4, 5), (5, 12, 13), (15, 8, 17), (7, 24, 25), (21, 20, 29)]);
        let brute: Vec<(u64, u64, u64)> = (1..=100u64)
            .flat_map(|c| (1..c).flat_map(move |a| (a..c).map(move |b| (a, b, c))))
            .filter(|&(a, b, c)| a * a + b * b == c * c)
            .collect();
        let mut ours: Vec<(u64, u64, u64)> = all_triples(100)
            .into_iter()
            .map(|(a, b, c)| (a.min(b), a.max(b), c))
            .collect();
        ours.sort_by_key(|&(a, b, c)| (c, a, b));
        let mut brute_sorted = brute;
        brute_sorted.sort_by_key(|&(a, b, c)| (c, a, b));
        assert_eq!(ours, brute_sorted);
    }

    #[test]
    fn clock_shift_relations() {
        for n in 2..=6u32 {
            let (u, v) = clock_shift(n).unwrap();
            let one = Matrix::identity(n as usize);
            assert_eq!(u.mat_pow(n), one);
            assert_eq!(v.mat_pow(n), one);
            let w = Cyclotomic::zeta(n).unwrap();
            let vu = v.mat_mul(&u).unwrap();
            let uv = u.mat_mul(&v).unwrap().scale(&w);
            assert_eq!(vu, uv, "n={n}");
        }
        assert!(clock_shift(1).is_err());
    }

    #[test]
    fn clock_shift_two_is_pauli_pair() {
        let (u, v) = clock_shift(2).unwrap();
        assert_eq!(u, pauli_z());
        assert_eq!(v, pauli_x());
    }

    #[test]
    fn pauli_y_squares_to_identity() {
        assert!(pauli_y().mat_pow(2).is_identity());
        let anti = pauli_y()
            .mul_unchecked(&pauli_x())
            .try_add(&pauli_x().mul_unchecked(&pauli_y()))
            .unwrap();
        assert!(anti.is_zero());
    }
}
