use std::fmt;

use num_traits::Zero;

use super::MatrixError;
use crate::scalar::{Field, Scalar};

/// A dense square matrix, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    pub fn scalar(dim: usize, c: S) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(MatrixError::Shape("matrix has no rows".to_string()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(MatrixError::Shape(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        let m = Matrix { dim, entries };
        m.field()?;
        Ok(m)
    }

    pub fn from_diagonal(diag: Vec<S>) -> Self {
        let dim = diag.len();
        let mut m = Self::zeros(dim);
        for (i, c) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = c;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim.max(1))
    }

    /// Common field of the entries.
    pub fn field(&self) -> Result<Field, MatrixError> {
        let Some(first) = self.entries.first() else {
            return Ok(Field::Rational);
        };
        self.entries.iter().try_fold(first.field(), |acc, e| {
            acc.join(e.field())
                .ok_or(MatrixError::Field(acc, e.field()))
        })
    }

    fn check_compatible(&self, other: &Self) -> Result<(), MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::Shape(format!(
                "dimension mismatch: {} vs {}",
                self.dim, other.dim
            )));
        }
        let (a, b) = (self.field()?, other.field()?);
        a.join(b).ok_or(MatrixError::Field(a, b))?;
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_compatible(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Product without dimension or field checks; callers guarantee both.
    pub fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.entries[i * d + j];
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mat_pow(&self, exp: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|e| e.clone() * c.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn trace(&self) -> S {
        (0..self.dim).fold(S::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn determinant(&self) -> S {
        let d = self.dim;
        let mut a = self.entries.clone();
        let mut det = S::one();
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| !a[r * d + col].is_zero()) else {
                return S::zero();
            };
            if pivot != col {
                for j in 0..d {
                    a.swap(pivot * d + j, col * d + j);
                }
                det = -det;
            }
            let p = a[col * d + col].clone();
            det = det * p.clone();
            let inv = p.try_recip().expect("pivot is nonzero");
            for r in col + 1..d {
                let factor = a[r * d + col].clone() * inv.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..d {
                    let v = a[r * d + j].clone() - factor.clone() * a[col * d + j].clone();
                    a[r * d + j] = v;
                }
            }
        }
        det
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    /// Σ |mᵢⱼ|², exact in exact fields (it lands in the real subfield).
    pub fn frobenius_norm_sq(&self) -> S {
        self.entries
            .iter()
            .fold(S::zero(), |acc, e| acc + e.clone() * e.conj())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar_multiple_of_identity()
            .is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the matrix equals `c·𝟙` exactly.
    pub fn is_scalar_multiple_of_identity(&self) -> Option<S> {
        let c = self.get(0, 0).clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.get(i, j);
                let ok = if i == j { *e == c } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Entries rendered with the scalar's exact text form.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        self.rows()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect()
    }
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, Cyclotomic, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v, 1)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_is_unit() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let i = Matrix::identity(2);
        assert_eq!(i.mat_mul(&a).unwrap(), a);
        assert_eq!(a.mat_mul(&i).unwrap(), a);
        assert_eq!(a.mat_pow(0), i);
    }

    #[test]
    fn shape_and_field_errors() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = Matrix::<Rational>::identity(3);
        assert!(matches!(a.mat_mul(&b), Err(MatrixError::Shape(_))));
        let c3 = Matrix::scalar(2, Cyclotomic::zeta(3).unwrap());
        let c4 = Matrix::scalar(2, Cyclotomic::zeta(4).unwrap());
        assert!(matches!(c3.mat_mul(&c4), Err(MatrixError::Field(..))));
        assert!(Matrix::<Rational>::from_rows(vec![vec![rat(1, 1)], vec![]]).is_err());
    }

    #[test]
    fn determinant_and_trace() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.determinant(), rat(18, 1));
        assert_eq!(a.trace(), rat(9, 1));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), rat(-1, 1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), rat(0, 1));
    }

    #[test]
    fn scalar_multiple_detection() {
        assert_eq!(Matrix::<Rational>::identity(3).is_scalar_multiple_of_identity(), Some(rat(1, 1)));
        assert_eq!(m(&[&[1, 1], &[0, 1]]).is_scalar_multiple_of_identity(), None);
        assert_eq!(m(&[&[5, 0], &[0, 5]]).is_scalar_multiple_of_identity(), Some(rat(5, 1)));
    }

    #[test]
    fn rendering() {
        let g = Matrix::from_rows(vec![vec![rat(4, 5), rat(3, 5)], vec![rat(3, 5), rat(-4, 5)]]).unwrap();
        assert_eq!(g.to_string(), "[[4/5, 3/5], [3/5, -4/5]]");
    }

    #[test]
    fn frobenius_norm_over_cyclotomics() {
        let i = Cyclotomic::zeta(4).unwrap();
        let a = Matrix::from_rows(vec![
            vec![i.clone(), Cyclotomic::from(1)],
            vec![Cyclotomic::zero(), &Cyclotomic::from(1) + &i],
        ])
        .unwrap();
        // |i|^2 + 1 + |1+i|^2 = 4
        assert_eq!(a.frobenius_norm_sq(), Cyclotomic::from(4));
    }
}
