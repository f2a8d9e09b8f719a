use num_complex::Complex64;

use super::{FloatMatrix, SearchError};

fn add_assign(acc: &mut FloatMatrix, other: &FloatMatrix) {
    let d = acc.dim();
    for i in 0..d {
        for j in 0..d {
            let v = acc.get(i, j) + other.get(i, j);
            acc.set(i, j, v);
        }
    }
}

fn check_dims(a: &FloatMatrix, b: &FloatMatrix) -> Result<(), SearchError> {
    if a.dim() != b.dim() {
        return Err(SearchError::Shape(format!(
            "dimension mismatch: {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(())
}

/// `t[m][k]` = sum of all length-`m` words with `k` letters B, evaluated at (A, B).
fn forward(a: &FloatMatrix, b: &FloatMatrix, n: u32) -> Vec<Vec<FloatMatrix>> {
    let d = a.dim();
    let n = n as usize;
    let mut t: Vec<Vec<FloatMatrix>> = vec![vec![FloatMatrix::identity(d)]];
    for m in 1..=n {
        let prev = &t[m - 1];
        let row = (0..=m)
            .map(|k| {
                let mut acc = FloatMatrix::zeros(d);
                if k < m {
                    add_assign(&mut acc, &prev[k].mul_unchecked(a));
                }
                if k > 0 {
                    add_assign(&mut acc, &prev[k - 1].mul_unchecked(b));
                }
                acc
            })
            .collect();
        t.push(row);
    }
    t
}

/// Per-constraint defects: `Aⁿ − 𝟙`, the perm sums, `Bⁿ − 𝟙`, indexed by k.
fn defects(t: &[Vec<FloatMatrix>], n: usize) -> Vec<FloatMatrix> {
    let d = t[0][0].dim();
    let id = FloatMatrix::identity(d);
    (0..=n)
        .map(|k| {
            let m = t[n][k].clone();
            if k == 0 || k == n {
                m.try_sub(&id).expect("same dimension")
            } else {
                m
            }
        })
        .collect()
}

fn norm_sq(m: &FloatMatrix) -> f64 {
    m.entries().iter().map(Complex64::norm_sqr).sum()
}

pub fn residual(a: &FloatMatrix, b: &FloatMatrix, n: u32) -> Result<f64, SearchError> {
    check_dims(a, b)?;
    if n == 0 {
        return Err(SearchError::Config("power must be positive".into()));
    }
    let t = forward(a, b, n);
    Ok(defects(&t, n as usize).iter().map(norm_sq).sum())
}

/// Residual together with its gradient.
///
/// For entry `aᵢⱼ = u + iv` the returned matrix holds `∂f/∂u + i·∂f/∂v`.
pub(crate) fn value_and_gradient(
    a: &FloatMatrix,
    b: &FloatMatrix,
    n: u32,
) -> (f64, FloatMatrix, FloatMatrix) {
    let n = n as usize;
    let d = a.dim();
    let t = forward(a, b, n as u32);
    let mut adj = defects(&t, n);
    let value = adj.iter().map(norm_sq).sum();
    let (a_h, b_h) = (a.conj_transpose(), b.conj_transpose());
    let mut ga = FloatMatrix::zeros(d);
    let mut gb = FloatMatrix::zeros(d);
    // walk back from length n to 1; adj[k] is the adjoint of t[m][k]
    for m in (1..=n).rev() {
        let mut prev = vec![FloatMatrix::zeros(d); m];
        for (k, g) in adj.iter().enumerate() {
            if k < m {
                add_assign(&mut ga, &t[m - 1][k].conj_transpose().mul_unchecked(g));
                add_assign(&mut prev[k], &g.mul_unchecked(&a_h));
            }
            if k > 0 {
                add_assign(&mut gb, &t[m - 1][k - 1].conj_transpose().mul_unchecked(g));
                add_assign(&mut prev[k - 1], &g.mul_unchecked(&b_h));
            }
        }
        adj = prev;
    }
    let two = Complex64::new(2.0, 0.0);
    (value, ga.scale(&two), gb.scale(&two))
}

pub fn gradient(
    a: &FloatMatrix,
    b: &FloatMatrix,
    n: u32,
) -> Result<(FloatMatrix, FloatMatrix), SearchError> {
    residual(a, b, n)?;
    let (_, ga, gb) = value_and_gradient(a, b, n);
    Ok((ga, gb))
}

/// Max coordinatewise error of the analytic gradient against central
/// differences with step 1e-6. Errors are relative to `max(|g|, |fd|, 1)`
/// so that vanishing coordinates do not divide by roundoff.
pub fn grad_check(a: &FloatMatrix, b: &FloatMatrix, n: u32) -> Result<f64, SearchError> {
    const H: f64 = 1e-6;
    let (ga, gb) = gradient(a, b, n)?;
    let d = a.dim();
    let mut worst = 0.0f64;
    for which in 0..2 {
        for i in 0..d {
            for j in 0..d {
                for imag in [false, true] {
                    let delta = if imag {
                        Complex64::new(0.0, H)
                    } else {
                        Complex64::new(H, 0.0)
                    };
                    let shifted = |sign: f64| {
                        let (mut a2, mut b2) = (a.clone(), b.clone());
                        let target = if which == 0 { &mut a2 } else { &mut b2 };
                        let v = target.get(i, j) + delta * sign;
                        target.set(i, j, v);
                        residual(&a2, &b2, n).expect("dims already checked")
                    };
                    let fd = (shifted(1.0) - shifted(-1.0)) / (2.0 * H);
                    let g = if which == 0 { ga.get(i, j) } else { gb.get(i, j) };
                    let analytic = if imag { g.im } else { g.re };
                    let scale = analytic.abs().max(fd.abs()).max(1.0);
                    worst = worst.max((analytic - fd).abs() / scale);
                }
            }
        }
    }
    Ok(worst)
}
