use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::residual::value_and_gradient;
use super::{FloatMatrix, SearchError};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchConfig {
    pub n: u32,
    pub d: usize,
    pub restarts: u32,
    pub max_iters: u32,
    pub initial_step: f64,
    pub grow: f64,
    pub shrink: f64,
    pub tolerance: f64,
    pub seed: u64,
    pub real_only: bool,
}

impl SearchConfig {
    pub fn new(n: u32, d: usize, seed: u64) -> Self {
        SearchConfig {
            n,
            d,
            restarts: 32,
            max_iters: 10_000,
            initial_step: 1e-2,
            grow: 1.2,
            shrink: 0.5,
            tolerance: 1e-12,
            seed,
            real_only: false,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |what: &str| Err(SearchError::Config(what.to_string()));
        if self.n == 0 {
            return bad("n must be positive");
        }
        if self.d == 0 {
            return bad("d must be positive");
        }
        if self.restarts == 0 || self.max_iters == 0 {
            return bad("restarts and max_iters must be positive");
        }
        if !(self.tolerance > 0.0) || !(self.initial_step > 0.0) {
            return bad("tolerance and step must be positive");
        }
        if !(self.grow > 1.0) || !(self.shrink > 0.0 && self.shrink < 1.0) {
            return bad("step factors must satisfy grow > 1 and 0 < shrink < 1");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub n: u32,
    pub d: usize,
    pub residual: f64,
    pub a: FloatMatrix,
    pub b: FloatMatrix,
    pub restart: u32,
    pub iterations: u32,
    pub seed: u64,
    pub real_only: bool,
}

fn random_matrix(rng: &mut ChaCha8Rng, d: usize, real_only: bool) -> FloatMatrix {
    let mut m = FloatMatrix::zeros(d);
    for i in 0..d {
        for j in 0..d {
            let z = if real_only {
                Complex64::new(rng.random_range(-1.0..=1.0), 0.0)
            } else {
                // uniform on the unit disc
                let r: f64 = rng.random::<f64>().sqrt();
                let theta = rng.random::<f64>() * std::f64::consts::TAU;
                Complex64::from_polar(r, theta)
            };
            m.set(i, j, z);
        }
    }
    m
}

fn step(m: &FloatMatrix, g: &FloatMatrix, eta: f64, real_only: bool) -> FloatMatrix {
    FloatMatrix::from_fn(m.dim(), |i, j| {
        let mut g = *g.get(i, j);
        if real_only {
            g.im = 0.0;
        }
        m.get(i, j) - g * eta
    })
}

struct Run {
    residual: f64,
    a: FloatMatrix,
    b: FloatMatrix,
    iterations: u32,
}

fn descend(config: &SearchConfig, restart: u32) -> Run {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(restart as u64));
    let mut a = random_matrix(&mut rng, config.d, config.real_only);
    let mut b = random_matrix(&mut rng, config.d, config.real_only);
    let (mut f, mut ga, mut gb) = value_and_gradient(&a, &b, config.n);
    let mut eta = config.initial_step;
    let mut iterations = 0;
    while iterations < config.max_iters && f >= config.tolerance {
        iterations += 1;
        let (a2, b2) = (
            step(&a, &ga, eta, config.real_only),
            step(&b, &gb, eta, config.real_only),
        );
        let (f2, ga2, gb2) = value_and_gradient(&a2, &b2, config.n);
        if f2.is_finite() && f2 < f {
            (a, b, f, ga, gb) = (a2, b2, f2, ga2, gb2);
            eta *= config.grow;
        } else {
            eta *= config.shrink;
            if eta < f64::MIN_POSITIVE {
                break;
            }
        }
    }
    Run {
        residual: f,
        a,
        b,
        iterations,
    }
}

/// Multi-start gradient descent. Restarts run in parallel; the result is
/// the lowest residual, ties going to the lowest restart index, so the
/// outcome does not depend on thread scheduling.
pub fn search(config: &SearchConfig) -> Result<SearchResult, SearchError> {
    config.validate()?;
    let runs: Vec<(u32, Run)> = (0..config.restarts)
        .into_par_iter()
        .map(|r| (r, descend(config, r)))
        .collect();
    let (restart, best) = runs
        .into_iter()
        .min_by(|(ra, a), (rb, b)| a.residual.total_cmp(&b.residual).then(ra.cmp(rb)))
        .expect("at least one restart");
    Ok(SearchResult {
        n: config.n,
        d: config.d,
        residual: best.residual,
        a: best.a,
        b: best.b,
        restart,
        iterations: best.iterations,
        seed: config.seed,
        real_only: config.real_only,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numsearch::residual;

    #[test]
    fn config_validation() {
        let mut c = SearchConfig::new(2, 2, 1);
        assert!(c.validate().is_ok());
        c.restarts = 0;
        assert!(c.validate().is_err());
        let mut c = SearchConfig::new(2, 2, 1);
        c.tolerance = 0.0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn result_residual_matches_argmin() {
        let mut c = SearchConfig::new(2, 2, 7);
        c.restarts = 4;
        c.max_iters = 200;
        let r = search(&c).unwrap();
        let again = residual(&r.a, &r.b, 2).unwrap();
        assert!((again - r.residual).abs() <= 1e-15 * r.residual.max(1.0));
    }

    #[test]
    fn real_only_stays_real() {
        let mut c = SearchConfig::new(2, 2, 3);
        c.restarts = 2;
        c.max_iters = 300;
        c.real_only = true;
        let r = search(&c).unwrap();
        assert!(r.a.entries().iter().chain(r.b.entries()).all(|z| z.im == 0.0));
    }
}
