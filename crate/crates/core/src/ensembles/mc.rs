//! Monte Carlo estimation of `E[det(Z−μ) det(Z−ν)]`.

use num_complex::Complex64;
use rand::distr::weighted::WeightedIndex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution as _, Normal, Uniform};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::matrix::{char_poly_product, sample_covariance, DataMatrix, Matrix};
use super::{Beta, Distribution, EnsembleSpec};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub estimate: f64,
    pub stderr: f64,
}

/// Sampler for one real component of a matrix entry.
enum Sampler {
    Normal(Normal<f64>),
    Uniform(Uniform<f64>),
    Discrete(Vec<f64>, WeightedIndex<f64>),
}

impl Sampler {
    fn new(d: &Distribution) -> Result<Self> {
        let bad = |e: &dyn std::fmt::Display| Error::validation(format!("cannot sample {d:?}: {e}"));
        Ok(match d {
            Distribution::Gaussian { sd } => Sampler::Normal(Normal::new(0.0, *sd).map_err(|e| bad(&e))?),
            Distribution::Uniform { half_width } => {
                Sampler::Uniform(Uniform::new_inclusive(-half_width, *half_width).map_err(|e| bad(&e))?)
            }
            Distribution::Discrete { points, probs } => {
                Sampler::Discrete(points.clone(), WeightedIndex::new(probs).map_err(|e| bad(&e))?)
            }
        })
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        match self {
            Sampler::Normal(d) => d.sample(rng),
            Sampler::Uniform(d) => d.sample(rng),
            Sampler::Discrete(p, w) => p[w.sample(rng)],
        }
    }
}

fn draw<R: Rng>(beta: Beta, s: &Sampler, n: usize, m: usize, rng: &mut R) -> DataMatrix {
    Matrix::from_fn(n, m, |_, _| match beta {
        Beta::Real => Complex64::new(s.sample(rng), 0.0),
        Beta::Complex => {
            let re = s.sample(rng);
            Complex64::new(re, s.sample(rng))
        }
    })
}

/// Sum in a fixed binary-tree order, independent of thread scheduling.
pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    if xs.len() <= 8 {
        return xs.iter().sum();
    }
    let (a, b) = xs.split_at(xs.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

/// Sample mean and standard error of `det(Z−μ) det(Z−ν)` over `reps`
/// independent draws. Replicate `r` uses ChaCha stream `r` keyed by `seed`,
/// so the result does not depend on the thread count.
pub fn mc_correlation(spec: &EnsembleSpec, n: usize, m: usize, mu: f64, nu: f64, reps: usize, seed: u64) -> Result<McEstimate> {
    if reps < 2 {
        return Err(Error::validation("mc_correlation needs reps >= 2"));
    }
    if n < m {
        return Err(Error::validation(format!("need n >= m, got n={n}, m={m}")));
    }
    if !spec.is_sampleable() {
        return Err(Error::validation(
            "ensemble carries only moment data; Monte Carlo needs an explicit entry distribution",
        ));
    }
    let sampler = Sampler::new(&spec.entry_dist)?;
    let samples: Vec<f64> = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            rng.set_stream(r);
            let x = draw(spec.beta, &sampler, n, m, &mut rng);
            char_poly_product(&sample_covariance(&x), mu, nu)
        })
        .collect();
    let k = reps as f64;
    let mean = pairwise_sum(&samples) / k;
    let dev: Vec<f64> = samples.iter().map(|v| (v - mean) * (v - mean)).collect();
    let var = pairwise_sum(&dev) / (k - 1.0);
    Ok(McEstimate { estimate: mean, stderr: (var / k).sqrt() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::BuiltinEnsemble;

    #[test]
    fn empty_matrix_gives_one() {
        let e = mc_correlation(&BuiltinEnsemble::RealGaussian.spec(), 4, 0, 1.0, 2.0, 10, 1).unwrap();
        assert_eq!(e, McEstimate { estimate: 1.0, stderr: 0.0 });
    }

    #[test]
    fn complex_sign_column_norm_is_constant() {
        let e = mc_correlation(&BuiltinEnsemble::ComplexSign.spec(), 3, 1, 0.0, 0.0, 200, 7).unwrap();
        assert!((e.estimate - 9.0).abs() < 1e-12);
        assert!(e.stderr < 1e-12);
    }

    #[test]
    fn complex_gaussian_second_moment() {
        let e = mc_correlation(&BuiltinEnsemble::ComplexGaussian.spec(), 2, 1, 0.0, 0.0, 40_000, 11).unwrap();
        assert!((e.estimate - 6.0).abs() < 3.0 * e.stderr, "{e:?}");
    }

    #[test]
    fn deterministic_and_symmetric() {
        let s = BuiltinEnsemble::RealUniform.spec();
        let a = mc_correlation(&s, 5, 3, 0.3, -1.7, 500, 42).unwrap();
        let b = mc_correlation(&s, 5, 3, -1.7, 0.3, 500, 42).unwrap();
        let c = mc_correlation(&s, 5, 3, 0.3, -1.7, 500, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn rejects_bad_arguments() {
        let s = BuiltinEnsemble::RealGaussian.spec();
        assert!(mc_correlation(&s, 2, 3, 0.0, 0.0, 10, 0).is_err());
        assert!(mc_correlation(&s, 3, 2, 0.0, 0.0, 1, 0).is_err());
        let moments_only = EnsembleSpec::from_fourth_moment(Beta::Real, 5.0).unwrap();
        assert!(mc_correlation(&moments_only, 3, 2, 0.0, 0.0, 10, 0).is_err());
    }
}
