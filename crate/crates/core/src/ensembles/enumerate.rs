//! Exact expectations over finitely supported entry distributions.

use num_complex::Complex64;
use rayon::prelude::*;

use super::matrix::{char_poly_extended, determinant, sample_covariance, Matrix};
use super::mc::pairwise_sum;
use super::{Beta, Distribution, EnsembleSpec};
use crate::error::{Error, Result};

/// Default bound on the number of entry configurations.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 20;

const CHUNK: u64 = 1 << 12;
const EXTENDED_BITS: usize = 192;

/// `E[det(Z−μ) det(Z−ν)]` by summing over every entry configuration.
pub fn enumerate_correlation(spec: &EnsembleSpec, n: usize, m: usize, mu: f64, nu: f64) -> Result<f64> {
    Ok(enumerate_correlations(spec, n, m, &[(mu, nu)], DEFAULT_ENUMERATION_BUDGET)?[0])
}

/// Several `(μ, ν)` pairs in one pass over the configurations.
pub fn enumerate_correlations(spec: &EnsembleSpec, n: usize, m: usize, pairs: &[(f64, f64)], budget: u64) -> Result<Vec<f64>> {
    let Distribution::Discrete { points, probs } = &spec.entry_dist else {
        return Err(Error::validation("enumeration needs a finitely supported entry distribution"));
    };
    if n < m {
        return Err(Error::validation(format!("need n >= m, got n={n}, m={m}")));
    }
    let slots = spec.beta.components() * n * m;
    let s = points.len() as u64;
    let total = (0..slots).try_fold(1u64, |acc, _| acc.checked_mul(s).filter(|t| *t <= budget));
    let Some(total) = total else {
        return Err(Error::Resource(format!(
            "{s}^{slots} configurations exceed the enumeration budget of {budget}"
        )));
    };

    let mut shifts: Vec<f64> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    shifts.sort_by(f64::total_cmp);
    shifts.dedup();
    let index_of = |x: f64| shifts.iter().position(|&y| y == x).expect("shift present");
    let pair_idx: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (index_of(a), index_of(b))).collect();

    let chunks: Vec<Vec<f64>> = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut acc = vec![0.0; pairs.len()];
            let mut dets = vec![Complex64::new(0.0, 0.0); shifts.len()];
            let mut digits = vec![0usize; slots];
            for idx in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let mut r = idx;
                let mut w = 1.0;
                for d in digits.iter_mut() {
                    *d = (r % s) as usize;
                    r /= s;
                    w *= probs[*d];
                }
                if w == 0.0 {
                    continue;
                }
                let x = Matrix::from_fn(n, m, |i, j| {
                    let k = spec.beta.components() * (i * m + j);
                    match spec.beta {
                        Beta::Real => Complex64::new(points[digits[k]], 0.0),
                        Beta::Complex => Complex64::new(points[digits[k]], points[digits[k + 1]]),
                    }
                });
                let z = sample_covariance(&x);
                for (d, &mu) in dets.iter_mut().zip(&shifts) {
                    *d = if m >= 3 {
                        char_poly_extended(&z, mu, EXTENDED_BITS)
                    } else {
                        determinant(&Matrix::from_fn(m, m, |i, j| if i == j { z.get(i, j) - mu } else { *z.get(i, j) }))
                    };
                }
                for (a, &(i, j)) in acc.iter_mut().zip(&pair_idx) {
                    *a += w * (dets[i] * dets[j]).re;
                }
            }
            acc
        })
        .collect();
    Ok((0..pairs.len())
        .map(|p| pairwise_sum(&chunks.iter().map(|c| c[p]).collect::<Vec<_>>()))
        .collect())
}
