//! Empirical checks of the large-order Bessel estimates.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::bessel::{bessel_i_log, bessel_j};
use super::uniform::bessel_i_uniform;
use crate::error::{Error, Result};

/// `n` log-spaced points strictly inside `(lo, hi)`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > lo && hi.is_finite()) || n == 0 {
        return Err(Error::validation("log_grid needs 0 < lo < hi and n >= 1"));
    }
    let (a, b) = (lo.ln(), hi.ln());
    Ok((1..=n).map(|k| (a + (b - a) * k as f64 / (n + 1) as f64).exp()).collect())
}

/// Default scan grid: 4000 log-spaced points in `(1e-2, 1e2)`.
pub fn default_bound_grid() -> Vec<f64> {
    log_grid(1e-2, 1e2, 4000).expect("fixed grid")
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundScan {
    pub alpha: u32,
    /// `sup |J_α(αx)| (αx)^{1/3}` over the grid.
    pub sup: f64,
    /// Grid point attaining the supremum.
    pub argmax: f64,
}

/// `sup_x |J_α(αx)| (αx)^{1/3}` over `grid`.
pub fn j_bound_scan(alpha: u32, grid: &[f64]) -> Result<BoundScan> {
    if grid.is_empty() {
        return Err(Error::validation("j_bound_scan needs a non-empty grid"));
    }
    let a = alpha as f64;
    let mut best = BoundScan { alpha, sup: 0.0, argmax: grid[0] };
    for &x in grid {
        let t = a * x;
        let v = bessel_j(alpha, t)?.abs() * t.cbrt();
        if v > best.sup {
            best.sup = v;
            best.argmax = x;
        }
    }
    Ok(best)
}

/// Spread `max/min − 1` of the scanned suprema.
pub fn bound_variation(scans: &[BoundScan]) -> f64 {
    let hi = scans.iter().map(|s| s.sup).fold(f64::NEG_INFINITY, f64::max);
    let lo = scans.iter().map(|s| s.sup).fold(f64::INFINITY, f64::min);
    hi / lo - 1.0
}

/// `|I_α^{unif}(αz) / I_α(αz) − 1|` for the leading uniform approximation.
pub fn i_uniform_rel_err(alpha: u32, z: Complex64) -> Result<f64> {
    let approx = bessel_i_uniform(alpha, z)?;
    let exact = bessel_i_log(alpha, z * alpha as f64)?.value;
    Ok(((approx / exact).to_complex() - 1.0).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_open_and_log_spaced() {
        let g = log_grid(1e-2, 1e2, 3).unwrap();
        assert_eq!(g.len(), 3);
        assert!((g[1] - 1.0).abs() < 1e-12);
        assert!(g[0] > 1e-2 && g[2] < 1e2);
        assert!(log_grid(1.0, 0.5, 3).is_err());
    }

    #[test]
    fn sup_is_flat_in_alpha_and_near_turning_point() {
        let grid = default_bound_grid();
        let scans: Vec<_> = [50, 100, 200].iter().map(|&a| j_bound_scan(a, &grid).unwrap()).collect();
        for s in &scans {
            assert!((1.0..1.2).contains(&s.argmax), "{s:?}");
        }
        // leading order is 2^{1/3} max Ai ≈ 0.674
        for s in &scans {
            assert!((s.sup - 0.6748).abs() < 0.02, "{s:?}");
        }
        assert!(bound_variation(&scans) < 0.2);
    }

    #[test]
    fn uniform_error_halves() {
        for z in [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)] {
            let r = i_uniform_rel_err(40, z).unwrap() / i_uniform_rel_err(20, z).unwrap();
            assert!((0.3..=0.7).contains(&r), "z={z} ratio={r}");
        }
    }
}
