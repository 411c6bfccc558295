//! Exact correlations `f(m+α, m; μ, ν) / ((m+α)! m!)` as Taylor coefficients of
//!
//! `G(z) = exp(−(μ+ν) z/(1−z) + b* z) · F_α(4μνz/(1−z)²) · (1−z)^{−(1+2/β+α)}`,
//!
//! where `F_α(w²) = (w/2)^{−α} I_α(w)` is entire and even in `w`.

pub mod cauchy;
pub mod series;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ensembles::{Beta, EnsembleSpec};
use crate::error::{Error, Result};
use crate::logcomplex::LogComplex;
use crate::specfun::bessel_i_ratio_fast;

pub use cauchy::{cauchy_auto_radius, cauchy_default_radius, gf_coefficient_cauchy, gf_coefficient_cauchy_auto, CauchyResult, MAX_CAUCHY_NODES};
pub use series::{gf_coefficient_series, gf_coefficient_series_auto, gf_coefficient_series_from, PowerSeries};

/// Parameters of the generating function.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GfParams {
    /// `α = n − m`.
    pub alpha: u32,
    pub beta: Beta,
    pub b_star: f64,
    pub mu: f64,
    pub nu: f64,
}

impl GfParams {
    pub fn new(alpha: u32, beta: Beta, b_star: f64, mu: f64, nu: f64) -> Result<Self> {
        if !(b_star.is_finite() && mu.is_finite() && nu.is_finite()) {
            return Err(Error::validation("generating-function parameters must be finite"));
        }
        Ok(GfParams { alpha, beta, b_star, mu, nu })
    }

    /// Parameters for `f(n, m; μ, ν)` in the given ensemble.
    pub fn for_ensemble(spec: &EnsembleSpec, n: usize, m: usize, mu: f64, nu: f64) -> Result<Self> {
        if n < m {
            return Err(Error::validation(format!("need n >= m, got n={n}, m={m}")));
        }
        let alpha = u32::try_from(n - m).map_err(|_| Error::validation("n − m too large"))?;
        GfParams::new(alpha, spec.beta, spec.b_star, mu, nu)
    }

    /// Exponent `1 + 2/β + α` of `(1−z)^{-1}`.
    pub fn pole_order(&self) -> u64 {
        let base = match self.beta {
            Beta::Complex => 2,
            Beta::Real => 3,
        };
        base + self.alpha as u64
    }
}

/// Result of a coefficient extraction, kept in log form since it leaves the
/// double range for large `n`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GfCoefficient {
    pub value: LogComplex,
    /// Estimated relative error.
    pub rel_err: f64,
}

impl GfCoefficient {
    /// The (real) coefficient as a double; may under- or overflow.
    pub fn to_f64(&self) -> f64 {
        self.value.to_complex().re
    }
}

/// `ln G(z)`; `one_minus_z` must equal `1 − z` and may be supplied with more
/// relative accuracy than the subtraction would give.
pub(crate) fn gf_rhs_log_with(p: &GfParams, z: Complex64, one_minus_z: Complex64) -> Result<LogComplex> {
    if one_minus_z.norm() == 0.0 {
        return Err(Error::Singularity("generating function evaluated at z = 1".into()));
    }
    let q = z / one_minus_z;
    let wsq = 4.0 * p.mu * p.nu * q / one_minus_z;
    let f = bessel_i_ratio_fast(p.alpha, wsq)?.value;
    let expo = -(p.mu + p.nu) * q + p.b_star * z - p.pole_order() as f64 * one_minus_z.ln();
    Ok(LogComplex::from_log(expo) * f)
}

/// The generating function `G(z)` in log form.
pub fn gf_rhs(p: &GfParams, z: Complex64) -> Result<LogComplex> {
    gf_rhs_log_with(p, z, 1.0 - z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn value_at_origin() {
        let p = GfParams::new(3, Beta::Complex, -1.0, 0.7, -2.0).unwrap();
        assert_relative_eq!(gf_rhs(&p, Complex64::new(0.0, 0.0)).unwrap().to_complex().re, 1.0 / 6.0, max_relative = 1e-14);
    }

    #[test]
    fn zero_shift_closed_form() {
        let p = GfParams::new(2, Beta::Real, 0.4, 0.0, 0.0).unwrap();
        let z = Complex64::new(0.3, 0.2);
        let want = (0.4 * z).exp() / 2.0 * (1.0 - z).powf(-5.0);
        let got = gf_rhs(&p, z).unwrap().to_complex();
        assert!((got - want).norm() < 1e-13 * want.norm());
    }

    #[test]
    fn real_for_opposite_shifts() {
        let p = GfParams::new(1, Beta::Complex, 0.0, 1.5, -0.5).unwrap();
        for &x in &[0.1, 0.5, 0.9] {
            let v = gf_rhs(&p, Complex64::new(x, 0.0)).unwrap().to_complex();
            assert!(v.im.abs() < 1e-14 * v.re.abs());
        }
    }

    #[test]
    fn singular_at_one() {
        let p = GfParams::new(0, Beta::Complex, 0.0, 0.0, 0.0).unwrap();
        assert!(matches!(gf_rhs(&p, Complex64::new(1.0, 0.0)), Err(Error::Singularity(_))));
    }
}
