//! Left side versus right side of the limit theorems at finite `N`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::scaling::{rescale_log, ScalingPlan};
use crate::contour::{contour_correlation, ContourSpec};
use crate::ensembles::{mc_correlation, EnsembleSpec};
use crate::error::{Error, Result};
use crate::genfun::{gf_coefficient_cauchy_auto, gf_coefficient_series_auto, GfParams};
use crate::kernels::kernel_eval;
use crate::logcomplex::LogComplex;
use crate::specfun::ln_factorial;

/// Tolerance requested from the Cauchy extraction.
const CAUCHY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "lowercase")]
pub enum Method {
    Series,
    Cauchy,
    Contour,
    Mc { reps: usize, seed: u64 },
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Cauchy => "cauchy",
            Method::Contour => "contour",
            Method::Mc { .. } => "mc",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub n: usize,
    pub m: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    /// Estimated absolute error of `lhs` from the evaluation method
    /// (standard error for Monte Carlo).
    pub lhs_uncertainty: f64,
}

/// `f(N, m; x, y)/(N! m!)` by the chosen method, with a relative error.
fn normalized_correlation(plan: &ScalingPlan, spec: &EnsembleSpec, method: Method) -> Result<(LogComplex, f64)> {
    let (x, y) = plan.arguments();
    let p = GfParams::for_ensemble(spec, plan.n, plan.m, x, y)?;
    match method {
        Method::Series => {
            let c = gf_coefficient_series_auto(&p, plan.m)?;
            Ok((c.value, c.rel_err))
        }
        Method::Cauchy => {
            let c = gf_coefficient_cauchy_auto(&p, plan.m, CAUCHY_TOL)?;
            Ok((c.coefficient.value, c.coefficient.rel_err))
        }
        Method::Contour => {
            let cs = ContourSpec::with_default_a(plan.n, plan.regime.eta())?;
            let c = contour_correlation(&p, plan.m, &cs)?;
            Ok((c.value, c.rel_err))
        }
        Method::Mc { reps, seed } => {
            let e = mc_correlation(spec, plan.n, plan.m, x, y, reps, seed)?;
            let norm = ln_factorial(plan.n as u64) + ln_factorial(plan.m as u64);
            let v = LogComplex::from_real(e.estimate);
            let v = if v.is_zero() { v } else { LogComplex::new(v.log_abs - norm, v.phase) };
            let rel = if e.estimate != 0.0 { e.stderr / e.estimate.abs() } else { f64::INFINITY };
            Ok((v, rel))
        }
    }
}

/// Evaluates both sides of the theorem selected by `plan.regime` and the
/// symmetry class of `spec`.
pub fn verify_theorem(plan: &ScalingPlan, spec: &EnsembleSpec, method: Method) -> Result<Verification> {
    let scale = rescale_log(plan, spec.beta)?;
    let (f, rel) = normalized_correlation(plan, spec, method)?;
    let lhs = (scale * f).to_complex().re;
    if !lhs.is_finite() {
        return Err(Error::Precision { context: format!("left side overflowed at N = {}", plan.n), achieved: f64::INFINITY });
    }
    let rhs = spec.b_star.exp() * kernel_eval(plan.regime.kernel(spec.beta), plan.mu, plan.nu)?;
    Ok(Verification { n: plan.n, m: plan.m, lhs, rhs, abs_err: (lhs - rhs).abs(), lhs_uncertainty: rel * lhs.abs() })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    #[serde(rename = "N")]
    pub n: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
}

impl From<Verification> for TableRow {
    fn from(v: Verification) -> Self {
        TableRow { n: v.n, lhs: v.lhs, rhs: v.rhs, abs_err: v.abs_err }
    }
}

/// One [`verify_theorem`] row per `N`; rows are evaluated concurrently and
/// returned in the order of `n_list`.
pub fn convergence_table(base: &ScalingPlan, spec: &EnsembleSpec, method: Method, n_list: &[usize]) -> Result<Vec<TableRow>> {
    n_list
        .par_iter()
        .map(|&n| verify_theorem(&base.with_n(n)?, spec, method).map(TableRow::from))
        .collect()
}

/// Whether `abs_err` decreases strictly along the table.
pub fn is_monotone_decreasing(rows: &[TableRow]) -> bool {
    rows.windows(2).all(|w| w[1].abs_err < w[0].abs_err)
}
