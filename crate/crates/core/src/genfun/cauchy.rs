//! Coefficient extraction by the trapezoidal rule on a circle `|z| = r`.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{gf_rhs_log_with, GfCoefficient, GfParams};
use crate::error::{Error, Result};
use crate::logcomplex::LogComplex;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CauchyResult {
    pub coefficient: GfCoefficient,
    pub radius: f64,
    pub nodes: usize,
    /// `|T_n − T_{n/2}|` relative to `|T_n|`.
    pub quadrature_err: f64,
    /// Rounding level of the sum relative to `|T_n|`.
    pub rounding_err: f64,
}

/// `r = m/(m+α+2)` clipped to `[0.1, 0.9]`.
pub fn cauchy_default_radius(alpha: u32, m: usize) -> f64 {
    (m as f64 / (m as f64 + alpha as f64 + 2.0)).clamp(0.1, 0.9)
}

/// `ln |G(z) z^{−m}|` and the phase on the node `z = r e^{iθ}`.
fn node_log(p: &GfParams, m: usize, r: f64, theta: f64) -> Result<LogComplex> {
    let z = Complex64::from_polar(r, theta);
    // 1 − r cos θ = (1 − r) + 2r sin²(θ/2), free of cancellation near z = 1
    let s = (0.5 * theta).sin();
    let omz = Complex64::new((1.0 - r) + 2.0 * r * s * s, -r * theta.sin());
    let g = gf_rhs_log_with(p, z, omz)?;
    Ok(g * LogComplex::new(-(m as f64) * r.ln(), -(m as f64) * theta))
}

/// Trapezoidal sums on `nodes` and `nodes/2` points; returns both plus the
/// log of the largest summand.
fn trapezoid(p: &GfParams, m: usize, r: f64, nodes: usize) -> Result<(LogComplex, LogComplex, f64)> {
    let vals: Vec<LogComplex> = (0..nodes)
        .into_par_iter()
        .map(|k| node_log(p, m, r, std::f64::consts::TAU * k as f64 / nodes as f64))
        .collect::<Result<_>>()?;
    let shift = vals.iter().map(|v| v.log_abs).fold(f64::NEG_INFINITY, f64::max);
    if shift == f64::NEG_INFINITY {
        return Ok((LogComplex::ZERO, LogComplex::ZERO, shift));
    }
    let mut full = Complex64::new(0.0, 0.0);
    let mut half = Complex64::new(0.0, 0.0);
    for (k, v) in vals.iter().enumerate() {
        let c = v.to_complex_scaled(shift);
        full += c;
        if k % 2 == 0 {
            half += c;
        }
    }
    let lift = |s: Complex64, n: usize| {
        // only the real part is meaningful: the coefficient is real
        let l = LogComplex::from_real(s.re / n as f64);
        LogComplex::new(l.log_abs + shift, l.phase)
    };
    Ok((lift(full, nodes), lift(half, nodes / 2), shift))
}

/// Largest node count accepted by [`gf_coefficient_cauchy`].
pub const MAX_CAUCHY_NODES: usize = 1 << 24;

/// `(1/2πi)∮ G(z) z^{−m−1} dz` by the `nodes`-point trapezoidal rule on
/// `|z| = radius`.
pub fn gf_coefficient_cauchy(p: &GfParams, m: usize, radius: f64, nodes: usize) -> Result<CauchyResult> {
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::domain(format!("Cauchy radius must lie in (0, 1), got {radius}")));
    }
    if nodes < 8 {
        return Err(Error::validation(format!("need at least 8 nodes, got {nodes}")));
    }
    if nodes > MAX_CAUCHY_NODES {
        return Err(Error::Resource(format!("{nodes} Cauchy nodes exceed the limit {MAX_CAUCHY_NODES}")));
    }
    let nodes = nodes + nodes % 2;
    let (full, half, shift) = trapezoid(p, m, radius, nodes)?;
    let diff = full.to_complex_scaled(shift) - half.to_complex_scaled(shift);
    let mag = full.to_complex_scaled(shift).norm();
    let quadrature_err = if mag > 0.0 { diff.norm() / mag } else { f64::INFINITY };
    let rounding = if mag > 0.0 { f64::EPSILON * (nodes as f64).sqrt() / mag } else { f64::INFINITY };
    Ok(CauchyResult {
        coefficient: GfCoefficient { value: full, rel_err: quadrature_err.max(rounding) },
        radius,
        nodes,
        quadrature_err,
        rounding_err: rounding,
    })
}

/// Largest `ln |G(z) z^{−m}|` over a sample of the circle `|z| = r`.
fn max_modulus(p: &GfParams, m: usize, r: f64) -> f64 {
    const SAMPLES: usize = 128;
    (0..SAMPLES)
        .map(|k| {
            // cluster samples near θ = 0 where the integrand varies fastest
            let u = k as f64 / (SAMPLES - 1) as f64;
            let theta = std::f64::consts::PI * u * u;
            node_log(p, m, r, theta).map(|v| v.log_abs).unwrap_or(f64::INFINITY)
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Radius minimizing the maximum modulus of the integrand, which bounds the
/// cancellation in the trapezoidal sum.
pub fn cauchy_auto_radius(p: &GfParams, m: usize) -> f64 {
    let n = (m + p.alpha as usize + 2) as f64;
    // search 1 − r on a log grid from 0.9 down to 0.01/n
    let lo = (0.01 / n).ln();
    let hi = 0.9f64.ln();
    let grid = 48;
    let eval = |t: f64| max_modulus(p, m, 1.0 - t.exp());
    let (mut best_t, mut best) = (hi, f64::INFINITY);
    for i in 0..=grid {
        let t = lo + (hi - lo) * i as f64 / grid as f64;
        let v = eval(t);
        if v < best {
            best = v;
            best_t = t;
        }
    }
    let step = (hi - lo) / grid as f64;
    let (mut a, mut b) = (best_t - step, best_t + step);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..30 {
        let c = b - g * (b - a);
        let d = a + g * (b - a);
        if eval(c) < eval(d) {
            b = d;
        } else {
            a = c;
        }
    }
    (1.0 - (0.5 * (a + b)).exp()).clamp(1e-6, 1.0 - 1e-12)
}

/// Trapezoidal extraction with an automatically chosen radius and node
/// count, doubling the nodes until consecutive sums agree to `tol`.
pub fn gf_coefficient_cauchy_auto(p: &GfParams, m: usize, tol: f64) -> Result<CauchyResult> {
    const MAX_NODES: usize = 1 << 22;
    let r = cauchy_auto_radius(p, m);
    let mut nodes = (2 * (m + 1)).next_power_of_two().max(64);
    loop {
        let res = gf_coefficient_cauchy(p, m, r, nodes)?;
        if res.coefficient.rel_err <= tol {
            return Ok(res);
        }
        if res.quadrature_err <= 10.0 * res.rounding_err {
            // converged, but the coefficient is at the rounding level of the summands
            return Err(Error::Precision {
                context: format!("Cauchy coefficient m={m}, alpha={} is below the rounding level", p.alpha),
                achieved: res.coefficient.rel_err,
            });
        }
        if nodes >= MAX_NODES {
            return Err(Error::Precision {
                context: format!("Cauchy extraction m={m}, alpha={} with {nodes} nodes", p.alpha),
                achieved: res.coefficient.rel_err,
            });
        }
        nodes *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::Beta;
    use crate::genfun::{gf_coefficient_series, gf_coefficient_series_auto};
    use approx::assert_relative_eq;

    #[test]
    fn constant_term() {
        let p = GfParams::new(2, Beta::Complex, 0.3, 1.0, -1.0).unwrap();
        let r = gf_coefficient_cauchy(&p, 0, 0.3, 64).unwrap();
        assert_relative_eq!(r.coefficient.to_f64(), 0.5, max_relative = 1e-10);
    }

    #[test]
    fn agrees_with_series() {
        let p = GfParams::new(3, Beta::Real, -2.0, 1.0, 2.0).unwrap();
        for m in [1, 4, 9] {
            let s = gf_coefficient_series_auto(&p, m).unwrap().to_f64();
            let c = gf_coefficient_cauchy(&p, m, cauchy_default_radius(3, m), 256).unwrap();
            assert_relative_eq!(c.coefficient.to_f64(), s, max_relative = 1e-9);
        }
    }

    #[test]
    fn doubling_nodes_shrinks_error() {
        let p = GfParams::new(1, Beta::Complex, 0.0, 0.5, 1.5).unwrap();
        let a = gf_coefficient_cauchy(&p, 6, 0.5, 16).unwrap().quadrature_err;
        let b = gf_coefficient_cauchy(&p, 6, 0.5, 32).unwrap().quadrature_err;
        assert!(b * 10.0 <= a, "{a} -> {b}");
    }

    #[test]
    fn vanishing_coefficient_is_reported_quickly() {
        // real Rademacher, n = 2, m = 1, (μ, ν) = (1, 2): f = 4 − 6 + 2 = 0
        let p = GfParams::new(1, Beta::Real, -2.0, 1.0, 2.0).unwrap();
        let t = std::time::Instant::now();
        assert!(matches!(gf_coefficient_cauchy_auto(&p, 1, 1e-12), Err(Error::Precision { .. })));
        assert!(t.elapsed().as_secs_f64() < 1.0);
    }

    #[test]
    fn auto_extraction_for_larger_sizes() {
        let p = GfParams::new(15, Beta::Complex, 0.0, 45.0, 44.0).unwrap();
        let s = gf_coefficient_series(&p, 15, 512).unwrap();
        let c = gf_coefficient_cauchy_auto(&p, 15, 1e-10).unwrap();
        assert_relative_eq!(c.coefficient.value.log_abs, s.value.log_abs, epsilon = 1e-8);
        assert_eq!(c.coefficient.value.phase, s.value.phase);
    }

    #[test]
    fn radius_outside_disk_is_rejected() {
        let p = GfParams::new(0, Beta::Complex, 0.0, 0.0, 0.0).unwrap();
        assert!(matches!(gf_coefficient_cauchy(&p, 1, 1.0, 64), Err(Error::Domain(_))));
    }
}
