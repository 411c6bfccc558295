//! Scaling plans and the normalizing factors of the four limit theorems.

use serde::{Deserialize, Serialize};

use super::geometry::{mp_density, spectrum_edges, Edge};
use crate::ensembles::Beta;
use crate::error::{Error, Result};
use crate::kernels::KernelId;
use crate::logcomplex::LogComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    Bulk,
    EdgeUpper,
    EdgeLower,
}

impl Regime {
    pub fn edge(self) -> Option<Edge> {
        match self {
            Regime::Bulk => None,
            Regime::EdgeUpper => Some(Edge::Upper),
            Regime::EdgeLower => Some(Edge::Lower),
        }
    }

    /// Limit kernel for the given symmetry class.
    pub fn kernel(self, beta: Beta) -> KernelId {
        match (self, beta) {
            (Regime::Bulk, Beta::Complex) => KernelId::Sine,
            (Regime::Bulk, Beta::Real) => KernelId::SineTilde,
            (_, Beta::Complex) => KernelId::Airy,
            (_, Beta::Real) => KernelId::AiryTilde,
        }
    }

    /// Pinch exponent of the matching contour.
    pub fn eta(self) -> f64 {
        match self {
            Regime::Bulk => crate::contour::ETA_BULK,
            _ => crate::contour::ETA_EDGE,
        }
    }
}

/// Everything needed to map local shifts `(μ, ν)` at size `N` onto the
/// arguments of `f(N, m; x, y)` and back onto the kernel scale.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingPlan {
    pub regime: Regime,
    pub n: usize,
    pub m: usize,
    pub gamma: f64,
    pub xi: f64,
    pub mu: f64,
    pub nu: f64,
    pub hat_mu: f64,
    pub hat_nu: f64,
}

fn dims(n: usize, gamma: f64) -> Result<usize> {
    spectrum_edges(gamma)?;
    let m = (n as f64 * gamma).round() as usize;
    if n == 0 || m == 0 || m > n {
        return Err(Error::validation(format!("N = {n}, gamma = {gamma} gives m = {m}, need 1 <= m <= N")));
    }
    Ok(m)
}

impl ScalingPlan {
    /// Bulk point `ξ ∈ (ξ_*, ξ*)`; `μ̂ = μ/(γ g(ξ))`; `m = round(Nγ)`.
    pub fn bulk(n: usize, gamma: f64, xi: f64, mu: f64, nu: f64) -> Result<Self> {
        let m = dims(n, gamma)?;
        let geo = spectrum_edges(gamma)?;
        if !geo.is_interior(xi) {
            return Err(Error::domain(format!(
                "xi = {xi} is not inside the bulk ({}, {})",
                geo.xi_lower, geo.xi_upper
            )));
        }
        let s = gamma * mp_density(xi, gamma)?;
        Ok(ScalingPlan { regime: Regime::Bulk, n, m, gamma, xi, mu, nu, hat_mu: mu / s, hat_nu: nu / s })
    }

    /// Soft edge; `μ̂ = ξ^{2/3} γ^{−1/6} μ`; `m = round(Nγ)`. The lower edge
    /// requires `γ < 1`.
    pub fn edge(edge: Edge, n: usize, gamma: f64, mu: f64, nu: f64) -> Result<Self> {
        let m = dims(n, gamma)?;
        if edge == Edge::Lower && gamma == 1.0 {
            return Err(Error::validation("the lower edge is a soft edge only for gamma < 1"));
        }
        let xi = spectrum_edges(gamma)?.edge(edge);
        let s = xi.powf(2.0 / 3.0) * gamma.powf(-1.0 / 6.0);
        let regime = match edge {
            Edge::Upper => Regime::EdgeUpper,
            Edge::Lower => Regime::EdgeLower,
        };
        Ok(ScalingPlan { regime, n, m, gamma, xi, mu, nu, hat_mu: s * mu, hat_nu: s * nu })
    }

    /// The same point and shifts at another size.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        match self.regime.edge() {
            None => ScalingPlan::bulk(n, self.gamma, self.xi, self.mu, self.nu),
            Some(e) => ScalingPlan::edge(e, n, self.gamma, self.mu, self.nu),
        }
    }

    pub fn alpha(&self) -> usize {
        self.n - self.m
    }

    /// Arguments `(x, y)` of `f(N, m; x, y)`.
    pub fn arguments(&self) -> (f64, f64) {
        let n = self.n as f64;
        match self.regime {
            Regime::Bulk => (n * self.xi + self.hat_mu, n * self.xi + self.hat_nu),
            Regime::EdgeUpper => {
                let k = n.cbrt();
                (self.xi * n + self.hat_mu * k, self.xi * n + self.hat_nu * k)
            }
            Regime::EdgeLower => {
                let k = n.cbrt();
                (self.xi * n - self.hat_mu * k, self.xi * n - self.hat_nu * k)
            }
        }
    }

    /// `ln` of the theorem's prefactor in front of `Z_N`.
    fn log_prefactor(&self, beta: Beta) -> Result<f64> {
        let n = self.n as f64;
        let (xi, gamma) = (self.xi, self.gamma);
        Ok(match (self.regime, beta) {
            (Regime::Bulk, Beta::Complex) => -(gamma * mp_density(xi, gamma)?).ln(),
            (Regime::Bulk, Beta::Real) => -n.ln() - xi.ln() - 3.0 * (gamma * mp_density(xi, gamma)?).ln(),
            (_, Beta::Complex) => (2.0 / 3.0) * xi.ln() - gamma.ln() / 6.0 + n.ln() / 3.0,
            (_, Beta::Real) => xi.ln() - 0.5 * gamma.ln(),
        })
    }
}

/// `ln` of the full factor multiplying `f(N, m; x, y)/(N! m!)` on the left
/// side of the theorem: the prefactor times `Z_N = (xy)^{α/2} e^{−(x+y)/2}`.
pub fn rescale_log(plan: &ScalingPlan, beta: Beta) -> Result<LogComplex> {
    if plan.regime == Regime::EdgeLower && plan.gamma == 1.0 {
        return Err(Error::validation("the lower edge is a soft edge only for gamma < 1"));
    }
    let (x, y) = plan.arguments();
    let alpha = plan.alpha() as f64;
    let xy = x * y;
    if alpha > 0.0 && !(xy > 0.0) {
        return Err(Error::validation(format!(
            "shifted arguments ({x}, {y}) must have a positive product for N = {}",
            plan.n
        )));
    }
    let power = if alpha > 0.0 { 0.5 * alpha * (x.abs().ln() + y.abs().ln()) } else { 0.0 };
    Ok(LogComplex::new(plan.log_prefactor(beta)? + power - 0.5 * (x + y), 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn bulk_zero_shift_factor() {
        let p = ScalingPlan::bulk(100, 0.5, 1.5, 0.0, 0.0).unwrap();
        assert_eq!((p.m, p.alpha()), (50, 50));
        let l = rescale_log(&p, Beta::Complex).unwrap().log_abs;
        let pre = -(0.5 * mp_density(1.5, 0.5).unwrap()).ln();
        assert_relative_eq!(l, pre + 50.0 * 150f64.ln() - 150.0, max_relative = 1e-14);
    }

    #[test]
    fn edge_arguments_and_signs() {
        let up = ScalingPlan::edge(Edge::Upper, 125, 0.5, 1.0, -1.0).unwrap();
        let lo = ScalingPlan::edge(Edge::Lower, 125, 0.5, 1.0, -1.0).unwrap();
        let (x, y) = up.arguments();
        assert_relative_eq!(x - up.xi * 125.0, 5.0 * up.hat_mu, max_relative = 1e-12);
        assert_relative_eq!(y - up.xi * 125.0, -5.0 * up.hat_mu, max_relative = 1e-12);
        let (x, _) = lo.arguments();
        assert_relative_eq!(x - lo.xi * 125.0, -5.0 * lo.hat_mu, max_relative = 1e-12);
        assert_relative_eq!(up.hat_mu, up.xi.powf(2.0 / 3.0) * 0.5f64.powf(-1.0 / 6.0), max_relative = 1e-15);
    }

    #[test]
    fn alpha_zero_leaves_only_prefactor() {
        let p = ScalingPlan::edge(Edge::Upper, 64, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(p.alpha(), 0);
        let l = rescale_log(&p, Beta::Real).unwrap().log_abs;
        assert_relative_eq!(l, 4f64.ln() - 0.5 * 4.0 * 64.0 * 2.0, max_relative = 1e-14);
    }

    #[test]
    fn inadmissible_plans() {
        assert!(ScalingPlan::edge(Edge::Lower, 100, 1.0, 0.0, 0.0).is_err());
        assert!(ScalingPlan::bulk(100, 0.5, 3.0, 0.0, 0.0).is_err());
        assert!(ScalingPlan::bulk(1, 0.3, 1.0, 0.0, 0.0).is_err());
    }
}
