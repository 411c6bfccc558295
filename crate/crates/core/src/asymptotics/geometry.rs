//! Marchenko–Pastur density, spectral edges and the bulk exponent `h∞`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumGeometry {
    pub gamma: f64,
    /// `(1 − √γ)²`.
    pub xi_lower: f64,
    /// `(1 + √γ)²`.
    pub xi_upper: f64,
}

impl SpectrumGeometry {
    pub fn is_interior(&self, xi: f64) -> bool {
        xi > self.xi_lower && xi < self.xi_upper
    }

    /// Which edge `xi` is (within relative `1e-9`), if any.
    pub fn edge_of(&self, xi: f64) -> Option<Edge> {
        let close = |e: f64| (xi - e).abs() <= 1e-9 * e.abs().max(1.0);
        if close(self.xi_upper) {
            Some(Edge::Upper)
        } else if close(self.xi_lower) {
            Some(Edge::Lower)
        } else {
            None
        }
    }

    pub fn edge(&self, e: Edge) -> f64 {
        match e {
            Edge::Upper => self.xi_upper,
            Edge::Lower => self.xi_lower,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Edge {
    Upper,
    Lower,
}

fn check_gamma(gamma: f64) -> Result<()> {
    if !(gamma > 0.0 && gamma <= 1.0) {
        return Err(Error::domain(format!("gamma must lie in (0, 1], got {gamma}")));
    }
    Ok(())
}

/// Edges of the support, the roots of `ξ² − 2(1+γ)ξ + (1−γ)² = 0`.
pub fn spectrum_edges(gamma: f64) -> Result<SpectrumGeometry> {
    check_gamma(gamma)?;
    let r = gamma.sqrt();
    Ok(SpectrumGeometry { gamma, xi_lower: (1.0 - r) * (1.0 - r), xi_upper: (1.0 + r) * (1.0 + r) })
}

/// Density `g(ξ) = √((ξ−ξ_*)(ξ*−ξ)) / (2πγξ)` on the support, 0 outside.
pub fn mp_density(xi: f64, gamma: f64) -> Result<f64> {
    let g = spectrum_edges(gamma)?;
    if xi <= g.xi_lower || xi >= g.xi_upper {
        return Ok(0.0);
    }
    Ok(((xi - g.xi_lower) * (g.xi_upper - xi)).sqrt() / (2.0 * std::f64::consts::PI * gamma * xi))
}

/// `h∞(ξ) = −ξ/4 + (1+γ)/2 − (1−γ)²/(4ξ)`.
pub fn h_inf(xi: f64, gamma: f64) -> Result<f64> {
    if !(xi > 0.0) || !xi.is_finite() {
        return Err(Error::domain(format!("h_inf needs xi > 0, got {xi}")));
    }
    check_gamma(gamma)?;
    Ok(-0.25 * xi + 0.5 * (1.0 + gamma) - 0.25 * (1.0 - gamma) * (1.0 - gamma) / xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate, QuadOptions};
    use approx::assert_relative_eq;
    use num_complex::Complex64;

    #[test]
    fn reference_values() {
        assert_relative_eq!(mp_density(2.0, 1.0).unwrap(), 0.5 / std::f64::consts::PI, max_relative = 1e-15);
        assert_eq!(mp_density(4.0, 1.0).unwrap(), 0.0);
        let e = spectrum_edges(1.0).unwrap();
        assert_eq!((e.xi_lower, e.xi_upper), (0.0, 4.0));
        let e = spectrum_edges(0.25).unwrap();
        assert_eq!((e.xi_lower, e.xi_upper), (0.25, 2.25));
        assert_relative_eq!(h_inf(2.0, 1.0).unwrap(), 0.5, max_relative = 1e-15);
        assert!(mp_density(1.0, 0.0).is_err());
        assert!(h_inf(0.0, 0.5).is_err());
    }

    #[test]
    fn edges_solve_the_quadratic() {
        for i in 1..=40 {
            let g = i as f64 / 40.0;
            let e = spectrum_edges(g).unwrap();
            for x in [e.xi_lower, e.xi_upper] {
                assert!((x * x - 2.0 * (1.0 + g) * x + (1.0 - g) * (1.0 - g)).abs() < 1e-12);
            }
            assert!(h_inf(e.xi_upper, g).unwrap().abs() < 1e-12);
            // 1 + γ − ξ = ∓2√γ at the upper/lower edge
            assert!((1.0 + g - e.xi_upper + 2.0 * g.sqrt()).abs() < 1e-14);
            assert!((1.0 + g - e.xi_lower - 2.0 * g.sqrt()).abs() < 1e-14);
        }
    }

    #[test]
    fn density_is_normalized() {
        for gamma in [0.25, 0.5, 1.0] {
            let e = spectrum_edges(gamma).unwrap();
            let (c, r) = (0.5 * (e.xi_upper + e.xi_lower), 0.5 * (e.xi_upper - e.xi_lower));
            // ξ = c − r cos θ removes the square-root endpoints
            let f = |t: f64| {
                let xi = c - r * t.cos();
                Ok(Complex64::new(mp_density(xi, gamma).unwrap() * r * t.sin(), 0.0))
            };
            let total = integrate(f, 0.0, std::f64::consts::PI, QuadOptions::default()).unwrap();
            assert_relative_eq!(total.value.re, 1.0, epsilon = 1e-8);
        }
    }

    #[test]
    fn h_inf_matches_density() {
        for gamma in [0.3, 0.7, 1.0] {
            let e = spectrum_edges(gamma).unwrap();
            for k in 1..=50 {
                let xi = e.xi_lower + (e.xi_upper - e.xi_lower) * k as f64 / 51.0;
                let lhs = (h_inf(xi, gamma).unwrap() / xi).sqrt();
                let rhs = std::f64::consts::PI * gamma * mp_density(xi, gamma).unwrap();
                assert!((lhs - rhs).abs() < 1e-12, "gamma={gamma} xi={xi}");
            }
        }
    }
}
