//! The limiting integrals `S(a)` (bulk) and `A(a)` (edge) and their closed forms.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::asymptotics::geometry::{h_inf, spectrum_edges};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadOptions};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitIntegral {
    /// Real part of the integral.
    pub value: f64,
    /// Imaginary part, which vanishes in exact arithmetic.
    pub imag_residual: f64,
    /// Quadrature error estimate.
    pub err: f64,
}

const LIMIT_QUAD: QuadOptions = QuadOptions { abs_tol: 1e-13, rel_tol: 1e-12, max_depth: 20 };
/// Neglected tails are below `e^{−TAIL}` relative to the peak.
const TAIL: f64 = 45.0;

fn finish(v: Complex64, err: f64) -> LimitIntegral {
    LimitIntegral { value: v.re, imag_residual: v.im, err }
}

fn check_a(a: f64) -> Result<()> {
    if !(a >= 1.0) {
        return Err(Error::domain(format!("limit integrals need a >= 1, got {a}")));
    }
    Ok(())
}

/// `(1/2πi)∫_{c−i∞}^{c+i∞} e^{tz − q/z} z^{−3/2} dz` along the parabola
/// `z = c(1+is)²`, on which `z^{−3/2} = c^{−3/2}(1+is)^{−3}` exactly.
fn bromwich_parabola(t: f64, q: f64) -> Result<(Complex64, f64)> {
    if !(t > 0.0) {
        return Err(Error::domain(format!("Bromwich integral needs t > 0, got {t}")));
    }
    // scale so that the e^{−q/z} factor stays bounded on the path
    let c = 1f64.max((q / t).sqrt());
    let s_max = (TAIL / (t * c) + 1.0).sqrt();
    let f = |s: f64| {
        let w = Complex64::new(1.0, s);
        let z = c * w * w;
        let e = (t * z - q / z).exp();
        Ok(e * w.powi(-3) * w * (c.powf(-0.5) / std::f64::consts::PI))
    };
    let r = integrate(f, -s_max, s_max, LIMIT_QUAD)?;
    Ok((r.value, r.err))
}

/// `(1/2πi)∫_{1−i∞}^{1+i∞} e^{tz} e^{−a²/4z} z^{−3/2} dz`, by quadrature.
pub fn laplace_inversion_numeric(a: f64, t: f64) -> Result<f64> {
    Ok(bromwich_parabola(t, 0.25 * a * a)?.0.re)
}

/// `2 sin(a√t)/(√π a)`, with the limit `2√(t/π)` at `a = 0`.
pub fn laplace_inversion_closed_form(a: f64, t: f64) -> f64 {
    if a == 0.0 {
        return 2.0 * (t / std::f64::consts::PI).sqrt();
    }
    2.0 * (a * t.sqrt()).sin() / (std::f64::consts::PI.sqrt() * a)
}

fn check_bulk(xi: f64, gamma: f64) -> Result<f64> {
    let g = spectrum_edges(gamma)?;
    if !g.is_interior(xi) {
        return Err(Error::domain(format!(
            "xi = {xi} is not inside the bulk ({}, {})",
            g.xi_lower, g.xi_upper
        )));
    }
    h_inf(xi, gamma)
}

/// `S(a) = e^{b*}/(4π^{3/2}ξ^{1/2}) ∫_{−a}^{a} exp(h∞(1−iu) − (μ−ν)²/(4ξ(1−iu))) (1−iu)^{−3/2} du`.
/// `a = ∞` is evaluated on a deformed path.
pub fn limit_integral_bulk(xi: f64, gamma: f64, b_star: f64, mu: f64, nu: f64, a: f64) -> Result<LimitIntegral> {
    check_a(a)?;
    let h = check_bulk(xi, gamma)?;
    let q = 0.25 * (mu - nu) * (mu - nu) / xi;
    let pref = b_star.exp() / (4.0 * std::f64::consts::PI.powf(1.5) * xi.sqrt());
    if a.is_infinite() {
        // ∫ du over the line Re w = 1 equals 2π times the Bromwich integral
        let (v, err) = bromwich_parabola(h, q)?;
        let k = pref * std::f64::consts::TAU;
        return Ok(finish(v * k, err * k));
    }
    let f = |u: f64| {
        let w = Complex64::new(1.0, -u);
        Ok((h * w - q / w).exp() * w.powf(-1.5))
    };
    let r = integrate(f, -a, a, LIMIT_QUAD)?;
    Ok(finish(r.value * pref, r.err * pref))
}

/// `S(∞) = (1/π) e^{b*} √(h∞/ξ) · sin(x)/x` with `x = (μ−ν)√(h∞/ξ)`.
pub fn s_infinity_closed_form(xi: f64, gamma: f64, b_star: f64, mu: f64, nu: f64) -> Result<f64> {
    let h = check_bulk(xi, gamma)?;
    let k = (h / xi).sqrt();
    let x = (mu - nu) * k;
    let sinc = if x == 0.0 { 1.0 } else { x.sin() / x };
    Ok(b_star.exp() * k * sinc / std::f64::consts::PI)
}

/// `A(a) = e^{b*}/(4π^{3/2}ξ^{1/2}) ∫_{−a}^{a} exp((γw³/12 − (μ+ν)√γ w/2 − (μ−ν)²/(4w))/ξ) w^{−3/2} du`
/// with `w = 1 − iu`, at an edge `ξ` of the spectrum. The integrand decays
/// like `e^{−γu²/(4ξ)}`, so `a = ∞` is truncated where it drops below `e^{−45}`.
pub fn limit_integral_edge(xi: f64, gamma: f64, b_star: f64, mu: f64, nu: f64, a: f64) -> Result<LimitIntegral> {
    check_a(a)?;
    let g = spectrum_edges(gamma)?;
    if g.edge_of(xi).is_none() || xi <= 0.0 {
        return Err(Error::domain(format!(
            "xi = {xi} is not a (positive) spectral edge for gamma = {gamma}"
        )));
    }
    let sg = gamma.sqrt();
    let pref = b_star.exp() / (4.0 * std::f64::consts::PI.powf(1.5) * xi.sqrt());
    let u_max = a.min((4.0 * xi * (TAIL + gamma / (12.0 * xi) + 0.5 * (mu + nu).abs() * sg / xi) / gamma).sqrt() + 1.0);
    let f = |u: f64| {
        let w = Complex64::new(1.0, -u);
        let e = (gamma * w * w * w / 12.0 - 0.5 * (mu + nu) * sg * w - 0.25 * (mu - nu) * (mu - nu) / w) / xi;
        Ok(e.exp() * w.powf(-1.5))
    };
    let r = integrate(f, -u_max, u_max, LIMIT_QUAD)?;
    Ok(finish(r.value * pref, r.err * pref))
}

/// `(e^{b*}/(4π^{3/2} i)) ∫_{1−i∞}^{1+i∞} exp(z³/12 − (μ+ν)z/2 − (μ−ν)²/(4z)) z^{−3/2} dz`,
/// the contour-integral form of `e^{b*}·𝔸(μ, ν)`.
pub fn airy_kernel_integral(b_star: f64, mu: f64, nu: f64) -> Result<LimitIntegral> {
    let pref = b_star.exp() / (4.0 * std::f64::consts::PI.powf(1.5));
    let u_max = (4.0 * (TAIL + 1.0 + 0.5 * (mu + nu).abs())).sqrt() + 1.0;
    // z = 1 + iu, dz = i du
    let f = |u: f64| {
        let z = Complex64::new(1.0, u);
        let e = z * z * z / 12.0 - 0.5 * (mu + nu) * z - 0.25 * (mu - nu) * (mu - nu) / z;
        Ok(e.exp() * z.powf(-1.5))
    };
    let r = integrate(f, -u_max, u_max, LIMIT_QUAD)?;
    Ok(finish(r.value * pref, r.err * pref))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn laplace_identity() {
        let t = std::f64::consts::PI.powi(2) / 4.0;
        assert!(laplace_inversion_numeric(2.0, t).unwrap().abs() < 1e-8);
        for &(a, t) in &[(0.5, 1.0), (3.0, 0.7), (1.0, 4.0), (0.0, 2.0)] {
            assert_relative_eq!(
                laplace_inversion_numeric(a, t).unwrap(),
                laplace_inversion_closed_form(a, t),
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn bulk_integral_at_infinity() {
        for &(gamma, xi, mu, nu) in &[(0.5, 1.5, 0.0, 0.0), (0.3, 1.0, 0.7, -1.1), (1.0, 2.0, 2.5, 0.0)] {
            let s = limit_integral_bulk(xi, gamma, -0.4, mu, nu, f64::INFINITY).unwrap();
            let c = s_infinity_closed_form(xi, gamma, -0.4, mu, nu).unwrap();
            assert_relative_eq!(s.value, c, epsilon = 1e-10);
            assert!(s.imag_residual.abs() < 1e-10);
        }
    }

    #[test]
    fn bulk_integral_converges_slowly_in_a() {
        let c = s_infinity_closed_form(1.5, 0.5, 0.0, 0.0, 0.0).unwrap();
        let e50 = (limit_integral_bulk(1.5, 0.5, 0.0, 0.0, 0.0, 50.0).unwrap().value - c).abs();
        let e200 = (limit_integral_bulk(1.5, 0.5, 0.0, 0.0, 0.0, 200.0).unwrap().value - c).abs();
        // oscillating |u|^{-3/2} integrand: the tail shrinks like a^{-3/2}
        let ratio = e200 / e50;
        assert!((0.08..0.2).contains(&ratio), "{e50} {e200}");
        assert!(e200 > 1e-5);
    }

    #[test]
    fn edge_integral_reduces_to_airy_kernel() {
        // 𝔸(0,0) = Ai'(0)²
        let k = airy_kernel_integral(0.0, 0.0, 0.0).unwrap();
        assert_relative_eq!(k.value, 0.066987483779717, epsilon = 1e-12);
        let a = limit_integral_edge(4.0, 1.0, 0.0, 0.0, 0.0, 100.0).unwrap();
        assert_relative_eq!(4f64.powf(2.0 / 3.0) * a.value, 0.066987483779717, epsilon = 1e-10);
        let a20 = limit_integral_edge(4.0, 1.0, 0.0, 0.3, 0.0, 20.0).unwrap().value;
        let a40 = limit_integral_edge(4.0, 1.0, 0.0, 0.3, 0.0, 40.0).unwrap().value;
        assert!((a20 - a40).abs() < 1e-6);
        assert!(limit_integral_edge(4.0, 1.0, 0.0, 1.0, 1.0, 100.0).unwrap().imag_residual.abs() < 1e-10);
    }

    #[test]
    fn domain_checks() {
        assert!(limit_integral_bulk(4.0, 1.0, 0.0, 0.0, 0.0, 10.0).is_err());
        assert!(limit_integral_bulk(2.0, 1.0, 0.0, 0.0, 0.0, 0.5).is_err());
        assert!(limit_integral_edge(2.0, 1.0, 0.0, 0.0, 0.0, 10.0).is_err());
        assert!(limit_integral_edge(0.0, 1.0, 0.0, 0.0, 0.0, 10.0).is_err());
    }
}
