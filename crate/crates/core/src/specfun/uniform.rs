//! Leading-order uniform large-order approximations of `I_α(αz)` and `J_α(αz)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::airy::airy_complex;
use super::maps::{eta_map, sqrt_one_plus_sq, zeta_map, zeta_prefactor};
use crate::error::{Error, Result};
use crate::logcomplex::LogComplex;

/// Default sector margin in radians.
pub const DEFAULT_SECTOR_EPS: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RegionKind {
    /// `|arg z| <= π/2 − ε`, where the exponential form for `I_α` holds.
    PositiveSector,
    /// `|arg z| <= π − ε`, where the Airy-type form for `J_α` holds.
    AiryTransition,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct UniformBesselRegion {
    pub kind: RegionKind,
    pub epsilon: f64,
}

impl UniformBesselRegion {
    pub fn positive_sector() -> Self {
        UniformBesselRegion { kind: RegionKind::PositiveSector, epsilon: DEFAULT_SECTOR_EPS }
    }

    pub fn airy_transition() -> Self {
        UniformBesselRegion { kind: RegionKind::AiryTransition, epsilon: DEFAULT_SECTOR_EPS }
    }

    pub fn max_arg(&self) -> f64 {
        match self.kind {
            RegionKind::PositiveSector => std::f64::consts::FRAC_PI_2 - self.epsilon,
            RegionKind::AiryTransition => std::f64::consts::PI - self.epsilon,
        }
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.norm() > 0.0 && z.arg().abs() <= self.max_arg() + 1e-15
    }

    fn check(&self, z: Complex64, what: &str) -> Result<()> {
        if !self.contains(z) {
            return Err(Error::domain(format!(
                "{what}: z = {z} outside |arg z| <= {:.6}",
                self.max_arg()
            )));
        }
        Ok(())
    }
}

/// `exp(αη) / (√(2πα) (1+z²)^{1/4})` on `|arg z| <= π/2 − ε`.
pub fn bessel_i_uniform(alpha: u32, z: Complex64) -> Result<LogComplex> {
    bessel_i_uniform_in(alpha, z, UniformBesselRegion::positive_sector())
}

pub fn bessel_i_uniform_in(alpha: u32, z: Complex64, region: UniformBesselRegion) -> Result<LogComplex> {
    if alpha == 0 {
        return Err(Error::domain("bessel_i_uniform needs alpha >= 1"));
    }
    region.check(z, "bessel_i_uniform")?;
    let a = alpha as f64;
    let eta = eta_map(z)?.value;
    let s = sqrt_one_plus_sq(z);
    let denom = LogComplex::from_complex((2.0 * std::f64::consts::PI * a).sqrt() * s.sqrt());
    Ok(LogComplex::from_log(a * eta) / denom)
}

/// `(4ζ/(1−z²))^{1/4} Ai(α^{2/3} ζ) / α^{1/3}` on `|arg z| <= π − ε`.
///
/// The `Ai'` correction has no explicit coefficient at this order and is not
/// included; its size `|Ai'(α^{2/3}ζ)| / α^{5/3}` is returned as an error bound.
pub fn bessel_j_uniform_airy(alpha: u32, z: Complex64) -> Result<(LogComplex, f64)> {
    bessel_j_uniform_airy_in(alpha, z, UniformBesselRegion::airy_transition())
}

pub fn bessel_j_uniform_airy_in(
    alpha: u32,
    z: Complex64,
    region: UniformBesselRegion,
) -> Result<(LogComplex, f64)> {
    if alpha == 0 {
        return Err(Error::domain("bessel_j_uniform_airy needs alpha >= 1"));
    }
    region.check(z, "bessel_j_uniform_airy")?;
    let a = alpha as f64;
    let zeta = zeta_map(z)?.value;
    let pref = LogComplex::from_complex(zeta_prefactor(z)?);
    let arg = a.powf(2.0 / 3.0) * zeta;
    let (ai, aip) = airy_complex(arg).map_err(|e| match e {
        Error::Domain(msg) => Error::Precision { context: msg, achieved: f64::INFINITY },
        other => other,
    })?;
    let lead = pref * ai / LogComplex::from_real(a.cbrt());
    let corr = pref * aip / LogComplex::from_real(a.powf(5.0 / 3.0) * (1.0 + zeta.norm().sqrt()));
    let bound = (corr.log_abs - lead.log_abs).exp();
    Ok((lead, bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::bessel::{bessel_i_log, bessel_j};
    use approx::assert_relative_eq;

    fn i_rel_err(alpha: u32, z: Complex64) -> f64 {
        let approx = bessel_i_uniform(alpha, z).unwrap();
        let exact = bessel_i_log(alpha, z * alpha as f64).unwrap().value;
        ((approx / exact).to_complex() - 1.0).norm()
    }

    #[test]
    fn i_uniform_error_is_order_one_over_alpha() {
        let zs = [
            Complex64::new(1.0, 0.0),
            Complex64::new(2.0, 0.0),
            Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4),
        ];
        for z in zs {
            let r = i_rel_err(40, z) / i_rel_err(20, z);
            assert!((0.3..=0.7).contains(&r), "z={z} ratio={r}");
            let r = i_rel_err(20, z) / i_rel_err(10, z);
            assert!((0.3..=0.7).contains(&r), "z={z} ratio={r}");
        }
        assert!(i_rel_err(50, Complex64::new(3.0, 0.0)) < 0.05);
    }

    #[test]
    fn i_uniform_sector_check() {
        assert!(bessel_i_uniform(10, Complex64::new(0.0, 1.0)).is_err());
        assert!(bessel_i_uniform(10, Complex64::from_polar(2.0, 1.53)).is_err());
        assert!(bessel_i_uniform(10, Complex64::from_polar(2.0, 1.5)).is_ok());
    }

    #[test]
    fn j_airy_at_turning_point() {
        let (v, _) = bessel_j_uniform_airy(50, Complex64::new(1.0, 0.0)).unwrap();
        let exact = bessel_j(50, 50.0).unwrap();
        let v = v.to_complex();
        assert!(v.im.abs() < 1e-14);
        assert!(((v.re - exact) / exact).abs() < 0.05);
        // leading value is 2^{1/3} Ai(0) / α^{1/3}
        assert_relative_eq!(v.re, 2f64.cbrt() * 0.35502805388781723926 / 50f64.cbrt(), max_relative = 1e-12);
    }

    #[test]
    fn j_airy_oscillatory_and_decaying_sides() {
        for &(a, x) in &[(100u32, 0.5), (100, 2.0), (200, 0.9), (200, 1.3), (60, 5.0)] {
            let (v, _) = bessel_j_uniform_airy(a, Complex64::new(x, 0.0)).unwrap();
            let exact = bessel_j(a, a as f64 * x).unwrap();
            let v = v.to_complex().re;
            let tol = if x > 1.0 { 0.02 * (a as f64 * x).powf(-0.5) } else { 0.02 * exact.abs() };
            assert!((v - exact).abs() <= tol, "a={a} x={x}: {v} vs {exact}");
        }
    }
}
