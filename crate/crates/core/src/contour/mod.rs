//! Coefficient extraction along a five-piece contour pinched towards `z = 1`,
//! and the limiting integrals that arise as `N → ∞`.
//!
//! With `g = N^{−η}`, `R = 1 − g` and `θ₀ = a g`:
//! - `σ₀`: the arc `|z| = R`, `−θ₀ ≤ arg z ≤ θ₀`;
//! - `σ±1`: radial segments from `R e^{±iθ₀}` to `e^{±iθ₀}`;
//! - `σ±2`: unit-circle arcs from `e^{±iθ₀}` to `−1`.

pub mod limits;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::{gf_rhs, gf_rhs_log_with, GfParams};
use crate::logcomplex::LogComplex;
use crate::quadrature::{integrate, QuadOptions};

pub use limits::{
    airy_kernel_integral, laplace_inversion_closed_form, laplace_inversion_numeric, limit_integral_bulk,
    limit_integral_edge, s_infinity_closed_form, LimitIntegral,
};

/// Pinch exponent for bulk points.
pub const ETA_BULK: f64 = 1.0;
/// Pinch exponent for edge points.
pub const ETA_EDGE: f64 = 1.0 / 3.0;
/// Estimated relative error accepted when some segment hit the depth limit.
pub const ACCEPT_REL_ERR: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SegmentId {
    Minus2,
    Minus1,
    Zero,
    Plus1,
    Plus2,
}

impl SegmentId {
    pub const ALL: [SegmentId; 5] = [SegmentId::Zero, SegmentId::Plus1, SegmentId::Plus2, SegmentId::Minus2, SegmentId::Minus1];

    pub fn index(self) -> i8 {
        match self {
            SegmentId::Minus2 => -2,
            SegmentId::Minus1 => -1,
            SegmentId::Zero => 0,
            SegmentId::Plus1 => 1,
            SegmentId::Plus2 => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContourSpec {
    /// `N`, which sets the pinch scale `N^{−η}`.
    pub n: usize,
    pub eta: f64,
    /// Half-opening of `σ₀` in units of `N^{−η}`.
    pub a: f64,
    pub quad: QuadOptions,
}

impl ContourSpec {
    pub fn new(n: usize, eta: f64, a: f64) -> Result<Self> {
        let s = ContourSpec { n, eta, a, quad: QuadOptions::default() };
        s.validate()?;
        Ok(s)
    }

    /// `a = max(2, N^η/2)`, so `σ₀` opens to about half a radian for large `N`.
    pub fn with_default_a(n: usize, eta: f64) -> Result<Self> {
        let a = 2f64.max(0.5 * (n as f64).powf(eta));
        ContourSpec::new(n, eta, a)
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::validation(format!("contour needs N >= 2, got {}", self.n)));
        }
        if !(self.eta > 0.0 && self.eta <= 1.0) {
            return Err(Error::validation(format!("eta must lie in (0, 1], got {}", self.eta)));
        }
        if !(self.a > 1.0) || !(self.opening() < std::f64::consts::PI) {
            return Err(Error::validation(format!(
                "need a > 1 and a N^-eta < pi, got a = {} (angle {})",
                self.a,
                self.opening()
            )));
        }
        Ok(())
    }

    /// `N^{−η} = 1 − R`.
    pub fn gap(&self) -> f64 {
        (self.n as f64).powf(-self.eta)
    }

    /// `θ₀ = a N^{−η}`.
    pub fn opening(&self) -> f64 {
        self.a * self.gap()
    }

    /// Parameter interval of a segment.
    fn range(&self, id: SegmentId) -> (f64, f64) {
        let th = self.opening();
        match id {
            SegmentId::Zero => (-th, th),
            SegmentId::Plus1 | SegmentId::Minus1 => (0.0, self.gap()),
            SegmentId::Plus2 => (th, std::f64::consts::PI),
            SegmentId::Minus2 => (-std::f64::consts::PI, -th),
        }
    }

    /// `(ln z, 1 − z, dz/du)` at parameter `u`, oriented so that the segments
    /// sum to the positively oriented closed contour.
    fn point(&self, id: SegmentId, u: f64) -> (Complex64, Complex64, Complex64) {
        let g = self.gap();
        let th = self.opening();
        let on_circle = |r_ln: f64, one_minus_r: f64, t: f64| {
            let r = r_ln.exp();
            let s = (0.5 * t).sin();
            let lnz = Complex64::new(r_ln, t);
            let omz = Complex64::new(one_minus_r + 2.0 * r * s * s, -r * t.sin());
            (lnz, omz)
        };
        match id {
            SegmentId::Zero => {
                let (lnz, omz) = on_circle((-g).ln_1p(), g, u);
                (lnz, omz, Complex64::i() * lnz.exp())
            }
            SegmentId::Plus2 | SegmentId::Minus2 => {
                let (lnz, omz) = on_circle(0.0, 0.0, u);
                (lnz, omz, Complex64::i() * lnz.exp())
            }
            SegmentId::Plus1 | SegmentId::Minus1 => {
                // u = 1 − |z|; the outward (+1) and inward (−1) orientations
                // both come out as +e^{iθ} and −e^{−iθ} with respect to u
                let t = if id == SegmentId::Plus1 { th } else { -th };
                let (lnz, omz) = on_circle((-u).ln_1p(), u, t);
                let dir = Complex64::from_polar(1.0, t);
                (lnz, omz, if id == SegmentId::Plus1 { dir } else { -dir })
            }
        }
    }
}

/// `ln(G(z) z^{−m−1})`.
pub fn integrand_log(p: &GfParams, m: usize, z: Complex64) -> Result<LogComplex> {
    if z.norm() == 0.0 {
        return Err(Error::Singularity("contour integrand evaluated at z = 0".into()));
    }
    Ok(gf_rhs(p, z)? * LogComplex::from_log(-(m as f64 + 1.0) * z.ln()))
}

fn integrand_log_at(p: &GfParams, m: usize, lnz: Complex64, omz: Complex64) -> Result<LogComplex> {
    let g = gf_rhs_log_with(p, lnz.exp(), omz)?;
    Ok(g * LogComplex::from_log(-(m as f64 + 1.0) * lnz))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SegmentReport {
    pub id: SegmentId,
    /// `(1/2πi)∫_segment G(z) z^{−m−1} dz`.
    pub value: LogComplex,
    /// Absolute error estimate on the same scale, as `ln |err|`.
    pub log_err: f64,
    pub evals: usize,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ContourResult {
    /// Real part of the closed-contour integral.
    pub value: LogComplex,
    pub rel_err: f64,
    /// `|Im| / |total|`, which vanishes for the exact coefficient.
    pub imag_residual: f64,
    pub segments: Vec<SegmentReport>,
}

impl ContourResult {
    pub fn to_f64(&self) -> f64 {
        self.value.to_complex().re
    }
}

/// `(1/2πi)∮_σ G(z) z^{−m−1} dz = f(m+α, m; μ, ν)/((m+α)! m!)`.
pub fn contour_correlation(p: &GfParams, m: usize, spec: &ContourSpec) -> Result<ContourResult> {
    spec.validate()?;
    let two_pi_i = Complex64::new(0.0, std::f64::consts::TAU);

    // common scale: the largest |integrand · dz/du| over a sample of each segment
    let mut shift = f64::NEG_INFINITY;
    for id in SegmentId::ALL {
        let (lo, hi) = spec.range(id);
        for k in 0..=64 {
            let u = lo + (hi - lo) * k as f64 / 64.0;
            let (lnz, omz, dz) = spec.point(id, u);
            if omz.norm() == 0.0 {
                continue;
            }
            let v = integrand_log_at(p, m, lnz, omz)?;
            shift = shift.max(v.log_abs + dz.norm().ln());
        }
    }
    if !shift.is_finite() {
        return Err(Error::Precision { context: "contour integrand vanishes on the sample".into(), achieved: f64::INFINITY });
    }

    let run = |abs_tol: f64| -> Result<Vec<(SegmentId, crate::quadrature::QuadResult)>> {
        let opts = QuadOptions { abs_tol, ..spec.quad };
        SegmentId::ALL
            .iter()
            .map(|&id| {
                let (lo, hi) = spec.range(id);
                let f = |u: f64| {
                    let (lnz, omz, dz) = spec.point(id, u);
                    let v = integrand_log_at(p, m, lnz, omz)?;
                    Ok(v.to_complex_scaled(shift) * dz / two_pi_i)
                };
                Ok((id, integrate(f, lo, hi, opts)?))
            })
            .collect()
    };

    let mut abs_tol = spec.quad.abs_tol;
    let mut parts = run(abs_tol)?;
    for _ in 0..4 {
        let total: Complex64 = parts.iter().map(|(_, r)| r.value).sum();
        let want = spec.quad.rel_tol * total.norm();
        if abs_tol <= want || want == 0.0 {
            break;
        }
        // the closed-contour total is much smaller than the integrand: tighten
        abs_tol = want;
        parts = run(abs_tol)?;
    }

    let total: Complex64 = parts.iter().map(|(_, r)| r.value).sum();
    let err: f64 = parts.iter().map(|(_, r)| r.err).sum();
    let mag = total.norm();
    let rel_err = if mag > 0.0 { err / mag } else { f64::INFINITY };
    let converged = parts.iter().all(|(_, r)| r.converged) || rel_err <= ACCEPT_REL_ERR;
    let segments = parts
        .iter()
        .map(|(id, r)| SegmentReport {
            id: *id,
            value: LogComplex::new(r.value.norm().ln() + shift, r.value.arg()),
            log_err: r.err.ln() + shift,
            evals: r.evals,
            converged: r.converged,
        })
        .collect();
    let value = {
        let l = LogComplex::from_real(total.re);
        if l.is_zero() { l } else { LogComplex::new(l.log_abs + shift, l.phase) }
    };
    if !converged {
        return Err(Error::Precision {
            context: format!(
                "contour quadrature did not converge (best estimate {value}, m={m}, alpha={})",
                p.alpha
            ),
            achieved: rel_err,
        });
    }
    Ok(ContourResult { value, rel_err, imag_residual: if mag > 0.0 { total.im.abs() / mag } else { 0.0 }, segments })
}
