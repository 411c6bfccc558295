//! Complex numbers stored as `(ln|z|, arg z)`.
//!
//! Normalising factors such as `(N ξ)^α e^{-N ξ}` and the generating-function
//! values they multiply leave the double-precision range long before their
//! product does. Everything that can grow like a factorial or an exponential
//! is carried in this form and only exponentiated at the very end.

use std::fmt;
use std::ops::{Div, Mul, Neg};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::mpfloat::BigFloat;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LogComplex {
    /// `ln |z|`; `-inf` encodes zero.
    pub log_abs: f64,
    /// Phase in radians, reduced to `(-π, π]`.
    pub phase: f64,
}

fn reduce_phase(p: f64) -> f64 {
    if p > -std::f64::consts::PI && p <= std::f64::consts::PI {
        return p;
    }
    let tau = std::f64::consts::TAU;
    let mut r = p.rem_euclid(tau);
    if r > std::f64::consts::PI {
        r -= tau;
    }
    r
}

impl LogComplex {
    pub const ZERO: LogComplex = LogComplex { log_abs: f64::NEG_INFINITY, phase: 0.0 };
    pub const ONE: LogComplex = LogComplex { log_abs: 0.0, phase: 0.0 };

    pub fn new(log_abs: f64, phase: f64) -> Self {
        LogComplex { log_abs, phase: reduce_phase(phase) }
    }

    /// `exp(z)` for complex `z`, i.e. the number whose logarithm is `z`.
    pub fn from_log(z: Complex64) -> Self {
        LogComplex::new(z.re, z.im)
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.re == 0.0 && z.im == 0.0 {
            return LogComplex::ZERO;
        }
        LogComplex::new(z.norm().ln(), z.arg())
    }

    pub fn from_real(x: f64) -> Self {
        LogComplex::from_complex(Complex64::new(x, 0.0))
    }

    pub fn from_bigfloat(x: &BigFloat) -> Self {
        if x.is_zero() {
            return LogComplex::ZERO;
        }
        let phase = if x.is_negative() { std::f64::consts::PI } else { 0.0 };
        LogComplex::new(x.ln_abs(), phase)
    }

    pub fn is_zero(&self) -> bool {
        self.log_abs == f64::NEG_INFINITY
    }

    /// Principal logarithm as a complex number.
    pub fn ln(&self) -> Complex64 {
        Complex64::new(self.log_abs, self.phase)
    }

    pub fn to_complex(&self) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar(self.log_abs.exp(), self.phase)
    }

    /// `self · e^{-shift}` as an ordinary complex number.
    pub fn to_complex_scaled(&self, shift: f64) -> Complex64 {
        if self.is_zero() {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar((self.log_abs - shift).exp(), self.phase)
    }

    pub fn conj(&self) -> Self {
        LogComplex::new(self.log_abs, -self.phase)
    }

    pub fn powi(&self, k: i64) -> Self {
        if self.is_zero() {
            return if k == 0 { LogComplex::ONE } else { LogComplex::ZERO };
        }
        LogComplex::new(self.log_abs * k as f64, self.phase * k as f64)
    }

    pub fn recip(&self) -> Self {
        LogComplex::new(-self.log_abs, -self.phase)
    }

    /// `self + other` without leaving log space.
    pub fn add(&self, other: &LogComplex) -> Self {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let shift = self.log_abs.max(other.log_abs);
        let s = self.to_complex_scaled(shift) + other.to_complex_scaled(shift);
        let r = LogComplex::from_complex(s);
        if r.is_zero() {
            return r;
        }
        LogComplex::new(r.log_abs + shift, r.phase)
    }
}

impl Mul for LogComplex {
    type Output = LogComplex;
    fn mul(self, rhs: LogComplex) -> LogComplex {
        if self.is_zero() || rhs.is_zero() {
            return LogComplex::ZERO;
        }
        LogComplex::new(self.log_abs + rhs.log_abs, self.phase + rhs.phase)
    }
}

impl Div for LogComplex {
    type Output = LogComplex;
    fn div(self, rhs: LogComplex) -> LogComplex {
        self * rhs.recip()
    }
}

impl Neg for LogComplex {
    type Output = LogComplex;
    fn neg(self) -> LogComplex {
        LogComplex::new(self.log_abs, self.phase + std::f64::consts::PI)
    }
}

impl fmt::Display for LogComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp({:.12}) * e^(i {:.12})", self.log_abs, self.phase)
    }
}

/// A complex number split into a decimal-safe mantissa and a log scale:
/// `value = mantissa · e^{log_scale}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scaled {
    pub log_scale: f64,
    pub mantissa: Complex64,
}

impl Scaled {
    pub fn new(log_scale: f64, mantissa: Complex64) -> Self {
        Scaled { log_scale, mantissa }
    }

    pub fn to_log(&self) -> LogComplex {
        let l = LogComplex::from_complex(self.mantissa);
        if l.is_zero() {
            return l;
        }
        LogComplex::new(l.log_abs + self.log_scale, l.phase)
    }

    pub fn to_complex(&self) -> Complex64 {
        self.to_log().to_complex()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn add_handles_huge_magnitudes() {
        let a = LogComplex::new(1000.0, 0.0);
        let b = LogComplex::new(1000.0 + 2f64.ln(), 0.0);
        let s = a.add(&b);
        assert_relative_eq!(s.log_abs, 1000.0 + 3f64.ln(), epsilon = 1e-12);
    }

    #[test]
    fn negation_and_cancellation() {
        let a = LogComplex::from_real(2.5);
        let s = a.add(&(-a));
        assert!(s.is_zero() || s.log_abs < -30.0);
        assert_relative_eq!((-a).to_complex().re, -2.5, epsilon = 1e-14);
    }

    #[test]
    fn phase_reduction() {
        let z = LogComplex::new(0.0, 7.0 * std::f64::consts::PI);
        assert_relative_eq!(z.phase.abs(), std::f64::consts::PI, epsilon = 1e-12);
    }
}
