//! Configurable-precision real and complex numbers.
//!
//! A thin layer over `dashu_float` fixing the base (2) and rounding mode and
//! adding the handful of conversions the series code needs, most importantly
//! a logarithm that works for values far outside the `f64` range.

use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_float::round::mode::HalfEven;
use dashu_base::{BitTest, UnsignedAbs};
use dashu_float::FBig;
use num_complex::Complex64;

type Inner = FBig<HalfEven, 2>;

/// Default mantissa length in bits.
pub const DEFAULT_PRECISION_BITS: usize = 256;

#[derive(Clone, Debug, PartialEq)]
pub struct BigFloat(Inner);

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat(Inner::ZERO)
    }

    pub fn from_f64(x: f64, prec: usize) -> Self {
        assert!(x.is_finite(), "BigFloat::from_f64 needs a finite value");
        BigFloat(Inner::try_from(x).expect("finite").with_precision(prec).value())
    }

    /// Parses a decimal literal such as `"0.35502805388781723926"`, rounding
    /// once to `prec` bits.
    pub fn from_decimal_str(s: &str, prec: usize) -> Self {
        let d = dashu_float::DBig::from_str(s).expect("decimal literal");
        BigFloat(d.with_base_and_precision::<2>(prec).value().with_rounding())
    }

    pub fn from_i64(x: i64, prec: usize) -> Self {
        BigFloat(Inner::from(x).with_precision(prec).value())
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    pub fn is_zero(&self) -> bool {
        self.0.repr().significand().is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.repr().significand() < &dashu_int::IBig::ZERO
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Nearest `f64`; saturates to `±inf` / `0` outside the double range.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// `ln |x|` as a double, valid for any exponent. Returns `-inf` for zero.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let repr = self.0.repr();
        let sig = repr.significand().clone().unsigned_abs();
        let bits = sig.bit_len();
        // Keep the top 64 bits of the significand; the rest cannot affect an f64 logarithm.
        let drop = bits.saturating_sub(64);
        let top: u64 = (&sig >> drop).try_into().expect("at most 64 bits");
        let e2 = repr.exponent() as f64 + drop as f64;
        (top as f64).ln() + e2 * std::f64::consts::LN_2
    }

    pub fn div_u64(&self, k: u64) -> Self {
        BigFloat(&self.0 / &Inner::from(k))
    }

    pub fn mul_u64(&self, k: u64) -> Self {
        BigFloat(&self.0 * &Inner::from(k))
    }

    pub fn div(&self, other: &BigFloat) -> Self {
        BigFloat(&self.0 / &other.0)
    }

    pub fn mul_f64(&self, x: f64) -> Self {
        if x == 0.0 {
            return BigFloat::zero();
        }
        let prec = self.precision().max(53);
        self * &BigFloat::from_f64(x, prec)
    }

    pub fn add_f64(&self, x: f64) -> Self {
        let prec = self.precision().max(53);
        self + &BigFloat::from_f64(x, prec)
    }
}

impl<'a> Add<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        BigFloat(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        BigFloat(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a BigFloat> for &'a BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        BigFloat(&self.0 * &rhs.0)
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(-self.0)
    }
}

/// Complex number with `BigFloat` parts.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn zero() -> Self {
        BigComplex { re: BigFloat::zero(), im: BigFloat::zero() }
    }

    pub fn from_c64(z: Complex64, prec: usize) -> Self {
        BigComplex { re: BigFloat::from_f64(z.re, prec), im: BigFloat::from_f64(z.im, prec) }
    }

    pub fn from_real(x: BigFloat) -> Self {
        BigComplex { re: x, im: BigFloat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// `|re| + |im|`, a cheap magnitude proxy used for pivoting.
    pub fn l1_ln(&self) -> f64 {
        let a = self.re.ln_abs();
        let b = self.im.ln_abs();
        let m = a.max(b);
        if m == f64::NEG_INFINITY {
            return m;
        }
        m + ((a - m).exp() + (b - m).exp()).ln()
    }

    pub fn add(&self, o: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn mul(&self, o: &BigComplex) -> BigComplex {
        let re = &(&self.re * &o.re) - &(&self.im * &o.im);
        let im = &(&self.re * &o.im) + &(&self.im * &o.re);
        BigComplex { re, im }
    }

    pub fn div(&self, o: &BigComplex) -> BigComplex {
        let den = &(&o.re * &o.re) + &(&o.im * &o.im);
        let re = &(&self.re * &o.re) + &(&self.im * &o.im);
        let im = &(&self.im * &o.re) - &(&self.re * &o.im);
        BigComplex { re: re.div(&den), im: im.div(&den) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ln_abs_beyond_double_range() {
        let mut x = BigFloat::from_i64(10, 256);
        let ten = BigFloat::from_i64(10, 256);
        for _ in 0..999 {
            x = &x * &ten;
        }
        assert!(x.to_f64().is_infinite());
        assert_relative_eq!(x.ln_abs(), 1000.0 * 10f64.ln(), max_relative = 1e-15);
        assert_relative_eq!((-x).ln_abs(), 1000.0 * 10f64.ln(), max_relative = 1e-15);
    }

    #[test]
    fn decimal_literal() {
        let x = BigFloat::from_decimal_str("0.1", 200);
        let ten = BigFloat::from_i64(10, 200);
        let one = &x * &ten;
        assert!((&one - &BigFloat::from_i64(1, 200)).ln_abs() < -130.0);
    }

    #[test]
    fn cancellation_is_resolved_with_enough_bits() {
        let big = BigFloat::from_f64(1e30, 256);
        let one = BigFloat::from_i64(1, 256);
        let s = &(&big + &one) - &big;
        assert_eq!(s.to_f64(), 1.0);
    }

    #[test]
    fn complex_division_roundtrip() {
        let a = BigComplex::from_c64(Complex64::new(1.5, -2.0), 200);
        let b = BigComplex::from_c64(Complex64::new(0.25, 3.0), 200);
        let q = a.mul(&b).div(&b).to_c64();
        assert_relative_eq!(q.re, 1.5, epsilon = 1e-15);
        assert_relative_eq!(q.im, -2.0, epsilon = 1e-15);
    }
}
