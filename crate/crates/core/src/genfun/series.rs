//! Coefficient extraction by truncated power-series arithmetic in extended
//! precision.

use crate::error::{Error, Result};
use crate::logcomplex::LogComplex;
use crate::mpfloat::{BigFloat, DEFAULT_PRECISION_BITS};

use super::{GfCoefficient, GfParams};

/// Guard terms kept beyond the requested coefficient.
pub const GUARD_TERMS: usize = 16;
/// Extra bits of the confirming run.
const CHECK_BITS: usize = 64;
/// Relative disagreement between the two runs above which the result is rejected.
pub const SERIES_TOL: f64 = 1e-12;
const MAX_BITS: usize = 1 << 16;
/// Precision at which a result below the rounding level is accepted as zero.
pub const ZERO_BITS: usize = 4096;

/// Truncated power series `Σ_{k ≤ order} c_k z^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    pub coeffs: Vec<BigFloat>,
    prec: usize,
}

impl PowerSeries {
    pub fn zero(order: usize, prec: usize) -> Self {
        PowerSeries { coeffs: vec![BigFloat::from_i64(0, prec); order + 1], prec }
    }

    pub fn from_f64(cs: &[f64], order: usize, prec: usize) -> Self {
        let mut s = PowerSeries::zero(order, prec);
        for (c, &x) in s.coeffs.iter_mut().zip(cs) {
            *c = BigFloat::from_f64(x, prec);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigFloat {
        &self.coeffs[k]
    }

    pub fn add(&self, o: &PowerSeries) -> PowerSeries {
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        PowerSeries { coeffs, prec: self.prec }
    }

    pub fn scale(&self, x: &BigFloat) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c * x).collect(), prec: self.prec }
    }

    /// The `k`-th coefficient of `self · o`.
    pub fn product_coeff(&self, o: &PowerSeries, k: usize) -> BigFloat {
        let mut acc = BigFloat::from_i64(0, self.prec);
        for i in 0..=k {
            acc = &acc + &(&self.coeffs[i] * &o.coeffs[k - i]);
        }
        acc
    }

    pub fn mul(&self, o: &PowerSeries) -> PowerSeries {
        let order = self.order().min(o.order());
        PowerSeries { coeffs: (0..=order).map(|k| self.product_coeff(o, k)).collect(), prec: self.prec }
    }

    /// `exp(self)` for a series without constant term, from `k e_k = Σ j p_j e_{k−j}`.
    pub fn exp(&self) -> Result<PowerSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::validation("PowerSeries::exp needs a zero constant term"));
        }
        let n = self.order();
        let mut e = vec![BigFloat::from_i64(1, self.prec)];
        for k in 1..=n {
            let mut acc = BigFloat::from_i64(0, self.prec);
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = &acc + &(&self.coeffs[j].mul_u64(j as u64) * &e[k - j]);
                }
            }
            e.push(acc.div_u64(k as u64));
        }
        Ok(PowerSeries { coeffs: e, prec: self.prec })
    }

    /// `self(z/(1−z))`; `[z^n] (z/(1−z))^k = C(n−1, n−k)`.
    pub fn compose_z_over_one_minus_z(&self) -> PowerSeries {
        let n_max = self.order();
        let mut out = PowerSeries::zero(n_max, self.prec);
        out.coeffs[0] = self.coeffs[0].clone();
        for n in 1..=n_max {
            // C(n−1, n−k) for k = n, n−1, ..., 1
            let mut binom = BigFloat::from_i64(1, self.prec);
            let mut acc = BigFloat::from_i64(0, self.prec);
            for k in (1..=n).rev() {
                acc = &acc + &(&binom * &self.coeffs[k]);
                if k > 1 {
                    binom = binom.mul_u64((k - 1) as u64).div_u64((n - k + 1) as u64);
                }
            }
            out.coeffs[n] = acc;
        }
        out
    }
}

/// `exp(−(μ+ν) z/(1−z) + b* z)` through degree `order`.
fn exponential_factor(p: &GfParams, order: usize, prec: usize) -> Result<PowerSeries> {
    let inner = PowerSeries::from_f64(&[0.0, -(p.mu + p.nu)], order, prec).compose_z_over_one_minus_z();
    let linear = PowerSeries::from_f64(&[0.0, p.b_star], order, prec);
    inner.add(&linear).exp()
}

/// `F_α(4μνz/(1−z)²)(1−z)^{−s}` through degree `order`:
/// `[z^k] = Σ_j c_j C(k+j+s−1, k−j)` with `c_j = (μν)^j / (j!(j+α)!)`.
fn bessel_factor(p: &GfParams, order: usize, prec: usize) -> PowerSeries {
    let s = p.pole_order();
    let prod = BigFloat::from_f64(p.mu * p.nu, prec);
    let mut c = Vec::with_capacity(order + 1);
    let mut cj = BigFloat::from_i64(1, prec);
    for k in 2..=p.alpha as u64 {
        cj = cj.div_u64(k);
    }
    for j in 0..=order as u64 {
        c.push(cj.clone());
        cj = (&cj * &prod).div_u64(j + 1).div_u64(j + 1 + p.alpha as u64);
    }
    let mut out = PowerSeries::zero(order, prec);
    // C(k+s−1, k), advanced in k
    let mut lead = BigFloat::from_i64(1, prec);
    for k in 0..=order as u64 {
        if k > 0 {
            lead = lead.mul_u64(k + s - 1).div_u64(k);
        }
        let mut binom = lead.clone();
        let mut acc = BigFloat::from_i64(0, prec);
        for j in 0..=k {
            acc = &acc + &(&c[j as usize] * &binom);
            if j < k {
                binom = binom.mul_u64((k + j + s) * (k - j)).div_u64((2 * j + s) * (2 * j + s + 1));
            }
        }
        out.coeffs[k as usize] = acc;
    }
    out
}

/// The coefficient at `prec` bits and the log of the largest summand.
fn coefficient_at(p: &GfParams, m: usize, prec: usize) -> Result<(BigFloat, f64)> {
    let order = m + GUARD_TERMS;
    let e = exponential_factor(p, order, prec)?;
    let b = bessel_factor(p, order, prec);
    let mut acc = BigFloat::from_i64(0, prec);
    let mut scale = f64::NEG_INFINITY;
    for i in 0..=m {
        let t = &e.coeffs[i] * &b.coeffs[m - i];
        scale = scale.max(t.ln_abs());
        acc = &acc + &t;
    }
    Ok((acc, scale))
}

fn check_params(p: &GfParams, bits: usize) -> Result<()> {
    if !(p.mu.is_finite() && p.nu.is_finite() && p.b_star.is_finite()) {
        return Err(Error::validation("generating-function parameters must be finite"));
    }
    if bits < 64 {
        return Err(Error::validation(format!("precision of {bits} bits is below the 64-bit minimum")));
    }
    Ok(())
}

/// `[z^m] G(z) = f(m+α, m; μ, ν)/((m+α)! m!)` at `bits` bits of working
/// precision, confirmed by a second run with 64 more bits.
///
/// A result below the rounding level of the largest summand is a precision
/// error; at [`ZERO_BITS`] or more it is returned as an exact zero instead (the
/// determinant product can vanish identically, e.g. for Rademacher entries at
/// `μ = ν = 1`).
pub fn gf_coefficient_series(p: &GfParams, m: usize, bits: usize) -> Result<GfCoefficient> {
    check_params(p, bits)?;
    let (a, scale) = coefficient_at(p, m, bits)?;
    let (b, _) = coefficient_at(p, m, bits + CHECK_BITS)?;
    let noise = scale - (bits as f64 - 24.0) * std::f64::consts::LN_2;
    if b.ln_abs() <= noise && a.ln_abs() <= noise {
        if bits >= ZERO_BITS {
            return Ok(GfCoefficient { value: LogComplex::ZERO, rel_err: 0.0 });
        }
        return Err(Error::Precision {
            context: format!("series coefficient m={m}, alpha={} is below the rounding level at {bits} bits", p.alpha),
            achieved: f64::INFINITY,
        });
    }
    let rel_err = ((&a - &b).ln_abs() - b.ln_abs()).exp();
    if !(rel_err <= SERIES_TOL) {
        return Err(Error::Precision {
            context: format!("series coefficient m={m}, alpha={} at {bits} bits", p.alpha),
            achieved: rel_err,
        });
    }
    Ok(GfCoefficient { value: LogComplex::from_bigfloat(&b), rel_err })
}

/// As [`gf_coefficient_series`], doubling the precision from 256 bits until
/// the two runs agree.
pub fn gf_coefficient_series_auto(p: &GfParams, m: usize) -> Result<GfCoefficient> {
    gf_coefficient_series_from(p, m, DEFAULT_PRECISION_BITS)
}

/// As [`gf_coefficient_series_auto`] with a caller-chosen starting precision.
pub fn gf_coefficient_series_from(p: &GfParams, m: usize, start_bits: usize) -> Result<GfCoefficient> {
    let mut bits = start_bits.max(64);
    loop {
        match gf_coefficient_series(p, m, bits) {
            Err(Error::Precision { .. }) if bits < MAX_BITS => bits *= 2,
            r => return r,
        }
    }
}
