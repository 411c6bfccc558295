//! Airy function `Ai` and its derivative for real and complex arguments.
//!
//! For `|z| <= 8` the Maclaurin series is summed in 192-bit arithmetic, which
//! absorbs the `exp(4/3 |z|^{3/2})` cancellation on the decaying side. Beyond
//! that the standard asymptotic expansions are used: the exponentially small
//! form for `|arg z| <= 2π/3` and the oscillatory form on the negative axis.
//! At the switch radius the asymptotic series is truncated at its smallest
//! term, which is about `exp(-2·(2/3)·8^{3/2}) ≈ 1e-13` in relative terms.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::logcomplex::LogComplex;
use crate::mpfloat::{BigComplex, BigFloat};

/// Largest `|z|` accepted by the Airy routines.
pub const AIRY_MAX_ABS: f64 = 1.0e8;

/// Radius of the Maclaurin disc.
const SERIES_RADIUS: f64 = 8.0;
const SERIES_BITS: usize = 192;

const AI0: &str = "0.355028053887817239260063186004183176397979174";
const MINUS_AIP0: &str = "0.258819403792806798405183560189203963479091138";

/// `(Ai(z), Ai'(z))` by Maclaurin series in extended precision.
fn airy_series(z: Complex64) -> (Complex64, Complex64) {
    let prec = SERIES_BITS;
    let c1 = BigFloat::from_decimal_str(AI0, prec);
    let c2 = BigFloat::from_decimal_str(MINUS_AIP0, prec);
    let x = BigComplex::from_c64(z, prec);
    let x2 = x.mul(&x);
    let x3 = x2.mul(&x);
    let one = BigComplex::from_real(BigFloat::from_i64(1, prec));

    // f = Σ t_k, g = Σ u_k, f' = Σ d_k, g' = Σ e_k
    let mut t = one.clone();
    let mut u = x.clone();
    let mut d = BigComplex::from_real(BigFloat::zero());
    let mut e = one.clone();
    let mut f = t.clone();
    let mut g = u.clone();
    let mut fp = BigComplex::from_real(BigFloat::zero());
    let mut gp = e.clone();
    let cutoff = -(prec as f64) * std::f64::consts::LN_2 - 5.0;
    let mut k: u64 = 0;
    loop {
        let a = 3 * k;
        t = scale_div(&t.mul(&x3), (a + 2) * (a + 3));
        u = scale_div(&u.mul(&x3), (a + 3) * (a + 4));
        if k == 0 {
            d = scale_div(&x2, 2);
        } else {
            d = scale_div(&d.mul(&x3).mul_u64(k + 1), k * (a + 2) * (a + 3));
        }
        e = scale_div(&e.mul(&x3), (a + 1) * (a + 3));
        f = f.add(&t);
        g = g.add(&u);
        fp = fp.add(&d);
        gp = gp.add(&e);
        k += 1;
        let small = t.l1_ln().max(u.l1_ln()).max(d.l1_ln()).max(e.l1_ln());
        let big = f.l1_ln().max(g.l1_ln()).max(fp.l1_ln()).max(gp.l1_ln()).max(0.0);
        if (small - big < cutoff) || small == f64::NEG_INFINITY || k > 400 {
            break;
        }
    }
    let c1c = BigComplex::from_real(c1);
    let c2c = BigComplex::from_real(c2);
    let ai = c1c.mul(&f).sub(&c2c.mul(&g));
    let aip = c1c.mul(&fp).sub(&c2c.mul(&gp));
    (ai.to_c64(), aip.to_c64())
}

fn scale_div(z: &BigComplex, k: u64) -> BigComplex {
    BigComplex { re: z.re.div_u64(k), im: z.im.div_u64(k) }
}

trait MulU64 {
    fn mul_u64(&self, k: u64) -> Self;
}

impl MulU64 for BigComplex {
    fn mul_u64(&self, k: u64) -> Self {
        BigComplex { re: self.re.mul_u64(k), im: self.im.mul_u64(k) }
    }
}

/// Coefficients `u_k` of the Airy asymptotic expansions and `v_k` for `Ai'`.
fn asymptotic_coeffs(kmax: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = vec![1.0];
    let mut v = vec![1.0];
    for k in 1..=kmax {
        let kf = k as f64;
        let uk = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(uk);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * uk);
    }
    (u, v)
}

/// `(Ai(z), Ai'(z))` from the asymptotic expansions, valid for `|z| > 8`.
fn airy_asymptotic(z: Complex64) -> (LogComplex, LogComplex) {
    let (u, v) = asymptotic_coeffs(60);
    let sqrt_pi = std::f64::consts::PI.sqrt();
    if z.arg().abs() <= 2.0 * std::f64::consts::FRAC_PI_3 {
        let zeta = z.powf(1.5) * (2.0 / 3.0);
        let z14 = z.powf(0.25);
        let su = series_minimal(&u, -zeta.inv());
        let sv = series_minimal(&v, -zeta.inv());
        let base = LogComplex::from_log(-zeta);
        let ai = base * LogComplex::from_complex(su / (2.0 * sqrt_pi * z14));
        let aip = base * LogComplex::from_complex(-sv * z14 / (2.0 * sqrt_pi));
        (ai, aip)
    } else {
        let w = -z;
        let zeta = w.powf(1.5) * (2.0 / 3.0);
        let w14 = w.powf(0.25);
        let theta = zeta - std::f64::consts::FRAC_PI_4;
        let s = theta.im.abs();
        let i = Complex64::new(0.0, 1.0);
        let e1 = (i * theta - s).exp();
        let e2 = (-i * theta - s).exp();
        let cos_s = (e1 + e2) * 0.5;
        let sin_s = (e1 - e2) / (2.0 * i);
        let uo = odd_sum(&u, zeta);
        let vo = odd_sum(&v, zeta);
        let ue = even_sum(&u, zeta);
        let ve = even_sum(&v, zeta);
        let ai = (cos_s * ue + sin_s * uo) / (sqrt_pi * w14);
        let aip = (sin_s * ve - cos_s * vo) * w14 / sqrt_pi;
        let scale = LogComplex::new(s, 0.0);
        (scale * LogComplex::from_complex(ai), scale * LogComplex::from_complex(aip))
    }
}

/// `Σ c_k x^k` truncated at the smallest term.
fn series_minimal(c: &[f64], x: Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut p = Complex64::new(1.0, 0.0);
    let mut prev = f64::INFINITY;
    for &ck in c {
        let term = p * ck;
        let mag = term.norm();
        if mag > prev {
            break;
        }
        sum += term;
        if mag < 1e-18 * sum.norm() {
            break;
        }
        prev = mag;
        p *= x;
    }
    sum
}

/// `Σ_k (-1)^k c_{2k} ζ^{-2k}` truncated at the smallest term.
fn even_sum(c: &[f64], zeta: Complex64) -> Complex64 {
    let even: Vec<f64> = c.iter().step_by(2).copied().collect();
    series_minimal(&even, -(zeta * zeta).inv())
}

/// `Σ_k (-1)^k c_{2k+1} ζ^{-2k-1}` truncated at the smallest term.
fn odd_sum(c: &[f64], zeta: Complex64) -> Complex64 {
    let odd: Vec<f64> = c.iter().skip(1).step_by(2).copied().collect();
    series_minimal(&odd, -(zeta * zeta).inv()) / zeta
}

fn check_range(z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() || z.norm() > AIRY_MAX_ABS {
        return Err(Error::domain(format!("Airy argument {z} outside |z| <= {AIRY_MAX_ABS:e}")));
    }
    Ok(())
}

/// `(Ai(z), Ai'(z))` in log-scaled form; never overflows or underflows.
pub fn airy_complex(z: Complex64) -> Result<(LogComplex, LogComplex)> {
    check_range(z)?;
    if z.norm() <= SERIES_RADIUS {
        let (a, b) = airy_series(z);
        Ok((LogComplex::from_complex(a), LogComplex::from_complex(b)))
    } else {
        Ok(airy_asymptotic(z))
    }
}

/// `(Ai(x), Ai'(x))` for real `x`.
pub fn airy_pair(x: f64) -> Result<(f64, f64)> {
    let (a, b) = airy_complex(Complex64::new(x, 0.0))?;
    Ok((a.to_complex().re, b.to_complex().re))
}

pub fn airy_ai(x: f64) -> Result<f64> {
    airy_pair(x).map(|p| p.0)
}

pub fn airy_ai_prime(x: f64) -> Result<f64> {
    airy_pair(x).map(|p| p.1)
}
