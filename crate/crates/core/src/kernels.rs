//! The sine kernels `𝕊`, `𝕊̃` and the Airy kernels `𝔸`, `𝔸̃`.
//!
//! Each kernel is a difference quotient in `d = x − y`. For `|d| < δ` it is
//! evaluated from its Taylor expansion in `d` about the midpoint instead.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::airy_pair;

/// Switch radius for the diagonal expansion.
pub const DIAGONAL_DELTA: f64 = 1e-3;
/// Degree in `d` kept on the diagonal.
const DIAGONAL_DEGREE: usize = 8;
/// Taylor degree of `Ai` about the midpoint; the kernel numerators need
/// `DIAGONAL_DEGREE + 3`.
const AIRY_DEGREE: usize = DIAGONAL_DEGREE + 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelId {
    /// `sin πd / (πd)`.
    Sine,
    /// `2 sin πd / (π d³) − 2 cos πd / d²`.
    SineTilde,
    /// `(Ai(x)Ai′(y) − Ai′(x)Ai(y)) / (x − y)`.
    Airy,
    /// `(2Ai(x)Ai′(y) − 2Ai′(x)Ai(y))/(x−y)³ + ((x+y)Ai(x)Ai(y) − 2Ai′(x)Ai′(y))/(x−y)²`.
    AiryTilde,
}

impl KernelId {
    pub const ALL: [KernelId; 4] = [KernelId::Sine, KernelId::SineTilde, KernelId::Airy, KernelId::AiryTilde];

    pub fn name(self) -> &'static str {
        match self {
            KernelId::Sine => "sine",
            KernelId::SineTilde => "sine-tilde",
            KernelId::Airy => "airy",
            KernelId::AiryTilde => "airy-tilde",
        }
    }
}

impl fmt::Display for KernelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        KernelId::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::validation(format!("unknown kernel '{s}' (expected sine, sine-tilde, airy or airy-tilde)")))
    }
}

/// `(sin πd, cos πd)` with exact zeros at integers.
fn sin_cos_pi(d: f64) -> (f64, f64) {
    let n = d.round();
    let (s, c) = (PI * (d - n)).sin_cos();
    if n.rem_euclid(2.0) == 0.0 {
        (s, c)
    } else {
        (-s, -c)
    }
}

fn sine(d: f64) -> f64 {
    if d.abs() < DIAGONAL_DELTA {
        // Σ (−1)^k (πd)^{2k} / (2k+1)!
        let x2 = (PI * d).powi(2);
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
    }
    sin_cos_pi(d).0 / (PI * d)
}

fn sine_tilde(d: f64) -> f64 {
    if d.abs() < DIAGONAL_DELTA {
        // 2π² Σ_{k≥1} (−1)^{k+1} 2k/(2k+1)! (πd)^{2k−2}
        let x2 = (PI * d).powi(2);
        let mut term = 1.0;
        let mut fact = 6.0; // (2k+1)!
        let mut sum = 0.0;
        for k in 1..=5u32 {
            let k2 = 2.0 * k as f64;
            sum += term * k2 / fact;
            term *= -x2;
            fact *= (k2 + 2.0) * (k2 + 3.0);
        }
        return 2.0 * PI * PI * sum;
    }
    let (s, c) = sin_cos_pi(d);
    2.0 * s / (PI * d * d * d) - 2.0 * c / (d * d)
}

type Poly = Vec<f64>;

fn poly_mul(a: &[f64], b: &[f64], deg: usize) -> Poly {
    let mut out = vec![0.0; deg + 1];
    for (i, x) in a.iter().enumerate().take(deg + 1) {
        for (j, y) in b.iter().enumerate().take(deg + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_eval(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Coefficients of `Ai(c + t)` in `t`, from `Ai⁽ᵏ⁺²⁾ = c Ai⁽ᵏ⁾ + k Ai⁽ᵏ⁻¹⁾`.
fn airy_taylor(c: f64) -> Result<Poly> {
    let (ai, aip) = airy_pair(c)?;
    let mut d = vec![ai, aip];
    for k in 0..AIRY_DEGREE - 1 {
        let prev = if k == 0 { 0.0 } else { d[k - 1] };
        d.push(c * d[k] + k as f64 * prev);
    }
    let mut fact = 1.0;
    Ok(d
        .iter()
        .enumerate()
        .map(|(k, v)| {
            if k > 0 {
                fact *= k as f64;
            }
            v / fact
        })
        .collect())
}

/// `Ai(c ± d/2)` and `Ai′(c ± d/2)` as polynomials in `d`.
fn airy_sides(c: f64) -> Result<[Poly; 4]> {
    let p = airy_taylor(c)?;
    let dp: Poly = (1..p.len()).map(|k| k as f64 * p[k]).collect();
    let scale = |q: &Poly, s: f64| -> Poly { q.iter().enumerate().map(|(k, v)| v * (0.5 * s).powi(k as i32)).collect() };
    Ok([scale(&p, 1.0), scale(&dp, 1.0), scale(&p, -1.0), scale(&dp, -1.0)])
}

/// Numerator of `𝔸`, `Ai(x)Ai′(y) − Ai′(x)Ai(y)`, as a polynomial in `d`.
fn airy_numerator(sides: &[Poly; 4], deg: usize) -> Poly {
    let [x0, x1, y0, y1] = sides;
    let a = poly_mul(x0, y1, deg);
    let b = poly_mul(x1, y0, deg);
    a.iter().zip(&b).map(|(u, v)| u - v).collect()
}

fn airy(x: f64, y: f64) -> Result<f64> {
    let d = x - y;
    if d.abs() < DIAGONAL_DELTA {
        let sides = airy_sides(0.5 * (x + y))?;
        let num = airy_numerator(&sides, DIAGONAL_DEGREE + 1);
        return Ok(poly_eval(&num[1..], d));
    }
    let (ax, apx) = airy_pair(x)?;
    let (ay, apy) = airy_pair(y)?;
    Ok((ax * apy - apx * ay) / d)
}

fn airy_tilde(x: f64, y: f64) -> Result<f64> {
    let d = x - y;
    if d.abs() < DIAGONAL_DELTA {
        let c = 0.5 * (x + y);
        let sides = airy_sides(c)?;
        let deg = DIAGONAL_DEGREE + 3;
        let n1 = airy_numerator(&sides, deg);
        let [x0, x1, y0, y1] = &sides;
        let p00 = poly_mul(x0, y0, deg);
        let p11 = poly_mul(x1, y1, deg);
        // 2·N₁ + d·(2c·Ai(x)Ai(y) − 2Ai′(x)Ai′(y)), then divide by d³
        let mut num = vec![0.0; deg + 1];
        for k in 0..=deg {
            num[k] += 2.0 * n1[k];
            if k < deg {
                num[k + 1] += 2.0 * c * p00[k] - 2.0 * p11[k];
            }
        }
        return Ok(poly_eval(&num[3..], d));
    }
    let (ax, apx) = airy_pair(x)?;
    let (ay, apy) = airy_pair(y)?;
    Ok((2.0 * ax * apy - 2.0 * apx * ay) / (d * d * d) + ((x + y) * ax * ay - 2.0 * apx * apy) / (d * d))
}

/// Evaluates kernel `id` at `(x, y)`.
pub fn kernel_eval(id: KernelId, x: f64, y: f64) -> Result<f64> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::domain(format!("kernel arguments must be finite, got ({x}, {y})")));
    }
    match id {
        KernelId::Sine => Ok(sine(x - y)),
        KernelId::SineTilde => Ok(sine_tilde(x - y)),
        KernelId::Airy => airy(x, y),
        KernelId::AiryTilde => airy_tilde(x, y),
    }
}
