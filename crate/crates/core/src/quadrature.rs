//! Adaptive Gauss–Legendre quadrature of complex-valued integrands.

use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Result;

const ORDER: usize = 15;
const INITIAL_PANELS: usize = 8;

/// Nodes and weights of the `ORDER`-point rule on `[-1, 1]` by Newton's
/// method on the Legendre polynomial.
fn rule() -> &'static ([f64; ORDER], [f64; ORDER]) {
    static RULE: OnceLock<([f64; ORDER], [f64; ORDER])> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER;
        let mut x = [0.0; ORDER];
        let mut w = [0.0; ORDER];
        for i in 0..n {
            let mut t = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, t);
                let dt = p / dp;
                t -= dt;
                if dt.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre(n, t);
            x[i] = t;
            w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
        (x, w)
    })
}

/// `(P_n(t), P_n'(t))`.
fn legendre(n: usize, t: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, t);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    (p1, n as f64 * (t * p1 - p0) / (t * t - 1.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum number of bisections of an initial panel.
    pub max_depth: u32,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions { abs_tol: 1e-10, rel_tol: 1e-10, max_depth: 14 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: Complex64,
    /// Sum of the panel error estimates.
    pub err: f64,
    pub evals: usize,
    /// False when the summed error estimate misses the tolerance.
    pub converged: bool,
}

fn panel<F: FnMut(f64) -> Result<Complex64>>(f: &mut F, a: f64, b: f64, evals: &mut usize) -> Result<Complex64> {
    let (x, w) = rule();
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..ORDER {
        s += w[i] * f(c + h * x[i])?;
    }
    *evals += ORDER;
    Ok(s * h)
}

struct Acc {
    value: Complex64,
    err: f64,
    evals: usize,
    converged: bool,
}

fn refine<F: FnMut(f64) -> Result<Complex64>>(
    f: &mut F,
    a: f64,
    b: f64,
    whole: Complex64,
    tol: f64,
    depth: u32,
    max_depth: u32,
    acc: &mut Acc,
) -> Result<()> {
    let m = 0.5 * (a + b);
    let left = panel(f, a, m, &mut acc.evals)?;
    let right = panel(f, m, b, &mut acc.evals)?;
    let err = (left + right - whole).norm();
    if err <= tol || depth >= max_depth || m <= a || m >= b {
        acc.value += left + right;
        acc.err += err;
        acc.converged &= err <= tol;
        return Ok(());
    }
    refine(f, a, m, left, 0.5 * tol, depth + 1, max_depth, acc)?;
    refine(f, m, b, right, 0.5 * tol, depth + 1, max_depth, acc)
}

/// `∫_a^b f(x) dx` to `max(abs_tol, rel_tol·|I|)`, bisecting panels whose
/// 15-point rule disagrees with the sum over its two halves.
pub fn integrate<F: FnMut(f64) -> Result<Complex64>>(mut f: F, a: f64, b: f64, opts: QuadOptions) -> Result<QuadResult> {
    let mut evals = 0;
    let h = (b - a) / INITIAL_PANELS as f64;
    let mut coarse = Vec::with_capacity(INITIAL_PANELS);
    for i in 0..INITIAL_PANELS {
        let (lo, hi) = (a + h * i as f64, if i + 1 == INITIAL_PANELS { b } else { a + h * (i + 1) as f64 });
        coarse.push((lo, hi, panel(&mut f, lo, hi, &mut evals)?));
    }
    let estimate: Complex64 = coarse.iter().map(|c| c.2).sum();
    let tol = opts.abs_tol.max(opts.rel_tol * estimate.norm());
    let mut acc = Acc { value: Complex64::new(0.0, 0.0), err: 0.0, evals, converged: true };
    for (lo, hi, whole) in coarse {
        refine(&mut f, lo, hi, whole, tol / INITIAL_PANELS as f64, 0, opts.max_depth, &mut acc)?;
    }
    // a panel stuck at the depth limit is harmless if the total still meets the target
    let converged = acc.converged || acc.err <= tol;
    Ok(QuadResult { value: acc.value, err: acc.err, evals: acc.evals, converged })
}
