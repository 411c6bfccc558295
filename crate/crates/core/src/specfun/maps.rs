//! The conformal maps `η(z)` and `ζ(z)` of the uniform Bessel asymptotics.
//!
//! `η(z) = √(1+z²) + log(z / (1+√(1+z²)))` is taken on the branch that is
//! analytic in the open right half-plane and real on `(0, ∞)`, extended to the
//! imaginary axis by continuity from the right.
//!
//! `ζ(z)` is defined through `(2/3) ζ^{3/2} = log((1+√(1−z²))/z) − √(1−z²)`
//! on the branch that is real on `(0, ∞)`, positive for `z < 1`, negative for
//! `z > 1` and analytic through the turning point `z = 1`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BranchNote {
    PrincipalEta,
    PrincipalZeta,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BranchedValue {
    pub value: Complex64,
    pub branch_note: BranchNote,
}

/// `√(1+z²)` continued from the right half-plane (`≈ z` for large `|z|`).
pub(crate) fn sqrt_one_plus_sq(z: Complex64) -> Complex64 {
    if z.norm() < 1.0 {
        (1.0 + z * z).sqrt()
    } else {
        z * (1.0 + (z * z).inv()).sqrt()
    }
}

pub fn eta_map(z: Complex64) -> Result<BranchedValue> {
    if z.re < 0.0 || z.norm() == 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain(format!("eta_map needs Re z >= 0, z != 0 (got {z})")));
    }
    let s = sqrt_one_plus_sq(z);
    let value = s + (z / (1.0 + s)).ln();
    Ok(BranchedValue { value, branch_note: BranchNote::PrincipalEta })
}

/// `ζ/t` as a power series in `t = 1 − z`, divided by `2^{1/3}`.
const ZETA_TAYLOR: [f64; 9] = [
    1.0,
    3.0 / 10.0,
    32.0 / 175.0,
    1037.0 / 7875.0,
    103727.0 / 1010625.0,
    33060241.0 / 394143750.0,
    4393499056.0 / 62077640625.0,
    15356175508.0 / 251266640625.0,
    296160295945538.0 / 5514046428515625.0,
];

const TURNING_RADIUS: f64 = 0.1;

/// `ζ(z) / (1 − z)` near the turning point.
fn zeta_over_t(t: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in ZETA_TAYLOR.iter().rev() {
        acc = acc * t + c;
    }
    acc * 2f64.cbrt()
}

/// `(2/3) ζ^{3/2}`, the right-hand side of the defining relation of `ζ`,
/// with principal branches of the square root and the logarithm.
pub fn zeta_three_halves(z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain(format!("zeta_three_halves needs z != 0 (got {z})")));
    }
    let r = (1.0 - z * z).sqrt();
    Ok(((1.0 + r) / z).ln() - r)
}

fn check_zeta_domain(z: Complex64) -> Result<()> {
    if z.norm() == 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain(format!("zeta_map needs finite z != 0 (got {z})")));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::domain(format!("zeta_map: {z} lies on the branch cut (-inf, 0]")));
    }
    Ok(())
}

pub fn zeta_map(z: Complex64) -> Result<BranchedValue> {
    check_zeta_domain(z)?;
    let t = 1.0 - z;
    let value = if t.norm() < TURNING_RADIUS {
        t * zeta_over_t(t)
    } else if z.norm() < 1.0 {
        let g = zeta_three_halves(z)?;
        (1.5 * g).powf(2.0 / 3.0)
    } else {
        let g = z * (1.0 - (z * z).inv()).sqrt() - z.inv().acos();
        -(1.5 * g).powf(2.0 / 3.0)
    };
    Ok(BranchedValue { value, branch_note: BranchNote::PrincipalZeta })
}

/// `(4ζ / (1 − z²))^{1/4}`, with its removable singularity at `z = 1`
/// evaluated through the Taylor series of `ζ/(1−z)`.
pub fn zeta_prefactor(z: Complex64) -> Result<Complex64> {
    check_zeta_domain(z)?;
    let t = 1.0 - z;
    if t.norm() < TURNING_RADIUS {
        return Ok((4.0 * zeta_over_t(t) / (2.0 - t)).powf(0.25));
    }
    let zeta = zeta_map(z)?.value;
    Ok((4.0 * zeta / (1.0 - z * z)).powf(0.25))
}
