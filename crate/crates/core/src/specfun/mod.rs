//! Special functions: Airy, modified Bessel, uniform asymptotics and the
//! associated conformal maps.

pub mod airy;
pub mod bessel;
pub mod bounds;
pub mod maps;
pub mod uniform;

pub use airy::{airy_ai, airy_ai_prime, airy_complex, airy_pair};
pub use bessel::{
    bessel_i_log, bessel_i_ratio, bessel_i_ratio_auto, bessel_i_ratio_fast, bessel_i_ratio_with_precision,
    bessel_j, BesselMethod, BesselValue,
};
pub use bounds::{bound_variation, default_bound_grid, i_uniform_rel_err, j_bound_scan, log_grid, BoundScan};
pub use maps::{eta_map, zeta_map, zeta_prefactor, zeta_three_halves, BranchNote, BranchedValue};
pub use uniform::{
    bessel_i_uniform, bessel_i_uniform_in, bessel_j_uniform_airy, bessel_j_uniform_airy_in, RegionKind,
    UniformBesselRegion, DEFAULT_SECTOR_EPS,
};

/// `ln n!`, exact summation below 256 and Stirling's series above.
pub fn ln_factorial(n: u64) -> f64 {
    if n < 256 {
        return (2..=n).map(|k| (k as f64).ln()).sum();
    }
    let x = n as f64 + 1.0;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln()
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 / 1680.0)))
}
