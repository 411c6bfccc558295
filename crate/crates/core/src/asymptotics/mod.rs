//! Spectral geometry, theorem rescalings and the convergence harness.

pub mod geometry;
pub mod scaling;
pub mod verify;

pub use geometry::{h_inf, mp_density, spectrum_edges, Edge, SpectrumGeometry};
pub use scaling::{rescale_log, Regime, ScalingPlan};
pub use verify::{convergence_table, is_monotone_decreasing, verify_theorem, Method, TableRow, Verification};
