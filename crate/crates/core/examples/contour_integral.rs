//! The pinched contour around z = 1 and its per-segment contributions.
//!
//! ```bash
//! cargo run --release --example contour_integral
//! ```

use covkernel::asymptotics::ScalingPlan;
use covkernel::contour::{contour_correlation, ContourSpec, ETA_BULK};
use covkernel::ensembles::BuiltinEnsemble;
use covkernel::genfun::{gf_coefficient_series_auto, GfParams};

fn main() -> covkernel::Result<()> {
    let spec = BuiltinEnsemble::ComplexGaussian.spec();
    for n in [30, 120, 400] {
        let plan = ScalingPlan::bulk(n, 0.5, 1.5, 0.5, -0.5)?;
        let (x, y) = plan.arguments();
        let p = GfParams::for_ensemble(&spec, plan.n, plan.m, x, y)?;
        let cs = ContourSpec::with_default_a(n, ETA_BULK)?;
        let r = contour_correlation(&p, plan.m, &cs)?;
        let s = gf_coefficient_series_auto(&p, plan.m)?;
        println!("N = {n}, m = {}, a = {}, gap = {:.2e}", plan.m, cs.a, cs.gap());
        println!("  contour: {}  (rel err {:.1e})", r.value, r.rel_err);
        println!("  series:  {}", s.value);
        for seg in &r.segments {
            println!(
                "    segment {:>2}: {}  evals {:>6}  converged {}",
                seg.id.index(),
                seg.value,
                seg.evals,
                seg.converged
            );
        }
    }
    Ok(())
}
