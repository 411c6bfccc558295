//! Convergence of the rescaled correlation to the sine kernels in the bulk.
//!
//! ```bash
//! cargo run --release --example bulk_convergence
//! ```

use covkernel::asymptotics::{convergence_table, Method, ScalingPlan};
use covkernel::ensembles::BuiltinEnsemble;

fn main() -> covkernel::Result<()> {
    let ns = [50, 100, 200, 400];
    for ens in [BuiltinEnsemble::ComplexGaussian, BuiltinEnsemble::RealGaussian, BuiltinEnsemble::ComplexSign] {
        let spec = ens.spec();
        for (mu, nu) in [(0.0, 0.0), (0.5, -0.5), (0.2, 1.0)] {
            let plan = ScalingPlan::bulk(ns[0], 0.5, 1.5, mu, nu)?;
            println!("{} (b* = {}), xi = 1.5, (mu, nu) = ({mu}, {nu})", ens.name(), spec.b_star);
            for r in convergence_table(&plan, &spec, Method::Contour, &ns)? {
                println!("  N = {:>4}: lhs {:>20.12} rhs {:>20.12} err {:.3e}", r.n, r.lhs, r.rhs, r.abs_err);
            }
        }
    }
    Ok(())
}
