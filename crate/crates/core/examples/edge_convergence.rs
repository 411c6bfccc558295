//! Convergence to the Airy kernels at the upper and lower spectral edges.
//!
//! ```bash
//! cargo run --release --example edge_convergence
//! ```

use covkernel::asymptotics::{convergence_table, Edge, Method, ScalingPlan};
use covkernel::ensembles::BuiltinEnsemble;

fn main() -> covkernel::Result<()> {
    let ns = [100, 200, 400, 800];
    for ens in [BuiltinEnsemble::ComplexGaussian, BuiltinEnsemble::RealGaussian] {
        let spec = ens.spec();
        for edge in [Edge::Upper, Edge::Lower] {
            for (mu, nu) in [(0.0, 0.0), (-1.0, 0.5)] {
                let plan = ScalingPlan::edge(edge, ns[0], 0.5, mu, nu)?;
                println!("{} {edge:?} edge, gamma = 0.5, (mu, nu) = ({mu}, {nu})", ens.name());
                for r in convergence_table(&plan, &spec, Method::Contour, &ns)? {
                    println!("  N = {:>4}: lhs {:>18.12} rhs {:>18.12} err {:.3e}", r.n, r.lhs, r.rhs, r.abs_err);
                }
            }
        }
    }
    Ok(())
}
