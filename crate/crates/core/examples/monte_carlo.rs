//! Monte Carlo estimates of E[det(Z-mu) det(Z-nu)] against exact values.
//!
//! ```bash
//! cargo run --release --example monte_carlo
//! ```

use covkernel::ensembles::{mc_correlation, BuiltinEnsemble};
use covkernel::genfun::{gf_coefficient_series_auto, GfParams};
use covkernel::specfun::ln_factorial;

fn main() -> covkernel::Result<()> {
    let reps = 200_000;
    println!("{:<18} {:>6} {:>10} {:>16} {:>16} {:>8}", "ensemble", "(n,m)", "(mu,nu)", "exact", "monte carlo", "z");
    for ens in BuiltinEnsemble::ALL {
        let spec = ens.spec();
        for (n, m) in [(4, 2), (6, 3)] {
            for (mu, nu) in [(0.0, 0.0), (1.0, -2.0)] {
                let p = GfParams::for_ensemble(&spec, n, m, mu, nu)?;
                let norm = (ln_factorial(n as u64) + ln_factorial(m as u64)).exp();
                let exact = gf_coefficient_series_auto(&p, m)?.to_f64() * norm;
                let e = mc_correlation(&spec, n, m, mu, nu, reps, 1)?;
                println!(
                    "{:<18} {:>6} {:>10} {:>16.6} {:>16.6} {:>8.2}",
                    ens.name(),
                    format!("({n},{m})"),
                    format!("({mu},{nu})"),
                    exact,
                    e.estimate,
                    (e.estimate - exact) / e.stderr
                );
            }
        }
    }
    Ok(())
}
