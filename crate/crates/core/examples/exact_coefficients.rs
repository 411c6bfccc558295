//! Exact correlations three ways: enumeration over a discrete ensemble,
//! power-series coefficient extraction and Cauchy-circle quadrature.
//!
//! ```bash
//! cargo run --release --example exact_coefficients
//! ```

use covkernel::ensembles::{enumerate_correlation, BuiltinEnsemble};
use covkernel::genfun::{gf_coefficient_cauchy_auto, gf_coefficient_series_auto, GfParams};
use covkernel::specfun::ln_factorial;
use covkernel::Error;

fn main() -> covkernel::Result<()> {
    let spec = BuiltinEnsemble::RealRademacher.spec();
    println!("real Rademacher entries");
    println!("{:>6} {:>10} {:>18} {:>18} {:>18}", "(n,m)", "(mu,nu)", "enumeration", "series", "cauchy");
    for (n, m) in [(2, 1), (3, 2), (5, 2)] {
        for (mu, nu) in [(0.0, 0.0), (1.0, 2.0), (-2.0, 1.0)] {
            let p = GfParams::for_ensemble(&spec, n, m, mu, nu)?;
            let norm = (ln_factorial(n as u64) + ln_factorial(m as u64)).exp();
            let e = enumerate_correlation(&spec, n, m, mu, nu)?;
            let s = gf_coefficient_series_auto(&p, m)?.to_f64() * norm;
            // an identically vanishing value is at the rounding level of the Cauchy sum
            let c = match gf_coefficient_cauchy_auto(&p, m, 1e-12) {
                Ok(c) => format!("{:.10}", c.coefficient.to_f64() * norm),
                Err(Error::Precision { .. }) => "~0".to_string(),
                Err(e) => return Err(e),
            };
            println!("{:>6} {:>10} {e:>18.10} {s:>18.10} {c:>18}", format!("({n},{m})"), format!("({mu},{nu})"));
        }
    }

    // large orders stay in log space: f(n,m)/(n! m!) for n = 400, m = 200
    let spec = BuiltinEnsemble::ComplexGaussian.spec();
    let p = GfParams::for_ensemble(&spec, 400, 200, 600.0, 601.0)?;
    let c = gf_coefficient_series_auto(&p, 200)?;
    println!("\nn = 400, m = 200, mu = 600, nu = 601: f/(n! m!) = {} (rel err {:.1e})", c.value, c.rel_err);
    Ok(())
}
