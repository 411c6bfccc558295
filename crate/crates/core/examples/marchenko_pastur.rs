//! Marchenko-Pastur density, spectral edges and the bulk exponent h_inf.
//!
//! ```bash
//! cargo run --example marchenko_pastur
//! ```

use covkernel::asymptotics::{h_inf, mp_density, spectrum_edges};

fn main() -> covkernel::Result<()> {
    for gamma in [0.25, 0.5, 1.0] {
        let g = spectrum_edges(gamma)?;
        println!("gamma = {gamma}: support [{:.6}, {:.6}]", g.xi_lower, g.xi_upper);
        let steps = 8;
        for k in 1..steps {
            let xi = g.xi_lower + (g.xi_upper - g.xi_lower) * k as f64 / steps as f64;
            let dens = mp_density(xi, gamma)?;
            let h = h_inf(xi, gamma)?;
            println!(
                "  xi = {xi:.4}: g = {dens:.10}  h_inf = {h:.10}  sqrt(h_inf/xi) - pi gamma g = {:+.1e}",
                (h / xi).sqrt() - std::f64::consts::PI * gamma * dens
            );
        }
        // mass check by the midpoint rule in the angle variable
        let n = 20_000;
        let (c, r) = (0.5 * (g.xi_lower + g.xi_upper), 0.5 * (g.xi_upper - g.xi_lower));
        let mut mass = 0.0;
        for i in 0..n {
            let th = std::f64::consts::PI * (i as f64 + 0.5) / n as f64;
            mass += mp_density(c - r * th.cos(), gamma)? * r * th.sin();
        }
        println!("  total mass {:.12}", mass * std::f64::consts::PI / n as f64);
    }
    Ok(())
}
