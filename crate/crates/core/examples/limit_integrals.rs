//! Truncated limit integrals: S(a) approaching its closed form in the bulk,
//! and A(a) reducing to the Airy kernel at the edges.
//!
//! ```bash
//! cargo run --release --example limit_integrals
//! ```

use covkernel::asymptotics::spectrum_edges;
use covkernel::contour::{
    airy_kernel_integral, laplace_inversion_closed_form, laplace_inversion_numeric, limit_integral_bulk,
    limit_integral_edge, s_infinity_closed_form,
};
use covkernel::kernels::{kernel_eval, KernelId};

fn main() -> covkernel::Result<()> {
    let (gamma, xi, b_star, mu, nu) = (0.5, 1.5, 0.2, 0.4, -0.3);
    let closed = s_infinity_closed_form(xi, gamma, b_star, mu, nu)?;
    println!("S(a) at gamma = {gamma}, xi = {xi}; closed form S(inf) = {closed:.15e}");
    for a in [10.0, 50.0, 200.0, 1000.0, f64::INFINITY] {
        let s = limit_integral_bulk(xi, gamma, b_star, mu, nu, a)?;
        println!("  a = {a:>6}: {:.15e}  |S(a) - S(inf)| = {:.2e}", s.value, (s.value - closed).abs());
    }

    println!("\nLaplace inversion of exp(-a sqrt(s)) / s^(3/2)");
    for (a, t) in [(0.0, 1.0), (2.0, std::f64::consts::PI.powi(2) / 4.0), (1.0, 3.0)] {
        println!(
            "  a = {a}, t = {t:.4}: numeric {:.15e}, closed form {:.15e}",
            laplace_inversion_numeric(a, t)?,
            laplace_inversion_closed_form(a, t)
        );
    }

    println!("\nA(a) at both edges, gamma = {gamma}, shifts rescaled by xi^(2/3)/gamma^(1/6)");
    let g = spectrum_edges(gamma)?;
    for (name, xi) in [("upper", g.xi_upper), ("lower", g.xi_lower)] {
        let k = xi.powf(2.0 / 3.0) / gamma.powf(1.0 / 6.0);
        for (mu, nu) in [(0.0, 0.0), (1.0, 0.0), (-1.0, 1.0)] {
            let a = limit_integral_edge(xi, gamma, 0.0, k * mu, k * nu, 100.0)?;
            println!(
                "  {name} ({mu},{nu}): k A = {:.15e}  Airy kernel = {:.15e}",
                k * a.value,
                kernel_eval(KernelId::Airy, mu, nu)?
            );
        }
    }
    println!("  contour form of the Airy kernel at (1, 0): {:.15e}", airy_kernel_integral(0.0, 1.0, 0.0)?.value);
    Ok(())
}
