//! Airy functions, Bessel values and the large-order Bessel checks.
//!
//! ```bash
//! cargo run --release --example airy_and_bessel
//! ```

use covkernel::specfun::{
    airy_pair, bessel_i_ratio, bessel_j, bessel_j_uniform_airy, bound_variation, default_bound_grid,
    i_uniform_rel_err, j_bound_scan,
};
use num_complex::Complex64;

fn main() -> covkernel::Result<()> {
    println!("Airy functions");
    for x in [-20.0, -5.0, -1.0, 0.0, 1.0, 5.0, 20.0] {
        let (ai, aip) = airy_pair(x)?;
        println!("  x = {x:>6}: Ai = {ai:>23.15e}  Ai' = {aip:>23.15e}");
    }

    println!("\nscaled Bessel series F_a(w^2) = (w/2)^-a I_a(w)");
    for (a, w2) in [(0, 1.0), (3, -25.0), (10, 400.0)] {
        let v = bessel_i_ratio(a, Complex64::new(w2, 0.0))?.to_complex();
        println!("  a = {a:>2}, w^2 = {w2:>6}: {:.15e}", v.re);
    }

    println!("\nJ_a(a x) against the Airy-type uniform approximation, a = 100");
    for x in [0.5, 0.9, 1.0, 1.1, 2.0] {
        let exact = bessel_j(100, 100.0 * x)?;
        let (approx, bound) = bessel_j_uniform_airy(100, Complex64::new(x, 0.0))?;
        println!("  x = {x:>4}: exact {exact:>23.15e}  uniform {:>23.15e}  (bound {bound:.1e})", approx.to_complex().re);
    }

    println!("\nsup_x |J_a(a x)| (a x)^(1/3) on a log grid in (1e-2, 1e2)");
    let grid = default_bound_grid();
    let scans = [50, 100, 200, 400].iter().map(|&a| j_bound_scan(a, &grid)).collect::<covkernel::Result<Vec<_>>>()?;
    for s in &scans {
        println!("  a = {:>3}: sup = {:.6} at x = {:.4}", s.alpha, s.sup, s.argmax);
    }
    println!("  spread across orders: {:.2}%", 100.0 * bound_variation(&scans));

    println!("\nrelative error of the uniform approximation of I_a(a z)");
    for z in [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4)] {
        let errs = [10, 20, 40, 80].map(|a| i_uniform_rel_err(a, z));
        let errs = errs.into_iter().collect::<covkernel::Result<Vec<_>>>()?;
        println!("  z = {z:.3}: {:?}", errs.iter().map(|e| format!("{e:.2e}")).collect::<Vec<_>>());
    }
    Ok(())
}
