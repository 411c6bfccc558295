//! The four limit kernels on and off the diagonal.
//!
//! ```bash
//! cargo run --example kernels
//! ```

use covkernel::kernels::{kernel_eval, KernelId};

fn main() -> covkernel::Result<()> {
    let ids = [KernelId::Sine, KernelId::SineTilde, KernelId::Airy, KernelId::AiryTilde];
    println!("{:>6} {:>6} {:>22} {:>22} {:>22} {:>22}", "x", "y", "sine", "sine-tilde", "airy", "airy-tilde");
    for (x, y) in [(0.0, 0.0), (0.5, -0.5), (1.0, 0.0), (0.3, 0.3005), (-2.0, 1.0), (3.0, 3.0)] {
        print!("{x:>6} {y:>6}");
        for id in ids {
            print!(" {:>22.15e}", kernel_eval(id, x, y)?);
        }
        println!();
    }

    // the diagonal is a removable singularity; values pass smoothly through it
    println!("\nairy-tilde near the diagonal at x = 0.7:");
    for h in [1e-2, 1e-3, 1e-4, 0.0] {
        println!("  h = {h:>7.0e}: {:.15e}", kernel_eval(KernelId::AiryTilde, 0.7, 0.7 + h)?);
    }
    Ok(())
}
