use covkernel::ensembles::{enumerate_correlations, BuiltinEnsemble, DEFAULT_ENUMERATION_BUDGET};
use covkernel::genfun::{gf_coefficient_series_auto, GfParams};
use covkernel::specfun::ln_factorial;

fn check(ens: BuiltinEnsemble, max_n: usize) {
    let spec = ens.spec();
    let shifts = [0.0, 1.0, -1.0, 2.0, -2.0];
    let pairs: Vec<(f64, f64)> = shifts.iter().flat_map(|&a| shifts.iter().map(move |&b| (a, b))).collect();
    for n in 1..=max_n {
        for m in 0..=n.min(2) {
            let exact = enumerate_correlations(&spec, n, m, &pairs, DEFAULT_ENUMERATION_BUDGET).unwrap();
            for (&(mu, nu), &want) in pairs.iter().zip(&exact) {
                let p = GfParams::for_ensemble(&spec, n, m, mu, nu).unwrap();
                let c = gf_coefficient_series_auto(&p, m).unwrap();
                let norm = (ln_factorial(n as u64) + ln_factorial(m as u64)).exp();
                let got = c.to_f64() * norm;
                // enumeration rounds ±1/√2, so identically vanishing values come back at roundoff level
                let floor = 1e-12 * ((1.0 + n as f64 + mu.abs()) * (1.0 + n as f64 + nu.abs())).powi(m as i32);
                let tol = (1e-9 * want.abs()).max(floor);
                assert!((got - want).abs() <= tol, "{ens:?} n={n} m={m} mu={mu} nu={nu}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn series_matches_enumeration_real_rademacher() {
    check(BuiltinEnsemble::RealRademacher, 5);
}

#[test]
fn series_matches_enumeration_complex_sign() {
    check(BuiltinEnsemble::ComplexSign, 5);
}
