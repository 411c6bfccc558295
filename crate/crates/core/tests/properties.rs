use covkernel::asymptotics::{h_inf, mp_density, spectrum_edges};
use covkernel::ensembles::{Beta, EnsembleSpec};
use covkernel::genfun::{gf_coefficient_cauchy_auto, gf_coefficient_series_auto, GfParams};
use covkernel::kernels::{kernel_eval, KernelId};
use covkernel::specfun::ln_factorial;
use covkernel::LogComplex;
use num_complex::Complex64;
use proptest::prelude::*;

const KERNELS: [KernelId; 4] = [KernelId::Sine, KernelId::SineTilde, KernelId::Airy, KernelId::AiryTilde];

fn beta() -> impl Strategy<Value = Beta> {
    prop_oneof![Just(Beta::Real), Just(Beta::Complex)]
}

fn correlation(p: &GfParams, n: usize, m: usize) -> f64 {
    gf_coefficient_series_auto(p, m).unwrap().to_f64() * (ln_factorial(n as u64) + ln_factorial(m as u64)).exp()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn correlation_is_symmetric_in_shifts(
        beta in beta(), alpha in 0u32..6, m in 0usize..6, b_star in -1.0f64..1.0, mu in -5.0f64..5.0, nu in -5.0f64..5.0,
    ) {
        let a = gf_coefficient_series_auto(&GfParams::new(alpha, beta, b_star, mu, nu).unwrap(), m).unwrap();
        let b = gf_coefficient_series_auto(&GfParams::new(alpha, beta, b_star, nu, mu).unwrap(), m).unwrap();
        let (a, b) = (a.to_f64(), b.to_f64());
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1e-300), "{a} vs {b}");
    }

    #[test]
    fn single_column_matches_moment_formula(
        beta in beta(), n in 1usize..12, excess in 0.0f64..3.0, mu in -4.0f64..4.0, nu in -4.0f64..4.0,
    ) {
        let var = beta.component_variance();
        let b = var * var + excess;
        let spec = EnsembleSpec::from_fourth_moment(beta, b).unwrap();
        let p = GfParams::for_ensemble(&spec, n, 1, mu, nu).unwrap();
        let nf = n as f64;
        // E|x|⁴ of one entry is 2b + 1/2 (complex) or b (real)
        let q4 = match beta { Beta::Complex => 2.0 * b + 0.5, Beta::Real => b };
        let want = nf * q4 + nf * (nf - 1.0) - (mu + nu) * nf + mu * nu;
        let got = correlation(&p, n, 1);
        prop_assert!((got - want).abs() <= 1e-9 * want.abs() + 1e-9 * (1.0 + nf * nf), "{got} vs {want}");
    }

    #[test]
    fn series_and_cauchy_agree(
        beta in beta(), alpha in 0u32..8, m in 1usize..10, b_star in -1.0f64..1.0, mu in 0.0f64..10.0, nu in 0.0f64..10.0,
    ) {
        let p = GfParams::new(alpha, beta, b_star, mu, nu).unwrap();
        let s = gf_coefficient_series_auto(&p, m).unwrap().to_f64();
        let c = gf_coefficient_cauchy_auto(&p, m, 1e-11).unwrap().coefficient.to_f64();
        let scale = gf_coefficient_series_auto(&GfParams::new(alpha, beta, b_star, 0.0, 0.0).unwrap(), m).unwrap().to_f64();
        prop_assert!((s - c).abs() <= 1e-8 * s.abs().max(scale), "{s} vs {c}");
    }

    #[test]
    fn kernels_are_symmetric(k in 0usize..4, x in -6.0f64..6.0, y in -6.0f64..6.0) {
        let id = KERNELS[k];
        let a = kernel_eval(id, x, y).unwrap();
        let b = kernel_eval(id, y, x).unwrap();
        prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()), "{id}: {a} vs {b}");
    }

    #[test]
    fn sine_kernel_vanishes_at_integer_offsets(x in -20.0f64..20.0, k in 1i32..30, sign in prop::bool::ANY) {
        let d = if sign { k } else { -k } as f64;
        let v = kernel_eval(KernelId::Sine, x + d, x).unwrap();
        // x + d itself is rounded, so the offset is an integer only to ~1e-15
        prop_assert!(v.abs() <= 1e-14, "{v}");
        prop_assert_eq!(kernel_eval(KernelId::Sine, d, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn kernels_are_continuous_through_the_diagonal(k in 0usize..4, x in -5.0f64..5.0, h in 1e-3f64..3e-3) {
        let id = KERNELS[k];
        let on = kernel_eval(id, x, x).unwrap();
        let near = kernel_eval(id, x, x + h).unwrap();
        let inside = kernel_eval(id, x, x + 0.999e-3).unwrap();
        let outside = kernel_eval(id, x, x + 1.001e-3).unwrap();
        prop_assert!((near - on).abs() <= 50.0 * h * (1.0 + on.abs()));
        prop_assert!((inside - outside).abs() <= 1e-5 * (1.0 + on.abs()), "{inside} vs {outside}");
    }

    #[test]
    fn h_inf_vanishes_at_edges_and_is_positive_inside(gamma in 0.05f64..1.0, t in 0.01f64..0.99) {
        let g = spectrum_edges(gamma).unwrap();
        prop_assert!(h_inf(g.xi_upper, gamma).unwrap().abs() < 1e-12);
        if g.xi_lower > 0.0 {
            prop_assert!(h_inf(g.xi_lower, gamma).unwrap().abs() < 1e-12);
        }
        let xi = g.xi_lower + t * (g.xi_upper - g.xi_lower);
        let h = h_inf(xi, gamma).unwrap();
        prop_assert!(h > 0.0);
        let lhs = (h / xi).sqrt();
        let rhs = std::f64::consts::PI * gamma * mp_density(xi, gamma).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs), "{lhs} vs {rhs}");
    }

    #[test]
    fn logcomplex_arithmetic_matches_complex(
        ar in -1e3f64..1e3, ai in -1e3f64..1e3, br in -1e3f64..1e3, bi in -1e3f64..1e3,
    ) {
        let a = Complex64::new(ar, ai);
        let b = Complex64::new(br, bi);
        prop_assume!(a.norm() > 1e-3 && b.norm() > 1e-3);
        let (la, lb) = (LogComplex::from_complex(a), LogComplex::from_complex(b));
        let prod = (la * lb).to_complex();
        prop_assert!((prod - a * b).norm() <= 1e-12 * (a * b).norm());
        let sum = la.add(&lb).to_complex();
        prop_assert!((sum - (a + b)).norm() <= 1e-12 * (a.norm() + b.norm()));
    }
}
