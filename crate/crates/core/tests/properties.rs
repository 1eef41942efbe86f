//! Randomized property tests for the function-level invariants.

use proptest::prelude::*;
use zvar_core::quadrature::integrate_finite;
use zvar_core::specfun::{digamma, digamma_gauss, hurwitz_zeta};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn digamma_recurrence(x in 0.1f64..50.0) {
        let lhs = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
        prop_assert!((lhs - 1.0 / x).abs() <= 1e-12);
    }

    #[test]
    fn hurwitz_recurrence(s in -2.5f64..5.0, q in 0.1f64..5.0) {
        prop_assume!((s - 1.0).abs() > 1e-3);
        let lhs = hurwitz_zeta(s, q).unwrap() - hurwitz_zeta(s, q + 1.0).unwrap();
        prop_assert!((lhs - q.powf(-s)).abs() <= 1e-11 * (1.0 + q.powf(-s).abs()));
    }

    #[test]
    fn gauss_digamma_agrees(j in 2u32..=12, p_seed in 1u32..=11) {
        let p = 1 + p_seed % (j - 1);
        let gauss = digamma_gauss(p, j).unwrap();
        let generic = digamma(f64::from(p) / f64::from(j)).unwrap();
        prop_assert!((gauss - generic).abs() <= 1e-12);
    }

    #[test]
    fn quadrature_linearity(alpha in -3.0f64..3.0, beta in -3.0f64..3.0) {
        let f = |x: f64| (-x).exp();
        let g = |x: f64| x * x;
        let combo = integrate_finite(|x| alpha * f(x) + beta * g(x), 0.0, 2.0, 1e-12)
            .unwrap()
            .value;
        let parts = alpha * integrate_finite(f, 0.0, 2.0, 1e-12).unwrap().value
            + beta * integrate_finite(g, 0.0, 2.0, 1e-12).unwrap().value;
        prop_assert!((combo - parts).abs() <= 1e-11);
    }

    #[test]
    fn quadrature_interval_additivity(m in 0.05f64..2.95) {
        let f = |x: f64| 1.0 / (1.0 + x * x);
        let whole = integrate_finite(f, 0.0, 3.0, 1e-12).unwrap().value;
        let split = integrate_finite(f, 0.0, m, 1e-12).unwrap().value
            + integrate_finite(f, m, 3.0, 1e-12).unwrap().value;
        prop_assert!((whole - split).abs() <= 1e-11);
    }
}
