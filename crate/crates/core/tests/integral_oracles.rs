//! Quadrature oracles for special-function values: the defining integrals,
//! computed by the crate's own quadrature, must reproduce the closed forms.

use zvar_core::quadrature::{integrate_finite, integrate_to_infinity};
use zvar_core::specfun::{hurwitz_zeta, log_gamma};

#[test]
fn gamma_half_from_its_defining_integral() {
    // Γ(1/2) = ∫_0^∞ t^{−1/2} e^{−t} dt, endpoint singularity on [0, 1]
    let head = integrate_finite(|t| t.powf(-0.5) * (-t).exp(), 0.0, 1.0, 1e-12).unwrap();
    let tail = integrate_to_infinity(|t| t.powf(-0.5) * (-t).exp(), 1.0, 1.0, 1e-12).unwrap();
    let gamma_half = head.value + tail.value;
    let from_log = log_gamma(0.5).unwrap().exp();
    assert!(
        (gamma_half - from_log).abs() <= 1e-9,
        "quadrature {gamma_half} vs log_gamma route {from_log}"
    );
    assert!((gamma_half - std::f64::consts::PI.sqrt()).abs() <= 1e-9);
}

#[test]
fn hurwitz_from_its_defining_integral() {
    // ζ_H(s; q) Γ(s) = ∫_0^∞ t^{s-1} e^{-qt}/(1 - e^{-t}) dt at s = 3, q = 0.75
    let (s, q) = (3.0, 0.75);
    let f = |t: f64| {
        if t == 0.0 {
            0.0
        } else {
            t.powf(s - 1.0) * (-q * t).exp() / (-(-t).exp_m1())
        }
    };
    let head = integrate_finite(f, 0.0, 1.0, 1e-12).unwrap();
    let tail = integrate_to_infinity(f, 1.0, q, 1e-12).unwrap();
    let gamma_s = log_gamma(s).unwrap().exp();
    let via_integral = (head.value + tail.value) / gamma_s;
    let direct = hurwitz_zeta(s, q).unwrap();
    assert!(
        (via_integral - direct).abs() <= 1e-10,
        "integral route {via_integral} vs Euler-Maclaurin {direct}"
    );
}
