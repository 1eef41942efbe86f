//! Bessel J_0, the regularized log of modified Bessel I_0, and positive
//! zeros of J_0 (power series below x = 12, Hankel asymptotics above,
//! McMahon-seeded Newton refinement for the zeros).

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// One positive zero λ of J_ν.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselZero {
    /// Bessel order ν.
    pub order: f64,
    /// 1-based index n of the zero.
    pub index: u32,
    /// The zero itself, J_ν(λ) = 0.
    pub value: f64,
}

const SERIES_CUT: f64 = 12.0;

fn j0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=60u32 {
        term *= -q / (f64::from(k) * f64::from(k));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

fn j1_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=60u32 {
        term *= -q / (f64::from(k) * f64::from(k + 1));
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    0.5 * x * sum
}

/// Hankel asymptotic amplitude sums P, Q for order ν (nu4 = 4ν²), truncated
/// at the smallest term.
fn hankel_pq(nu4: f64, x: f64) -> (f64, f64) {
    let mut p = 0.0f64;
    let mut q = 0.0f64;
    let mut ak = 1.0f64; // a_k(ν), signs included
    let mut xk = 1.0f64; // x^{-k}
    let mut prev = f64::INFINITY;
    for k in 0..=24u32 {
        let term = ak * xk;
        if term.abs() > prev {
            break;
        }
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        prev = term.abs();
        if prev < 1e-18 {
            break;
        }
        let odd = 2.0 * f64::from(k) + 1.0;
        ak *= (nu4 - odd * odd) / (8.0 * f64::from(k + 1));
        xk /= x;
    }
    (p, q)
}

fn j0_asymptotic(x: f64) -> f64 {
    let (p, q) = hankel_pq(0.0, x);
    let chi = x - 0.25 * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

fn j1_asymptotic(x: f64) -> f64 {
    let (p, q) = hankel_pq(4.0, x);
    let chi = x - 0.75 * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// J_0(x), absolute error ≤ 1e-11. Power series for x ≤ 12, Hankel
/// asymptotics beyond.
pub fn bessel_j0(x: f64) -> f64 {
    let xa = x.abs();
    if xa <= SERIES_CUT {
        j0_series(xa)
    } else {
        j0_asymptotic(xa)
    }
}

/// J_1(x); used as −J_0'(x) in the Newton refinement of zeros.
pub fn bessel_j1(x: f64) -> f64 {
    let xa = x.abs();
    let v = if xa <= SERIES_CUT {
        j1_series(xa)
    } else {
        j1_asymptotic(xa)
    };
    if x < 0.0 {
        -v
    } else {
        v
    }
}

pub(crate) fn i0_series(z: f64) -> f64 {
    let q = 0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=200u32 {
        term *= q / (f64::from(k) * f64::from(k));
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

pub(crate) fn i1_series(z: f64) -> f64 {
    let q = 0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..=200u32 {
        term *= q / (f64::from(k) * f64::from(k + 1));
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    0.5 * z * sum
}

const I0_ASYMPTOTIC_CUT: f64 = 40.0;

/// log I_0(z) − z + ½ log(2πz) for z ≥ 1, absolute error ≤ 1e-11.
///
/// Tends to 0 like 1/(8z) as z → ∞. Below z = 40 the I_0 power series is
/// summed directly; above, e^z is factored out and the asymptotic series
/// 1 + Σ u_m z^{−m} is evaluated in log space.
pub fn log_i0_regularized(z: f64) -> Result<f64> {
    if !(z >= 1.0) {
        return Err(Error::Domain(format!(
            "log_i0_regularized requires z >= 1, got {z}"
        )));
    }
    if z <= I0_ASYMPTOTIC_CUT {
        Ok(i0_series(z).ln() - z + 0.5 * (2.0 * PI * z).ln())
    } else {
        // u_m = Π (2i−1)² / (m! 8^m)
        let mut u = 1.0;
        let mut zk = 1.0 / z;
        let mut s = 0.0;
        for m in 1..=8u32 {
            let odd = 2.0 * f64::from(m) - 1.0;
            u *= odd * odd / (8.0 * f64::from(m));
            s += u * zk;
            zk /= z;
        }
        Ok(s.ln_1p())
    }
}

/// Coefficients c_k of log I_0(z) − z + ½log(2πz) ~ Σ_k c_k z^{−k},
/// obtained from the u_m by the log-of-power-series recurrence.
pub(crate) fn log_i0_tail_coefficients(k_max: usize) -> Vec<f64> {
    let mut u = vec![1.0f64; k_max + 1];
    for m in 1..=k_max {
        let odd = 2.0 * m as f64 - 1.0;
        u[m] = u[m - 1] * odd * odd / (8.0 * m as f64);
    }
    let mut c = vec![0.0f64; k_max + 1];
    for k in 1..=k_max {
        let mut conv = 0.0;
        for i in 1..k {
            conv += i as f64 * c[i] * u[k - i];
        }
        c[k] = u[k] - conv / k as f64;
    }
    c
}

/// McMahon seed for the n-th positive zero of J_0.
fn mcmahon_seed(n: u32) -> f64 {
    let beta = (f64::from(n) - 0.25) * PI;
    let b2 = beta * beta;
    beta + 1.0 / (8.0 * beta) - 124.0 / (1536.0 * beta * b2)
        + 120928.0 / (491520.0 * beta * b2 * b2)
}

/// The n-th positive zero of J_0 to ~1e-11, McMahon seed refined by Newton
/// iteration on J_0 (J_0' = −J_1).
pub fn j0_zero(n: u32) -> Result<BesselZero> {
    if n < 1 {
        return Err(Error::Domain("j0_zero requires n >= 1".into()));
    }
    let mut lambda = mcmahon_seed(n);
    let mut converged = false;
    for _ in 0..50 {
        let f = bessel_j0(lambda);
        let d = bessel_j1(lambda);
        if d == 0.0 {
            break;
        }
        let step = f / d;
        lambda += step;
        if step.abs() <= 1e-13 * lambda {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::IterationFailure(format!(
            "Newton did not converge for j0_zero({n})"
        )));
    }
    // one polishing step
    lambda += bessel_j0(lambda) / bessel_j1(lambda);
    Ok(BesselZero {
        order: 0.0,
        index: n,
        value: lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!(
            (a - b).abs() <= tol,
            "expected {a} ~ {b} within {tol}, diff {}",
            (a - b).abs()
        );
    }

    // bisection oracle on the power series
    fn bisect_j0(mut lo: f64, mut hi: f64) -> f64 {
        assert!(j0_series(lo) * j0_series(hi) < 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if j0_series(lo) * j0_series(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn j0_basic_values() {
        assert_eq!(bessel_j0(0.0), 1.0);
        assert!(bessel_j0(2.404825557695773).abs() <= 1e-11);
        // 30-term series oracle at x = 1
        let mut term = 1.0;
        let mut oracle = 1.0;
        for k in 1..=30u32 {
            term *= -0.25 / (f64::from(k) * f64::from(k));
            oracle += term;
        }
        assert_close(bessel_j0(1.0), oracle, 1e-15);
        assert_close(bessel_j0(1.0), 0.7651976865579666, 1e-13);
    }

    #[test]
    fn series_and_asymptotic_agree_near_crossover() {
        for i in 0..=20 {
            let x = 12.0 + 0.1 * f64::from(i);
            assert_close(j0_series(x), j0_asymptotic(x), 5e-12);
            assert_close(j1_series(x), j1_asymptotic(x), 5e-12);
        }
    }

    #[test]
    fn first_two_zeros_match_bisection() {
        let z1 = j0_zero(1).unwrap().value;
        let z2 = j0_zero(2).unwrap().value;
        assert_close(z1, bisect_j0(2.0, 3.0), 1e-11);
        assert_close(z2, bisect_j0(5.0, 6.0), 1e-11);
        assert_close(z1, 2.404825557695773, 1e-11);
        assert_close(z2, 5.520078110286311, 1e-11);
    }

    #[test]
    fn zero_100_against_two_term_mcmahon() {
        // the third McMahon term is ~2.6e-9, so the two-term oracle is good
        // to ~1e-8 here
        let beta = (100.0 - 0.25) * PI;
        let two_term = beta + 1.0 / (8.0 * beta);
        assert_close(j0_zero(100).unwrap().value, two_term, 1e-8);
    }

    #[test]
    fn zeros_interlace_and_tighten() {
        let mut prev = j0_zero(1).unwrap().value;
        for n in 2..=200u32 {
            let z = j0_zero(n).unwrap().value;
            let gap = z - prev;
            assert!(gap > PI - 0.2 && gap < PI + 0.2, "gap {gap} at n={n}");
            prev = z;
        }
        // asymptotic gap tightens toward π
        let late_gap = j0_zero(200).unwrap().value - j0_zero(199).unwrap().value;
        assert!((late_gap - PI).abs() < 1e-5);
    }

    #[test]
    fn zero_residuals_stay_small() {
        for n in 1..=1000u32 {
            let z = j0_zero(n).unwrap();
            assert!(
                bessel_j0(z.value).abs() <= 1e-11,
                "residual {} at n={n}",
                bessel_j0(z.value)
            );
        }
    }

    #[test]
    fn log_i0_regularized_values() {
        // I_0 series oracle at z = 1
        let oracle = i0_series(1.0).ln() - 1.0 + 0.5 * (2.0 * PI).ln();
        assert_close(log_i0_regularized(1.0).unwrap(), oracle, 1e-15);
        assert_close(
            log_i0_regularized(1.0).unwrap(),
            1.2660658777520082f64.ln() - 1.0 + 0.9189385332046727,
            1e-12,
        );
        // leading asymptotic term 1/(8z)
        let v = log_i0_regularized(50.0).unwrap();
        assert!((v - 1.0 / 400.0).abs() < 2e-3);
        assert!(log_i0_regularized(0.5).is_err());
    }

    #[test]
    fn log_i0_regularized_decays() {
        let vals: Vec<f64> = [10.0, 20.0, 40.0, 80.0]
            .iter()
            .map(|&z| log_i0_regularized(z).unwrap().abs())
            .collect();
        for pair in vals.windows(2) {
            assert!(pair[1] < pair[0]);
        }
        for &z in &[200.0, 400.0] {
            let scaled = log_i0_regularized(z).unwrap() * 8.0 * z;
            assert!((scaled - 1.0).abs() < 0.02, "8z·value = {scaled} at z={z}");
        }
    }

    #[test]
    fn log_i0_crossover_consistency() {
        for &z in &[39.0, 39.9, 40.1, 41.0, 45.0] {
            let series = i0_series(z).ln() - z + 0.5 * (2.0 * PI * z).ln();
            let mut u = 1.0;
            let mut zk = 1.0 / z;
            let mut s = 0.0;
            for m in 1..=8u32 {
                let odd = 2.0 * f64::from(m) - 1.0;
                u *= odd * odd / (8.0 * f64::from(m));
                s += u * zk;
                zk /= z;
            }
            assert_close(series, s.ln_1p(), 1e-12);
        }
    }

    #[test]
    fn tail_coefficients_match_known_fractions() {
        let c = log_i0_tail_coefficients(6);
        assert_close(c[1], 1.0 / 8.0, 1e-15);
        assert_close(c[2], 1.0 / 16.0, 1e-15);
        assert_close(c[3], 25.0 / 384.0, 1e-15);
        assert_close(c[4], 13.0 / 128.0, 1e-15);
        assert_close(c[5], 1073.0 / 5120.0, 1e-14);
    }
}
