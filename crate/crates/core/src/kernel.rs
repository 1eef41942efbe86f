//! Small-t-stable kernels shared by the heat-trace integrands.
//!
//! Everything is built from
//!   h(x) = 1/(e^x − 1) − 1/x + 1/2          (odd, h ~ x/12)
//!   w(x) = h(x)/x − 1/12                    (even, w ~ −x²/720)
//! evaluated by a Bernoulli series for |x| ≤ 0.8 and directly above, which
//! keeps the regularized products accurate to ~1e-15 for every t ∈ (0, 1]
//! and every c the crate uses. Naive subtraction of the Laurent singular
//! part loses ~9 digits already at t = 1e-4.

/// Bernoulli coefficients B_{2k}/(2k)! for k = 1..8.
const HB: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    7.0 / 523069747200.0,
    -3617.0 / 10670622842880000.0,
];

const SERIES_CUT: f64 = 0.8;

/// h(x) = 1/(e^x − 1) − 1/x + 1/2 for x > 0.
pub(crate) fn h(x: f64) -> f64 {
    if x <= SERIES_CUT {
        let y = x * x;
        let mut s = 0.0;
        for &b in HB.iter().rev() {
            s = s * y + b;
        }
        s * x
    } else {
        let ex = (-x).exp();
        ex / (1.0 - ex) - 1.0 / x + 0.5
    }
}

/// h'(x) = 1/x² − e^x/(e^x − 1)².
pub(crate) fn h_prime(x: f64) -> f64 {
    if x <= SERIES_CUT {
        let y = x * x;
        let mut s = 0.0;
        for (k, &b) in HB.iter().enumerate().rev() {
            s = s * y + (2.0 * k as f64 + 1.0) * b;
        }
        s
    } else {
        let ex = (-x).exp();
        let om = 1.0 - ex;
        1.0 / (x * x) - ex / (om * om)
    }
}

/// w(x) = h(x)/x − 1/12.
pub(crate) fn w(x: f64) -> f64 {
    if x <= SERIES_CUT {
        let y = x * x;
        let mut s = 0.0;
        for &b in HB[1..].iter().rev() {
            s = s * y + b;
        }
        s * y
    } else {
        h(x) / x - 1.0 / 12.0
    }
}

/// w'(x) = (h'(x) − h(x)/x)/x.
pub(crate) fn w_prime(x: f64) -> f64 {
    if x <= SERIES_CUT {
        let y = x * x;
        let mut s = 0.0;
        for (k, &b) in HB[1..].iter().enumerate().rev() {
            s = s * y + (2.0 * k as f64 + 2.0) * b;
        }
        s * x
    } else {
        (h_prime(x) - h(x) / x) / x
    }
}

/// 1/((e^{ct} − 1)(e^t − 1)), overflow-safe; intended for t ≥ 1.
pub(crate) fn product(t: f64, c: f64) -> f64 {
    let et = (-t).exp();
    let ect = (-c * t).exp();
    (et / (1.0 - et)) * (ect / (1.0 - ect))
}

/// 1/((e^{ct} − 1)(e^t − 1)) − b_{−2}/t² − b_{−1}/t − b_0, stable on (0, 1].
///
/// Exact rearrangement through h and w; behaves like b_1·t with
/// b_1 = −(1+c)/24 as t → 0.
pub(crate) fn product_reg(t: f64, c: f64) -> f64 {
    let ht = h(t);
    let hct = h(c * t);
    w(t) / c + c * w(c * t) - 0.5 * (ht + hct) + ht * hct
}

/// ∂/∂c of `product`: −t e^{ct}/((e^t − 1)(e^{ct} − 1)²), overflow-safe.
pub(crate) fn dproduct_dc(t: f64, c: f64) -> f64 {
    let et = (-t).exp();
    let ect = (-c * t).exp();
    let om = 1.0 - ect;
    -t * (et / (1.0 - et)) * ect / (om * om)
}

/// ∂/∂c of `product_reg`, stable on (0, 1]; behaves like −t/24 as t → 0.
pub(crate) fn dproduct_dc_reg(t: f64, c: f64) -> f64 {
    let ct = c * t;
    let hpct = h_prime(ct);
    -w(t) / (c * c) + w(ct) + ct * w_prime(ct) - 0.5 * t * hpct + h(t) * t * hpct
}

/// log(1 + cosh s) without overflow: |s| − log 2 + 2·log1p(e^{−|s|}).
pub(crate) fn log_one_plus_cosh(s: f64) -> f64 {
    let a = s.abs();
    a - std::f64::consts::LN_2 + 2.0 * (-a).exp().ln_1p()
}

/// cosh x − cos y = 2(sinh²(x/2) + sin²(y/2)), nonnegative by construction.
pub(crate) fn cosh_minus_cos(x: f64, y: f64) -> f64 {
    let sh = (0.5 * x).sinh();
    let sn = (0.5 * y).sin();
    2.0 * (sh * sh + sn * sn)
}

/// sin(πc) with the argument reduced to the nearest integer, exact 0 there.
pub(crate) fn sin_pi(c: f64) -> f64 {
    let m = c.round();
    let delta = c - m;
    let s = (std::f64::consts::PI * delta).sin();
    if (m as i64) % 2 == 0 {
        s
    } else {
        -s
    }
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

    fn naive_reg(t: f64, c: f64) -> f64 {
        let b2 = 1.0 / c;
        let b1 = -0.5 - 0.5 / c;
        let b0 = 0.25 + c / 12.0 + 1.0 / (12.0 * c);
        1.0 / ((c * t).exp_m1() * t.exp_m1()) - b2 / (t * t) - b1 / t - b0
    }

    #[test]
    fn h_series_matches_direct_at_cut() {
        for &x in &[0.2f64, 0.5, 0.79, 0.81, 1.5, 10.0] {
            let direct = (-x).exp() / (1.0 - (-x).exp()) - 1.0 / x + 0.5;
            assert_close(h(x), direct, 2e-15);
        }
    }

    #[test]
    fn derivative_kernels_match_finite_differences() {
        let fd = 1e-6;
        for &x in &[0.1, 0.5, 1.0, 3.0] {
            assert_close(h_prime(x), (h(x + fd) - h(x - fd)) / (2.0 * fd), 1e-9);
            assert_close(w_prime(x), (w(x + fd) - w(x - fd)) / (2.0 * fd), 1e-9);
        }
    }

    #[test]
    fn product_reg_matches_naive_where_naive_is_reliable() {
        for &c in &[1.0, 1.5, 2.0, 3.25, 6.8] {
            // naive evaluation at t = 1e-2 carries ~4e-12 of its own noise
            assert_close(product_reg(1e-2, c), naive_reg(1e-2, c), 8e-12);
            for &t in &[0.05, 0.1, 0.3, 0.7, 1.0] {
                assert_close(product_reg(t, c), naive_reg(t, c), 1e-12);
            }
        }
    }

    #[test]
    fn product_reg_limit_is_b1() {
        for &c in &[1.0, 2.0, 4.75] {
            let b1 = -(1.0 + c) / 24.0;
            assert_close(product_reg(1e-8, c) / 1e-8, b1, 1e-8);
        }
    }

    #[test]
    fn dproduct_reg_matches_c_difference() {
        let fd = 1e-6;
        for &c in &[1.3, 2.0, 5.5] {
            for &t in &[1e-4, 0.01, 0.3, 1.0] {
                let diff = (product_reg(t, c + fd) - product_reg(t, c - fd)) / (2.0 * fd);
                assert_close(dproduct_dc_reg(t, c), diff, 1e-9);
            }
        }
    }

    #[test]
    fn dproduct_matches_naive_large_t() {
        for &c in &[1.5f64, 3.0] {
            for &t in &[1.0f64, 2.0, 5.0] {
                let naive = -t * (c * t).exp() / (t.exp_m1() * (c * t).exp_m1().powi(2));
                assert_close(dproduct_dc(t, c), naive, 1e-15 * naive.abs().max(1.0));
            }
        }
    }

    #[test]
    fn stable_trig_helpers() {
        assert_close(log_one_plus_cosh(0.0), 2.0f64.ln(), 1e-15);
        assert_close(log_one_plus_cosh(3.0), (1.0 + 3.0f64.cosh()).ln(), 1e-14);
        assert_close(
            cosh_minus_cos(2.0, 0.7),
            2.0f64.cosh() - 0.7f64.cos(),
            1e-14,
        );
        assert_eq!(sin_pi(4.0), 0.0);
        assert_close(sin_pi(2.5), (std::f64::consts::PI * 2.5).sin(), 1e-14);
    }
}
