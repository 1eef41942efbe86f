//! Bessel zeta functions over zeros of J_ν: ξ_0(s) and ξ_0'(0) through the
//! modified-Bessel representation, and the variation d/dc ξ_c'(0) by three
//! routes: the integral representation inherited from ζ_c, the sector
//! (residue-sum) formula, and closed forms for integer / non-integer c.
//!
//! Convention: `xi0(s)` computes Σ_n λ_{n,0}^{−2s}, the k^{−2s} normalization
//! of the contour representation (so the sector identification reads
//! ξ_c(2s) = ζ_{S_α}(s) with α = π/c).

use crate::barnes::{self, ParameterC};
use crate::bessel::{i0_series, i1_series, log_i0_regularized, log_i0_tail_coefficients};
use crate::error::{Error, Result};
use crate::kernel;
use crate::quadrature::{integrate_finite, integrate_real_line_even};
use crate::specfun::EULER_GAMMA;
use std::f64::consts::{LN_2, PI};

/// Which route produced a variation value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariationMethod {
    Integral,
    Sector,
    ClosedInteger,
    ClosedNoninteger,
}

impl VariationMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            VariationMethod::Integral => "integral",
            VariationMethod::Sector => "sector",
            VariationMethod::ClosedInteger => "closed_integer",
            VariationMethod::ClosedNoninteger => "closed_noninteger",
        }
    }
}

/// d/dc ξ_c'(0) computed by one method.
#[derive(Debug, Clone, PartialEq)]
pub struct VariationResult {
    pub c: f64,
    pub method: VariationMethod,
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
    /// Set when |c − nearest integer| < 0.02 on a route that multiplies a
    /// small sin(πc) against a large integral.
    pub warning: Option<String>,
}

/// Sector opening angle α ∈ (0, π) with its parameter c = π/α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorAngle {
    alpha: f64,
    c: f64,
}

impl SectorAngle {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < PI) {
            return Err(Error::Domain(format!(
                "sector angle must lie in (0, pi), got {alpha}"
            )));
        }
        Ok(SectorAngle {
            alpha,
            c: PI / alpha,
        })
    }

    pub fn alpha(self) -> f64 {
        self.alpha
    }

    pub fn c(self) -> f64 {
        self.c
    }
}

const QUAD_TOL: f64 = 1e-12;

/// ξ_0'(0) = −½ log(2π).
pub fn xi0_prime0() -> f64 {
    -0.9189385332046727
}

// I_1/I_0 minus its first two Maclaurin terms; O(z^5) at the origin.
fn i_ratio_reg(z: f64) -> f64 {
    if z < 0.02 {
        let z2 = z * z;
        z2 * z2 * z * (1.0 / 96.0 - 11.0 * z2 / 6144.0)
    } else {
        i1_series(z) / i0_series(z) - 0.5 * z + z * z * z / 16.0
    }
}

const TAIL_K: usize = 8;
const TAIL_CUT: f64 = 160.0;

/// ξ_0 at 2s with the quadrature error estimate and evaluation count.
pub fn xi0_full(s: f64) -> Result<crate::quadrature::QuadratureResult> {
    if !(s > -0.5 && s < 1.0) {
        return Err(Error::Domain(format!(
            "xi0 supports s in (-0.5, 1), got {s}"
        )));
    }
    if s == 0.5 {
        return Err(Error::Pole("xi0 has a simple pole at s = 1/2".into()));
    }
    if s == 0.0 {
        // sin(πs)/π kills every piece except −sin(πs)/(4πs) → −1/4
        return Ok(crate::quadrature::QuadratureResult {
            value: -0.25,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }

    // ∫_0^1 z^{−2s} (log I_0)'(z) dz with the two leading Maclaurin terms
    // integrated in closed form
    let low = integrate_finite(|z| z.powf(-2.0 * s) * i_ratio_reg(z), 0.0, 1.0, QUAD_TOL)?;
    let t1 = low.value + 0.5 / (2.0 - 2.0 * s) - 1.0 / (16.0 * (4.0 - 2.0 * s));

    // bracket constant −log I_0(1) + 1 − ½ log 2π = −(log I_0(z) − z + ½log 2πz)|_{z=1}
    let k0 = -log_i0_regularized(1.0)?;

    // ∫_1^∞ z^{−2s−1}(log I_0(z) − z + ½log 2πz) dz; the asymptotic tail
    // Σ c_k z^{−k} integrates in closed form, the O(z^{−9}) remainder is
    // truncated at TAIL_CUT
    let ck = log_i0_tail_coefficients(TAIL_K);
    let remainder = |z: f64| {
        let mut tail = 0.0;
        for k in (1..=TAIL_K).rev() {
            tail = (tail + ck[k]) / z;
        }
        log_i0_regularized(z).unwrap_or(f64::NAN) - tail
    };
    let high = integrate_finite(
        |z| z.powf(-2.0 * s - 1.0) * remainder(z),
        1.0,
        TAIL_CUT,
        QUAD_TOL,
    )?;
    let mut t2 = high.value;
    for (k, &coeff) in ck.iter().enumerate().skip(1) {
        t2 += coeff / (k as f64 + 2.0 * s);
    }
    // beyond TAIL_CUT the remainder is below ~c_9/z^9
    let tail_bound = 40.0 * TAIL_CUT.powf(-2.0 * s - 9.0) / (9.0 + 2.0 * s);

    let sin_over_pi = (PI * s).sin() / PI;
    let value =
        sin_over_pi * (t1 + k0) + 2.0 * s * sin_over_pi * t2 + sin_over_pi / (2.0 * s - 1.0)
            - (PI * s).sin() / (4.0 * PI * s);
    if !value.is_finite() {
        return Err(Error::NotFinite(format!("xi0({s})")));
    }
    Ok(crate::quadrature::QuadratureResult {
        value,
        error_estimate: low.error_estimate + high.error_estimate + tail_bound,
        evaluations: low.evaluations + high.evaluations,
    })
}

/// ξ_0 at 2s, i.e. Σ_n λ_{n,0}^{−2s}, analytically continued to
/// s ∈ (−1/2, 1) \ {1/2}. ξ_0(0) = −1/4.
pub fn xi0(s: f64) -> Result<f64> {
    Ok(xi0_full(s)?.value)
}

/// ξ_c'(0) with the quadrature error estimate and evaluation count.
pub fn xi_c_prime0_full(c: ParameterC) -> Result<crate::quadrature::QuadratureResult> {
    let cv = c.value();
    let zp = barnes::zeta_c_prime0_full(c)?;
    Ok(crate::quadrature::QuadratureResult {
        value: 0.5 * (zp.value + 5.0 / (24.0 * cv) - (cv + 1.0 / cv) / 12.0 * LN_2),
        error_estimate: 0.5 * zp.error_estimate,
        evaluations: zp.evaluations,
    })
}

/// ξ_c'(0) = ½[ζ_c'(0) + 5/(24c) − (1/12)(c + 1/c) log 2].
pub fn xi_c_prime0(c: ParameterC) -> Result<f64> {
    Ok(xi_c_prime0_full(c)?.value)
}

/// d/dc ξ_c'(0) by differentiating the ζ_c route:
/// ½·(d/dc ζ_c'(0)) − 5/(48c²) − (1/24)(1 − 1/c²) log 2.
pub fn dxi_dc_integral(c: ParameterC) -> Result<VariationResult> {
    let cv = c.value();
    let dz = barnes::dzeta_c_prime0_dc_full(c)?;
    let value = 0.5 * dz.value - 5.0 / (48.0 * cv * cv) - (1.0 - 1.0 / (cv * cv)) / 24.0 * LN_2;
    Ok(VariationResult {
        c: cv,
        method: VariationMethod::Integral,
        value,
        error_estimate: 0.5 * dz.error_estimate,
        evaluations: dz.evaluations,
        warning: None,
    })
}

/// k-window of the sector sum: ⌈−c/2⌉ ..= ⌈c/2 − 1⌉ (integer c uses exact
/// integer arithmetic so the window cannot flap at the classification edge).
fn sector_window(cv: f64, integer_j: Option<u32>) -> (i64, i64) {
    match integer_j {
        Some(j) => {
            let j = i64::from(j);
            let k_min = -(j / 2);
            let k_max = if j % 2 == 0 { j / 2 - 1 } else { j / 2 };
            (k_min, k_max)
        }
        None => ((-cv / 2.0).ceil() as i64, (cv / 2.0 - 1.0).ceil() as i64),
    }
}

fn sector_sum_terms(cv: f64, window: (i64, i64)) -> f64 {
    let mut sum = 0.0;
    for k in window.0..=window.1 {
        if k == 0 {
            continue;
        }
        let one_minus_cos = 1.0 - (2.0 * k as f64 * PI / cv).cos();
        sum += (-2.0 * EULER_GAMMA + LN_2 - one_minus_cos.ln()) / (4.0 * PI * one_minus_cos);
    }
    sum
}

/// Shared evaluation of the sector/residue formula. Integer-classified
/// parameters are snapped to the exact integer before the trig sums.
fn sector_eval(c_raw: f64, integer_j: Option<u32>) -> Result<(f64, f64, u64)> {
    let cv = match integer_j {
        Some(j) => f64::from(j),
        None => c_raw,
    };
    let window = sector_window(cv, integer_j);
    let mut bracket = 1.0 / (3.0 * PI) + cv * cv / (12.0 * PI) + sector_sum_terms(cv, window);
    let mut err = 1e-14 * (1.0 + bracket.abs());
    let mut evals = 0u64;
    if integer_j.is_none() {
        // sin(πc)-weighted real-line integral; skipped (exactly zero) at integers
        let sin_pi_c = kernel::sin_pi(cv);
        let integrand = |s: f64| {
            let num = -LN_2 + 2.0 * EULER_GAMMA + kernel::log_one_plus_cosh(s);
            let den = 16.0 * PI * (1.0 + s.cosh()) * kernel::cosh_minus_cos(cv * s, PI * cv);
            num / den
        };
        let quad = integrate_real_line_even(integrand, 1.0 + cv, QUAD_TOL)?;
        bracket += 2.0 * cv / PI * sin_pi_c * quad.value;
        err += (2.0 * cv / PI * sin_pi_c).abs() * quad.error_estimate;
        evals = quad.evaluations;
    }
    let envelope = PI / (2.0 * cv * cv);
    Ok((-envelope * bracket, envelope * err, evals))
}

fn near_integer_warning(cv: f64) -> Option<String> {
    let dist = (cv - cv.round()).abs();
    if dist < 0.02 && dist > ParameterC::INTEGER_TOL {
        Some(format!(
            "c = {cv} is within {dist:.2e} of an integer; sin(pi c) multiplies a large integral"
        ))
    } else {
        None
    }
}

/// d/dc ξ_c'(0) by the sector variational formula (valid for c > 1);
/// at integer c the sin(πc) factor is set to exactly zero and the
/// real-line integral is skipped.
pub fn dxi_dc_sector(c: ParameterC) -> Result<VariationResult> {
    let cv = c.value();
    if !(cv > 1.0) {
        return Err(Error::Domain(format!(
            "the sector route requires c > 1, got {cv}"
        )));
    }
    let integer_j = c.as_integer();
    let (value, error_estimate, evaluations) = sector_eval(cv, integer_j)?;
    Ok(VariationResult {
        c: cv,
        method: VariationMethod::Sector,
        value,
        error_estimate,
        evaluations,
        warning: near_integer_warning(cv),
    })
}

/// d/dc ξ_c'(0) at integer c = j > 1, fully closed:
/// −(π/2j²)[1/(3π) + j²/(12π) − (γ/12π)(j²−1)
///          − (1/2π) Σ_{k=1}^{⌈j/2−1⌉} log|sin(kπ/j)| / sin²(kπ/j)].
pub fn dxi_dc_closed_integer(j: u32) -> Result<VariationResult> {
    if j < 2 {
        return Err(Error::Domain(format!(
            "dxi_dc_closed_integer requires an integer j >= 2, got {j}"
        )));
    }
    let jf = f64::from(j);
    let k_max = if j % 2 == 0 { j / 2 - 1 } else { j / 2 };
    let mut log_sin_sum = 0.0;
    for k in 1..=k_max {
        let sn = (f64::from(k) * PI / jf).sin();
        log_sin_sum += sn.abs().ln() / (sn * sn);
    }
    let bracket = 1.0 / (3.0 * PI) + jf * jf / (12.0 * PI)
        - EULER_GAMMA / (12.0 * PI) * (jf * jf - 1.0)
        - log_sin_sum / (2.0 * PI);
    let value = -PI / (2.0 * jf * jf) * bracket;
    Ok(VariationResult {
        c: jf,
        method: VariationMethod::ClosedInteger,
        value,
        error_estimate: 1e-15 * (1.0 + value.abs()) * f64::from(k_max + 2),
        evaluations: 0,
        warning: None,
    })
}

/// d/dc ξ_c'(0) for non-integer c > 1: the sector sum over the
/// ⌈−c/2⌉..⌈c/2−1⌉ window plus the sin(πc)-weighted real-line integral.
pub fn dxi_dc_closed_noninteger(c: ParameterC) -> Result<VariationResult> {
    let cv = c.value();
    if c.is_integer() {
        return Err(Error::Classification(format!(
            "c = {cv} classifies as an integer; use dxi_dc_closed_integer"
        )));
    }
    if !(cv > 1.0) {
        return Err(Error::Domain(format!(
            "dxi_dc_closed_noninteger requires c > 1, got {cv}"
        )));
    }
    let (value, error_estimate, evaluations) = sector_eval(cv, None)?;
    Ok(VariationResult {
        c: cv,
        method: VariationMethod::ClosedNoninteger,
        value,
        error_estimate,
        evaluations,
        warning: near_integer_warning(cv),
    })
}

/// Dispatch on classification: closed integer form for integer c ≥ 2, the
/// non-integer closed form for c > 1, the integral route otherwise.
pub fn dxi_dc_auto(c: ParameterC) -> Result<VariationResult> {
    match c.as_integer() {
        Some(j) if j >= 2 => dxi_dc_closed_integer(j),
        Some(_) => dxi_dc_integral(c),
        None if c.value() > 1.0 => dxi_dc_closed_noninteger(c),
        None => dxi_dc_integral(c),
    }
}

/// d/dα ζ'_{S_α}(0) for the unit circular sector of opening angle α = π/c,
/// through the chain rule d/dα = −(c²/π)·d/dc on 2ξ_c'(0).
pub fn sector_variation(angle: SectorAngle) -> Result<f64> {
    let c = ParameterC::new(angle.c())?;
    let dxi = dxi_dc_auto(c)?;
    Ok(-2.0 * angle.c() * angle.c() / PI * dxi.value)
}
