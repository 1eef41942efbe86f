//! Executable verification of the trigonometric, digamma, and
//! integral-to-residue-sum identities the cross-method equalities rest on,
//! packaged as a regression suite.

use crate::error::{Error, Result};
use crate::kernel;
use crate::quadrature::{integrate_finite, integrate_real_line_even, integrate_to_infinity};
use crate::specfun::{digamma_gauss, EULER_GAMMA};
use std::f64::consts::{LN_2, PI};

/// One verified identity: both sides, their gap, and the verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityReport {
    fn new(name: String, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let abs_diff = (lhs - rhs).abs();
        IdentityReport {
            name,
            lhs,
            rhs,
            abs_diff,
            pass: abs_diff <= tolerance,
            tolerance,
        }
    }

    fn failed(name: String, tolerance: f64, err: &Error) -> Self {
        IdentityReport {
            name: format!("{name} (error: {err})"),
            lhs: f64::INFINITY,
            rhs: f64::NEG_INFINITY,
            abs_diff: f64::INFINITY,
            tolerance,
            pass: false,
        }
    }
}

/// Tolerances and parameter sets for [`run_all`]. `override_tol`, when set,
/// replaces every check's default tolerance.
#[derive(Debug, Clone)]
pub struct ToleranceProfile {
    pub override_tol: Option<f64>,
    pub integers: Vec<u32>,
    pub nonintegers: Vec<f64>,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        ToleranceProfile {
            override_tol: None,
            integers: (2..=12).collect(),
            nonintegers: vec![1.3, 1.5, 2.5, 3.25, 3.7, 4.75, 6.8],
        }
    }
}

impl ToleranceProfile {
    fn tol(&self, default: f64) -> f64 {
        self.override_tol.unwrap_or(default)
    }
}

const QUAD_TOL: f64 = 1e-12;

/// Termwise reformulation of the sector sum (α = π/c):
/// Σ_k (−2γ + log2 − log(1−cos 2kα))/(4π(1−cos 2kα))
///   = −Σ_k (γ + log|sin kα|)/(4π sin² kα).
pub fn check_cos_reformulation(c: f64, k_set: &[i64]) -> Result<IdentityReport> {
    if !(c > 0.0) {
        return Err(Error::Domain(
            "check_cos_reformulation requires c > 0".into(),
        ));
    }
    let alpha = PI / c;
    let mut lhs = 0.0;
    let mut rhs = 0.0;
    for &k in k_set {
        if k == 0 {
            return Err(Error::Domain("k_set must exclude 0".into()));
        }
        let ka = k as f64 * alpha;
        let one_minus_cos = 1.0 - (2.0 * ka).cos();
        if one_minus_cos < 1e-14 {
            return Err(Error::Domain(format!(
                "singular term: 1 - cos(2k a) = {one_minus_cos:.3e} at k = {k}"
            )));
        }
        lhs += (-2.0 * EULER_GAMMA + LN_2 - one_minus_cos.ln()) / (4.0 * PI * one_minus_cos);
        let sn = ka.sin();
        rhs -= (EULER_GAMMA + sn.abs().ln()) / (4.0 * PI * sn * sn);
    }
    Ok(IdentityReport::new(
        format!("cos_reformulation(c={c}, k_set={k_set:?})"),
        lhs,
        rhs,
        1e-12,
    ))
}

/// Σ_{k=1}^{c−1} 1/sin²(kπ/c) = (c²−1)/3 for integer c ≥ 2.
pub fn check_inverse_sin_squared(c: u32) -> Result<IdentityReport> {
    if c < 2 {
        return Err(Error::Domain(
            "check_inverse_sin_squared requires c >= 2".into(),
        ));
    }
    let cf = f64::from(c);
    let mut lhs = 0.0;
    for k in 1..c {
        let sn = (f64::from(k) * PI / cf).sin();
        lhs += 1.0 / (sn * sn);
    }
    Ok(IdentityReport::new(
        format!("inverse_sin_squared(c={c})"),
        lhs,
        (cf * cf - 1.0) / 3.0,
        1e-10,
    ))
}

/// Half-range fold of the log-sine sum for integer c ≥ 2:
/// Σ_{k=1}^{⌈c/2−1⌉} log|sin(kπ/c)|/(2π sin²) = Σ_{k=1}^{c−1} log|sin(kπ/c)|/(4π sin²).
pub fn check_half_range_fold(c: u32) -> Result<IdentityReport> {
    if c < 2 {
        return Err(Error::Domain(
            "check_half_range_fold requires c >= 2".into(),
        ));
    }
    let cf = f64::from(c);
    let k_half = if c % 2 == 0 { c / 2 - 1 } else { c / 2 };
    let term = |k: u32| {
        let sn = (f64::from(k) * PI / cf).sin();
        sn.abs().ln() / (sn * sn)
    };
    let lhs: f64 = (1..=k_half).map(term).sum::<f64>() / (2.0 * PI);
    let rhs: f64 = (1..c).map(term).sum::<f64>() / (4.0 * PI);
    Ok(IdentityReport::new(
        format!("half_range_fold(c={c})"),
        lhs,
        rhs,
        1e-12,
    ))
}

/// Weighted digamma sum versus the log-sine sum, for integer j ≥ 2:
/// (1/2πj) Σ_p p(j−p)(log 2j + ψ(p/j))
///   = −(γ/12π)(j²−1) − (1/2π) Σ_{k=1}^{⌊(j−1)/2⌋} log|sin(kπ/j)|/sin²(kπ/j).
pub fn check_digamma_trig(j: u32) -> Result<IdentityReport> {
    check_digamma_trig_with(j, false)
}

/// Same identity with the generic digamma on the left-hand side.
pub fn check_digamma_trig_generic(j: u32) -> Result<IdentityReport> {
    check_digamma_trig_with(j, true)
}

fn check_digamma_trig_with(j: u32, generic: bool) -> Result<IdentityReport> {
    if j < 2 {
        return Err(Error::Domain("check_digamma_trig requires j >= 2".into()));
    }
    let jf = f64::from(j);
    let mut lhs = 0.0;
    for p in 1..j {
        let psi = if generic {
            crate::specfun::digamma(f64::from(p) / jf)?
        } else {
            digamma_gauss(p, j)?
        };
        lhs += f64::from(p) * f64::from(j - p) * ((2.0 * jf).ln() + psi);
    }
    lhs /= 2.0 * PI * jf;
    let mut log_sin_sum = 0.0;
    for k in 1..=(j - 1) / 2 {
        let sn = (f64::from(k) * PI / jf).sin();
        log_sin_sum += sn.abs().ln() / (sn * sn);
    }
    let rhs = -EULER_GAMMA / (12.0 * PI) * (jf * jf - 1.0) - log_sin_sum / (2.0 * PI);
    let tag = if generic { "generic" } else { "gauss" };
    Ok(IdentityReport::new(
        format!("digamma_trig(j={j}, {tag})"),
        lhs,
        rhs,
        1e-11,
    ))
}

/// Σ_{p=1}^{j−1} p(j−p) cot(pπ/j) = 0 for integer j ≥ 2 (tolerance scales
/// with j³, the size of the cancelling terms).
pub fn check_cot_sum_vanishes(j: u32) -> Result<IdentityReport> {
    if j < 2 {
        return Err(Error::Domain(
            "check_cot_sum_vanishes requires j >= 2".into(),
        ));
    }
    let jf = f64::from(j);
    let mut sum = 0.0;
    for p in 1..j {
        let angle = f64::from(p) * PI / jf;
        sum += f64::from(p) * f64::from(j - p) * angle.cos() / angle.sin();
    }
    Ok(IdentityReport::new(
        format!("cot_sum_vanishes(j={j})"),
        sum,
        0.0,
        1e-10 * jf * jf * jf,
    ))
}

/// The two weighted cosine sums behind the digamma–trig identity:
/// Σ_p p·cos(2kπp/j) = −j/2 and Σ_p p²·cos(2kπp/j) = j/(2sin²(kπ/j)) − j²/2.
pub fn check_weighted_cos_sums(j: u32, k: u32) -> Result<IdentityReport> {
    if j < 2 || k < 1 || k > (j - 1) / 2 {
        return Err(Error::Domain(format!(
            "check_weighted_cos_sums requires j >= 2 and 1 <= k <= (j-1)/2, got j={j}, k={k}"
        )));
    }
    let jf = f64::from(j);
    let kf = f64::from(k);
    let mut linear = 0.0;
    let mut quadratic = 0.0;
    for p in 1..j {
        let pf = f64::from(p);
        let cos = (2.0 * kf * pf * PI / jf).cos();
        linear += pf * cos;
        quadratic += pf * pf * cos;
    }
    let sn = (kf * PI / jf).sin();
    let linear_closed = -jf / 2.0;
    let quadratic_closed = jf / (2.0 * sn * sn) - jf * jf / 2.0;
    let d1 = (linear - linear_closed).abs();
    let d2 = (quadratic - quadratic_closed).abs();
    // report the worse of the two equalities
    let (lhs, rhs) = if d1 >= d2 {
        (linear, linear_closed)
    } else {
        (quadratic, quadratic_closed)
    };
    Ok(IdentityReport::new(
        format!("weighted_cos_sums(j={j}, k={k})"),
        lhs,
        rhs,
        1e-10,
    ))
}

/// Residue reduction of the cosh integral, for non-integer c > 0:
/// (c/4π²) sin(πc) ∫_ℝ ds/((1+cosh s)(cosh cs − cos πc))
///   = (1/12)(1/π − c²/π) + (1/2π) Σ_{n=⌈−c/2⌉, n≠0}^{⌊c/2⌋} 1/(1−cos 2πn/c).
pub fn check_residue_lemma(c: f64) -> Result<IdentityReport> {
    if !(c > 0.0) || (c - c.round()).abs() <= 1e-9 {
        return Err(Error::Domain(
            "check_residue_lemma requires non-integer c > 0".into(),
        ));
    }
    let quad = integrate_real_line_even(
        |s| 1.0 / ((1.0 + s.cosh()) * kernel::cosh_minus_cos(c * s, PI * c)),
        1.0 + c,
        QUAD_TOL,
    )?;
    let lhs = c / (4.0 * PI * PI) * kernel::sin_pi(c) * quad.value;
    let mut rhs = (1.0 / PI - c * c / PI) / 12.0;
    let n_min = (-c / 2.0).ceil() as i64;
    let n_max = (c / 2.0).floor() as i64;
    for n in n_min..=n_max {
        if n == 0 {
            continue;
        }
        rhs += 1.0 / (2.0 * PI * (1.0 - (2.0 * PI * n as f64 / c).cos()));
    }
    Ok(IdentityReport::new(
        format!("residue_lemma(c={c})"),
        lhs,
        rhs,
        1e-9,
    ))
}

/// Log-cosh integral reduction, for non-integer c > 0:
/// (c/8π²) sin(πc) ∫_ℝ log(1+cosh s)/((1+cosh s)(cosh cs − cos πc)) ds equals
/// the half-range log-sum plus two regularized t-integrals and an elementary
/// bracket.
pub fn check_log_lemma(c: f64) -> Result<IdentityReport> {
    if !(c > 0.0) || (c - c.round()).abs() <= 1e-9 {
        return Err(Error::Domain(
            "check_log_lemma requires non-integer c > 0".into(),
        ));
    }
    let quad = integrate_real_line_even(
        |s| {
            kernel::log_one_plus_cosh(s)
                / ((1.0 + s.cosh()) * kernel::cosh_minus_cos(c * s, PI * c))
        },
        1.0 + c,
        QUAD_TOL,
    )?;
    let lhs = c / (8.0 * PI * PI) * kernel::sin_pi(c) * quad.value;

    let mut rhs = 0.0;
    for n in 1..=(c / 2.0).floor() as i64 {
        let omc = 1.0 - (2.0 * n as f64 * PI / c).cos();
        rhs += omc.ln() / (2.0 * PI * omc);
    }
    // e^{ct}/((e^t−1)(1−e^{ct})²) = −(1/t)·∂_c[1/((e^{ct}−1)(e^t−1))]
    let upper = integrate_to_infinity(|t| -kernel::dproduct_dc(t, c) / t, 1.0, 1.0 + c, QUAD_TOL)?;
    let lower = integrate_finite(|t| -kernel::dproduct_dc_reg(t, c) / t, 0.0, 1.0, QUAD_TOL)?;
    rhs += c * c / PI * (upper.value + lower.value);
    rhs -= c / (4.0 * PI * PI)
        * (PI / (2.0 * c) + PI * c / 3.0 + LN_2 * (PI / (6.0 * c) - PI * c / 6.0));

    Ok(IdentityReport::new(
        format!("log_lemma(c={c})"),
        lhs,
        rhs,
        1e-8,
    ))
}

fn push(reports: &mut Vec<IdentityReport>, name: &str, tol: f64, r: Result<IdentityReport>) {
    match r {
        Ok(rep) => reports.push(rep),
        Err(e) => reports.push(IdentityReport::failed(name.to_string(), tol, &e)),
    }
}

fn retol(mut rep: Result<IdentityReport>, profile: &ToleranceProfile) -> Result<IdentityReport> {
    if let (Ok(r), Some(tol)) = (&mut rep, profile.override_tol) {
        r.tolerance = tol;
        r.pass = r.abs_diff <= tol;
    }
    rep
}

/// Run every identity check over the canonical parameter sets. Failures are
/// collected, never raised; the returned reports are sorted by name.
pub fn run_all(profile: &ToleranceProfile) -> Vec<IdentityReport> {
    let mut reports = Vec::new();

    for &j in &profile.integers {
        let window: Vec<i64> = sector_k_window(f64::from(j));
        push(
            &mut reports,
            &format!("cos_reformulation(c={j})"),
            profile.tol(1e-12),
            retol(check_cos_reformulation(f64::from(j), &window), profile),
        );
        push(
            &mut reports,
            &format!("inverse_sin_squared(c={j})"),
            profile.tol(1e-10),
            retol(check_inverse_sin_squared(j), profile),
        );
        push(
            &mut reports,
            &format!("half_range_fold(c={j})"),
            profile.tol(1e-12),
            retol(check_half_range_fold(j), profile),
        );
        push(
            &mut reports,
            &format!("digamma_trig(j={j}, gauss)"),
            profile.tol(1e-11),
            retol(check_digamma_trig(j), profile),
        );
        push(
            &mut reports,
            &format!("digamma_trig(j={j}, generic)"),
            profile.tol(1e-11),
            retol(check_digamma_trig_generic(j), profile),
        );
        push(
            &mut reports,
            &format!("cot_sum_vanishes(j={j})"),
            profile.tol(1e-10 * f64::from(j).powi(3)),
            retol(check_cot_sum_vanishes(j), profile),
        );
        for k in 1..=(j - 1) / 2 {
            push(
                &mut reports,
                &format!("weighted_cos_sums(j={j}, k={k})"),
                profile.tol(1e-10),
                retol(check_weighted_cos_sums(j, k), profile),
            );
        }
    }

    for &c in &profile.nonintegers {
        let window = sector_k_window(c);
        push(
            &mut reports,
            &format!("cos_reformulation(c={c})"),
            profile.tol(1e-12),
            retol(check_cos_reformulation(c, &window), profile),
        );
        push(
            &mut reports,
            &format!("residue_lemma(c={c})"),
            profile.tol(1e-9),
            retol(check_residue_lemma(c), profile),
        );
        push(
            &mut reports,
            &format!("log_lemma(c={c})"),
            profile.tol(1e-8),
            retol(check_log_lemma(c), profile),
        );
    }

    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

/// The ⌈−c/2⌉..⌈c/2−1⌉ window with 0 removed, as used by the sector formula.
fn sector_k_window(c: f64) -> Vec<i64> {
    let lo = (-c / 2.0).ceil() as i64;
    let hi = (c / 2.0 - 1.0).ceil() as i64;
    (lo..=hi).filter(|&k| k != 0).collect()
}
