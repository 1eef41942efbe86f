//! Subcommand implementations.

use crate::output::{emit, fmt_f64, render, Format, Record};
use crate::{ComputeArgs, Method, Quantity, Suite, SweepArgs, VerifyArgs, ZerosArgs};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use zvar_core::barnes::{self, ParameterC};
use zvar_core::bessel::j0_zero;
use zvar_core::bessel_zeta::{self, SectorAngle, VariationMethod};
use zvar_core::identities::{self, IdentityReport, ToleranceProfile};
use zvar_core::Error;

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_NUMERICAL: i32 = 3;

fn error_exit(e: &Error) -> i32 {
    if e.is_usage() {
        EXIT_USAGE
    } else {
        EXIT_NUMERICAL
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

struct Evaluated {
    method: &'static str,
    value: f64,
    error_estimate: f64,
    evaluations: u64,
}

fn method_str(m: VariationMethod) -> &'static str {
    m.as_str()
}

/// Evaluate `quantity` at grid value `x` (c for everything but xi0).
fn evaluate(
    quantity: Quantity,
    x: f64,
    method: Method,
) -> Result<Evaluated, (Error, &'static str)> {
    fn quad_backed(
        r: zvar_core::Result<zvar_core::QuadratureResult>,
        name: &'static str,
    ) -> Result<Evaluated, (Error, &'static str)> {
        r.map(|q| Evaluated {
            method: name,
            value: q.value,
            error_estimate: q.error_estimate,
            evaluations: q.evaluations,
        })
        .map_err(|e| (e, name))
    }
    let variation = |r: zvar_core::Result<bessel_zeta::VariationResult>| {
        r.map(|v| {
            if let Some(w) = &v.warning {
                eprintln!("warning: {w}");
            }
            Evaluated {
                method: method_str(v.method),
                value: v.value,
                error_estimate: v.error_estimate,
                evaluations: v.evaluations,
            }
        })
        .map_err(|e| (e, "variation"))
    };
    let pc = |v: f64| ParameterC::new(v).map_err(|e| (e, "parameter"));

    // only dzeta-dc and dxi-dc offer alternative routes
    if !matches!(quantity, Quantity::DzetaDc | Quantity::DxiDc) && method != Method::Auto {
        let integral_backed = matches!(
            quantity,
            Quantity::ZetaCPrime0 | Quantity::XiCPrime0 | Quantity::Xi0
        );
        if !(integral_backed && method == Method::Integral) {
            return Err((
                Error::Domain(format!(
                    "quantity {} does not take that method",
                    quantity.as_str()
                )),
                "method",
            ));
        }
    }
    match quantity {
        Quantity::ZetaCPrime0 => quad_backed(barnes::zeta_c_prime0_full(pc(x)?), "integral"),
        Quantity::ZetaCAt0 => {
            let c = pc(x)?;
            Ok(Evaluated {
                method: "analytic",
                value: barnes::zeta_c_at0(c),
                error_estimate: 0.0,
                evaluations: 0,
            })
        }
        Quantity::DzetaDc => {
            let c = pc(x)?;
            match method {
                Method::Integral => quad_backed(barnes::dzeta_c_prime0_dc_full(c), "integral"),
                Method::Auto | Method::Closed => match c.as_integer() {
                    Some(j) => barnes::dzeta_c_prime0_dc_integer(j)
                        .map(|v| Evaluated {
                            method: "closed_integer",
                            value: v,
                            error_estimate: 1e-13,
                            evaluations: 0,
                        })
                        .map_err(|e| (e, "closed_integer")),
                    None if method == Method::Closed => Err((
                        Error::Classification(format!(
                            "dzeta-dc has no closed form at non-integer c = {x}"
                        )),
                        "closed",
                    )),
                    None => quad_backed(barnes::dzeta_c_prime0_dc_full(c), "integral"),
                },
                Method::Sector => Err((
                    Error::Domain("dzeta-dc has no sector route".into()),
                    "sector",
                )),
            }
        }
        Quantity::XiCPrime0 => quad_backed(bessel_zeta::xi_c_prime0_full(pc(x)?), "integral"),
        Quantity::DxiDc => {
            let c = pc(x)?;
            match method {
                Method::Auto => variation(bessel_zeta::dxi_dc_auto(c)),
                Method::Integral => variation(bessel_zeta::dxi_dc_integral(c)),
                Method::Sector => variation(bessel_zeta::dxi_dc_sector(c)),
                Method::Closed => match c.as_integer() {
                    Some(j) if j >= 2 => variation(bessel_zeta::dxi_dc_closed_integer(j)),
                    _ => variation(bessel_zeta::dxi_dc_closed_noninteger(c)),
                },
            }
        }
        Quantity::Xi0 => quad_backed(bessel_zeta::xi0_full(x), "integral"),
        Quantity::SectorVariation => {
            let c = pc(x)?;
            if !(c.value() > 1.0) {
                return Err((
                    Error::Domain(format!("sector-variation requires c > 1, got {x}")),
                    "sector",
                ));
            }
            let angle =
                SectorAngle::new(std::f64::consts::PI / c.value()).map_err(|e| (e, "sector"))?;
            bessel_zeta::sector_variation(angle)
                .map(|v| Evaluated {
                    method: "sector",
                    value: v,
                    error_estimate: 1e-10,
                    evaluations: 0,
                })
                .map_err(|e| (e, "sector"))
        }
    }
}

fn make_record(quantity: Quantity, x: f64, ev: &Evaluated) -> Record {
    let (c, s) = if quantity.takes_s() {
        (None, Some(x))
    } else {
        (Some(x), None)
    };
    Record {
        quantity: quantity.as_str(),
        c,
        s,
        method: ev.method,
        value: Some(ev.value),
        error_estimate: Some(ev.error_estimate),
        evaluations: ev.evaluations,
        status: "ok",
    }
}

fn error_record(quantity: Quantity, x: f64, method: &'static str) -> Record {
    let (c, s) = if quantity.takes_s() {
        (None, Some(x))
    } else {
        (Some(x), None)
    };
    Record {
        quantity: quantity.as_str(),
        c,
        s,
        method,
        value: None,
        error_estimate: None,
        evaluations: 0,
        status: "error",
    }
}

fn grid_argument(args: &ComputeArgs) -> Result<f64, String> {
    if args.quantity.takes_s() {
        match (args.s, args.c) {
            (Some(s), None) => Ok(s),
            _ => Err("xi0 takes --s (and no --c)".into()),
        }
    } else {
        match (args.c, args.s) {
            (Some(c), None) => Ok(c),
            _ => Err(format!("{} takes --c (and no --s)", args.quantity.as_str())),
        }
    }
}

pub fn compute(args: &ComputeArgs) -> i32 {
    if !(args.tol > 0.0) {
        return usage("--tol must be positive");
    }
    let x = match grid_argument(args) {
        Ok(x) => x,
        Err(msg) => return usage(&msg),
    };
    match evaluate(args.quantity, x, args.method) {
        Ok(ev) if ev.error_estimate > args.tol => {
            eprintln!(
                "error: error estimate {:.3e} exceeds --tol {:.1e}",
                ev.error_estimate, args.tol
            );
            EXIT_NUMERICAL
        }
        Ok(ev) => {
            let rec = make_record(args.quantity, x, &ev);
            let text = render(&[rec], args.format);
            if let Err(e) = emit(&text, &args.out) {
                eprintln!("error: {e}");
                return EXIT_NUMERICAL;
            }
            EXIT_OK
        }
        Err((e, _)) => {
            eprintln!("error: {e}");
            error_exit(&e)
        }
    }
}

fn report_line(r: &IdentityReport) -> String {
    format!(
        "{}  {:<44}  diff {:.3e}  tol {:.1e}",
        if r.pass { "PASS" } else { "FAIL" },
        r.name,
        r.abs_diff,
        r.tolerance
    )
}

fn cross_method_reports(tol_override: Option<f64>) -> Vec<IdentityReport> {
    let mut reports = Vec::new();
    let mut push = |name: String, a: f64, b: f64, tol: f64| {
        let abs_diff = (a - b).abs();
        reports.push(IdentityReport {
            name,
            lhs: a,
            rhs: b,
            abs_diff,
            tolerance: tol,
            pass: abs_diff <= tol,
        });
    };
    for j in 2..=10u32 {
        let tol = tol_override.unwrap_or(1e-9);
        let c = ParameterC::new(f64::from(j)).unwrap();
        match (
            bessel_zeta::dxi_dc_integral(c),
            bessel_zeta::dxi_dc_sector(c),
            bessel_zeta::dxi_dc_closed_integer(j),
        ) {
            (Ok(a), Ok(b), Ok(cl)) => {
                push(
                    format!("dxi_cross(j={j}, integral~sector)"),
                    a.value,
                    b.value,
                    tol,
                );
                push(
                    format!("dxi_cross(j={j}, integral~closed)"),
                    a.value,
                    cl.value,
                    tol,
                );
                push(
                    format!("dxi_cross(j={j}, sector~closed)"),
                    b.value,
                    cl.value,
                    tol,
                );
            }
            _ => push(format!("dxi_cross(j={j})"), f64::NAN, 0.0, tol),
        }
    }
    for &cv in &[1.3, 1.5, 2.5, 3.25, 3.7, 4.75, 6.8] {
        let tol = tol_override.unwrap_or(1e-8);
        let c = ParameterC::new(cv).unwrap();
        match (
            bessel_zeta::dxi_dc_integral(c),
            bessel_zeta::dxi_dc_sector(c),
            bessel_zeta::dxi_dc_closed_noninteger(c),
        ) {
            (Ok(a), Ok(b), Ok(cl)) => {
                push(
                    format!("dxi_cross(c={cv}, integral~sector)"),
                    a.value,
                    b.value,
                    tol,
                );
                push(
                    format!("dxi_cross(c={cv}, integral~closed)"),
                    a.value,
                    cl.value,
                    tol,
                );
                push(
                    format!("dxi_cross(c={cv}, sector~closed)"),
                    b.value,
                    cl.value,
                    tol,
                );
            }
            _ => push(format!("dxi_cross(c={cv})"), f64::NAN, 0.0, tol),
        }
    }
    reports
}

pub fn verify(args: &VerifyArgs) -> i32 {
    if let Some(t) = args.tol {
        if !(t > 0.0) {
            return usage("--tol must be positive");
        }
    }
    let mut reports = Vec::new();
    if matches!(args.suite, Suite::All | Suite::Identities) {
        let profile = ToleranceProfile {
            override_tol: args.tol,
            ..Default::default()
        };
        reports.extend(identities::run_all(&profile));
    }
    if matches!(args.suite, Suite::All | Suite::CrossMethods) {
        reports.extend(cross_method_reports(args.tol));
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    for r in &reports {
        println!("{}", report_line(r));
    }
    println!(
        "{} checks, {} passed, {} failed",
        reports.len(),
        reports.len() - failed,
        failed
    );
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn default_jobs() -> usize {
    if let Ok(v) = std::env::var("ZVAR_JOBS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

pub fn sweep(args: &SweepArgs) -> i32 {
    if !(args.step > 0.0) {
        return usage("--step must be positive");
    }
    if !(args.tol > 0.0) {
        return usage("--tol must be positive");
    }
    if args.c_min > args.c_max {
        return usage("--c-min must not exceed --c-max");
    }
    let mut grid = Vec::new();
    if args.c_min == args.c_max {
        grid.push(args.c_min);
    } else {
        let n = ((args.c_max - args.c_min) / args.step + 1e-9).floor() as usize;
        for i in 0..=n {
            grid.push(args.c_min + i as f64 * args.step);
        }
    }

    let jobs = args
        .jobs
        .unwrap_or_else(default_jobs)
        .clamp(1, grid.len().max(1));
    let slots: Mutex<Vec<Option<Record>>> = Mutex::new((0..grid.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= grid.len() {
                    break;
                }
                let x = grid[i];
                let rec = match evaluate(args.quantity, x, args.method) {
                    Ok(ev) if ev.error_estimate > args.tol => {
                        eprintln!(
                            "error at {x}: error estimate {:.3e} exceeds --tol {:.1e}",
                            ev.error_estimate, args.tol
                        );
                        error_record(args.quantity, x, ev.method)
                    }
                    Ok(ev) => make_record(args.quantity, x, &ev),
                    Err((e, m)) => {
                        eprintln!("error at {x}: {e}");
                        error_record(args.quantity, x, m)
                    }
                };
                slots.lock().unwrap()[i] = Some(rec);
            });
        }
    });

    let records: Vec<Record> = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every grid point evaluated"))
        .collect();
    let any_failed = records.iter().any(|r| r.status != "ok");
    let text = render(&records, args.format);
    if let Err(e) = emit(&text, &args.out) {
        eprintln!("error: {e}");
        return EXIT_NUMERICAL;
    }
    if any_failed {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    }
}

pub fn zeros(args: &ZerosArgs) -> i32 {
    if args.count < 1 {
        return usage("--count must be at least 1");
    }
    let mut lines = String::new();
    if args.format == Format::Csv {
        lines.push_str("n,lambda\n");
    }
    for n in 1..=args.count {
        match j0_zero(n) {
            Ok(z) => {
                let row = match args.format {
                    Format::Json => {
                        format!("{{\"n\":{},\"lambda\":{}}}\n", z.index, fmt_f64(z.value))
                    }
                    Format::Csv => format!("{},{}\n", z.index, fmt_f64(z.value)),
                };
                lines.push_str(&row);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return error_exit(&e);
            }
        }
    }
    if let Err(e) = emit(&lines, &args.out) {
        eprintln!("error: {e}");
        return EXIT_NUMERICAL;
    }
    EXIT_OK
}
