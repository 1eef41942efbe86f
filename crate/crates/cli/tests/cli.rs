//! Contract tests for the `zvar` binary: output schemas, dispatch rules,
//! exit codes, and deterministic sweep ordering.

use std::process::{Command, Output};

fn zvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zvar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn parse_json_lines(text: &str) -> Vec<serde_json::Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON line"))
        .collect()
}

#[test]
fn compute_closed_integer_dispatch() {
    let out = zvar(&[
        "compute",
        "--quantity",
        "dxi-dc",
        "--c",
        "2",
        "--method",
        "closed",
    ]);
    assert!(out.status.success());
    let rec = &parse_json_lines(&stdout(&out))[0];
    assert_eq!(rec["method"], "closed_integer");
    assert_eq!(rec["status"], "ok");
    let v = rec["value"].as_f64().unwrap();
    assert!((v + 0.0652953).abs() < 1e-6, "value {v}");
}

#[test]
fn compute_closed_noninteger_dispatch() {
    let out = zvar(&[
        "compute",
        "--quantity",
        "dxi-dc",
        "--c",
        "2.5",
        "--method",
        "closed",
    ]);
    assert!(out.status.success());
    let rec = &parse_json_lines(&stdout(&out))[0];
    assert_eq!(rec["method"], "closed_noninteger");
}

#[test]
fn compute_xi0() {
    let out = zvar(&["compute", "--quantity", "xi0", "--s", "0.75"]);
    assert!(out.status.success());
    let rec = &parse_json_lines(&stdout(&out))[0];
    assert!(rec["c"].is_null());
    let v = rec["value"].as_f64().unwrap();
    assert!((v - 0.5831240702).abs() < 1e-6, "value {v}");
}

#[test]
fn usage_errors_exit_2() {
    // missing argument
    assert_eq!(
        zvar(&["compute", "--quantity", "xi0"]).status.code(),
        Some(2)
    );
    // wrong argument kind
    assert_eq!(
        zvar(&["compute", "--quantity", "xi0", "--c", "2"])
            .status
            .code(),
        Some(2)
    );
    // pole
    assert_eq!(
        zvar(&["compute", "--quantity", "xi0", "--s", "0.5"])
            .status
            .code(),
        Some(2)
    );
    // closed route at non-integer c for dzeta-dc
    assert_eq!(
        zvar(&[
            "compute",
            "--quantity",
            "dzeta-dc",
            "--c",
            "2.5",
            "--method",
            "closed"
        ])
        .status
        .code(),
        Some(2)
    );
    // bad zero count
    assert_eq!(zvar(&["zeros", "--count", "0"]).status.code(), Some(2));
}

#[test]
fn method_and_tol_validation() {
    // quantities without alternative routes reject explicit methods
    assert_eq!(
        zvar(&[
            "compute",
            "--quantity",
            "zeta-c-at0",
            "--c",
            "2",
            "--method",
            "sector"
        ])
        .status
        .code(),
        Some(2)
    );
    // the integral spelling stays available for quadrature-backed quantities
    assert!(zvar(&[
        "compute",
        "--quantity",
        "zeta-c-prime0",
        "--c",
        "2",
        "--method",
        "integral"
    ])
    .status
    .success());
    assert_eq!(
        zvar(&["compute", "--quantity", "dxi-dc", "--c", "2", "--tol", "0"])
            .status
            .code(),
        Some(2)
    );
    // an unattainable accuracy demand is a numerical failure
    assert_eq!(
        zvar(&[
            "compute",
            "--quantity",
            "zeta-c-prime0",
            "--c",
            "2",
            "--tol",
            "1e-18"
        ])
        .status
        .code(),
        Some(3)
    );
}

#[test]
fn zeros_table() {
    let out = zvar(&["zeros", "--count", "5", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,lambda");
    let values: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!((values[0] - 2.404825557695773).abs() < 1e-11);
    assert!((values[1] - 5.520078110286311).abs() < 1e-11);
    for pair in values.windows(2) {
        assert!(pair[0] < pair[1]);
    }
}

#[test]
fn sweep_grid_and_dispatch() {
    let out = zvar(&[
        "sweep",
        "--quantity",
        "dxi-dc",
        "--c-min",
        "1.1",
        "--c-max",
        "4.0",
        "--step",
        "0.1",
    ]);
    assert!(out.status.success());
    let recs = parse_json_lines(&stdout(&out));
    assert_eq!(recs.len(), 30);
    let mut prev = f64::NEG_INFINITY;
    for rec in &recs {
        let c = rec["c"].as_f64().unwrap();
        assert!(c > prev);
        prev = c;
        let method = rec["method"].as_str().unwrap();
        if (c - c.round()).abs() <= 1e-9 {
            assert_eq!(method, "closed_integer", "at c = {c}");
        } else {
            assert_eq!(method, "closed_noninteger", "at c = {c}");
        }
    }
}

#[test]
fn sweep_single_point_and_known_value() {
    let out = zvar(&[
        "sweep",
        "--quantity",
        "zeta-c-prime0",
        "--c-min",
        "1",
        "--c-max",
        "3",
        "--step",
        "1",
    ]);
    assert!(out.status.success());
    let recs = parse_json_lines(&stdout(&out));
    assert_eq!(recs.len(), 3);
    let v = recs[0]["value"].as_f64().unwrap();
    assert!((v - 0.7535173895).abs() < 1e-9, "zeta_1'(0) = {v}");

    let out = zvar(&[
        "sweep",
        "--quantity",
        "zeta-c-at0",
        "--c-min",
        "2",
        "--c-max",
        "2",
        "--step",
        "0.5",
    ]);
    let recs = parse_json_lines(&stdout(&out));
    assert_eq!(recs.len(), 1);
}

#[test]
fn sweep_xi0_uses_s_grid() {
    let out = zvar(&[
        "sweep", "--quantity", "xi0", "--c-min", "0.6", "--c-max", "0.9", "--step", "0.1",
    ]);
    assert!(out.status.success());
    let recs = parse_json_lines(&stdout(&out));
    assert_eq!(recs.len(), 4);
    let mut prev = f64::NEG_INFINITY;
    for rec in &recs {
        assert!(rec["c"].is_null());
        let s = rec["s"].as_f64().unwrap();
        assert!(s > prev);
        prev = s;
        assert_eq!(rec["status"], "ok");
    }
}

#[test]
fn sweep_is_deterministic_under_parallelism() {
    let args = [
        "sweep",
        "--quantity",
        "dxi-dc",
        "--c-min",
        "1.2",
        "--c-max",
        "3.4",
        "--step",
        "0.2",
        "--jobs",
        "4",
    ];
    let a = stdout(&zvar(&args));
    let b = stdout(&zvar(&args));
    assert_eq!(a, b);
    assert!(!a.is_empty());
}

#[test]
fn zvar_jobs_env_sets_default_parallelism() {
    let args = [
        "sweep",
        "--quantity",
        "dxi-dc",
        "--c-min",
        "1.2",
        "--c-max",
        "3.4",
        "--step",
        "0.2",
    ];
    let serial = stdout(&zvar(&args));
    let with_env = Command::new(env!("CARGO_BIN_EXE_zvar"))
        .args(args)
        .env("ZVAR_JOBS", "3")
        .output()
        .unwrap();
    assert!(with_env.status.success());
    assert_eq!(serial, String::from_utf8(with_env.stdout).unwrap());
}

#[test]
fn sweep_records_per_point_failures() {
    // c = 0.5 is outside the sector route's domain
    let out = zvar(&[
        "sweep",
        "--quantity",
        "dxi-dc",
        "--c-min",
        "0.5",
        "--c-max",
        "0.5",
        "--step",
        "1",
        "--method",
        "sector",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let recs = parse_json_lines(&stdout(&out));
    assert_eq!(recs[0]["status"], "error");
    assert!(recs[0]["value"].is_null());
}

#[test]
fn csv_round_trip() {
    let out = zvar(&[
        "sweep",
        "--quantity",
        "dxi-dc",
        "--c-min",
        "1.5",
        "--c-max",
        "2.5",
        "--step",
        "0.5",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "quantity,c,s,method,value,error_estimate,evaluations,status"
    );
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 8);
        let c: f64 = fields[1].parse().unwrap();
        let v: f64 = fields[4].parse().unwrap();
        assert!(c.is_finite() && v.is_finite());
    }
}

#[test]
fn json_floats_round_trip_exactly() {
    let out = zvar(&["compute", "--quantity", "dxi-dc", "--c", "2.5"]);
    let rec = &parse_json_lines(&stdout(&out))[0];
    let v = rec["value"].as_f64().unwrap();
    // 17 significant digits reproduce the binary64 value bit-exactly
    let reparsed: f64 = format!("{v:.16e}").parse().unwrap();
    assert_eq!(v.to_bits(), reparsed.to_bits());
}

#[test]
fn verify_exit_codes() {
    let ok = zvar(&["verify", "--suite", "identities"]);
    assert!(ok.status.success());
    let cross = zvar(&["verify", "--suite", "cross-methods"]);
    assert!(cross.status.success());
    assert!(stdout(&cross).contains("dxi_cross"));
    let tight = zvar(&["verify", "--suite", "identities", "--tol", "1e-15"]);
    assert_eq!(tight.status.code(), Some(1));
}

#[test]
fn out_file_writes_table() {
    let dir = std::env::temp_dir().join("zvar-test-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zeros.csv");
    let out = zvar(&[
        "zeros",
        "--count",
        "3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
    std::fs::remove_file(&path).unwrap();
}
