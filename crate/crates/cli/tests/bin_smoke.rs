//! End-to-end runs of the built binary: every verb, the documented exit
//! codes, and the machine-readable outputs.

use std::process::Command;

use beltrami_cli::report::{Status, VerificationReport};

fn beltrami(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_beltrami"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code(),
    )
}

#[test]
fn verify_json_parses_and_carries_the_two_lie_flags() {
    let (stdout, _, code) = beltrami(&["verify", "--suite", "lie", "--json"]);
    assert_eq!(code, Some(0));
    let report = VerificationReport::parse_json(&stdout).unwrap();
    assert_eq!(report.summary.failed, 0);
    let flags: Vec<&str> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Flagged)
        .map(|c| c.id.as_str())
        .collect();
    assert_eq!(
        flags,
        vec!["lie.generator.p_plus_scale", "lie.invariant.convention"]
    );
}

#[test]
fn unknown_suite_exits_nonzero_with_usage_error() {
    let (_, stderr, code) = beltrami(&["verify", "--suite", "astrology"]);
    assert_ne!(code, Some(0));
    assert!(stderr.contains("unknown suite"), "{stderr}");
}

#[test]
fn geodesic_csv_has_small_straightness_column() {
    let (stdout, _, code) = beltrami(&[
        "geodesic", "--t0", "0", "--x0", "0.1,0,0", "--v", "0.2,0.1,0", "--t-end", "0.3",
        "--step", "0.05",
    ]);
    assert_eq!(code, Some(0));
    let mut lines = stdout.lines();
    assert_eq!(
        lines.next().unwrap(),
        "t,x1,x2,x3,v1,v2,v3,straightness_error"
    );
    for line in lines {
        let err: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(err < 1e-8, "{line}");
    }
}

#[test]
fn invariants_verb_reports_exact_dimension() {
    let (stdout, _, code) = beltrami(&[
        "invariants",
        "--spec",
        "H1+",
        "--species",
        "antisymmetric",
        "--convention",
        "contravariant",
    ]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    // entries are exact strings
    assert!(v["basis"][0][0][0].is_string());
}

#[test]
fn transform_verb_reports_tiny_invariance_residual() {
    let (stdout, _, code) = beltrami(&["transform", "--seed", "42", "--x", "0.1,0.2,-0.1,0.05"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["invariance_residual"].as_f64().unwrap() < 1e-9);
    assert!(v["defining_residual"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["x_prime"].as_array().unwrap().len(), 4);
}

#[test]
fn unruh_verb_cross_checks_the_oracle() {
    let (stdout, _, code) = beltrami(&["unruh", "--de", "2", "--kk", "2"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["oracle_residual"].as_f64().unwrap() < 1e-8);
    let z0 = v["omega_zero_value"].as_f64().unwrap();
    assert!((z0 - std::f64::consts::FRAC_PI_2).abs() < 1e-8);
    let ep = v["e_p"].as_f64().unwrap();
    assert!((ep - (4.0f64 + 1.0).sqrt()).abs() < 1e-12);
}

#[test]
fn export_writes_header_only_for_zero_count() {
    let dir = std::env::temp_dir().join("beltrami-export-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.csv");
    let (_, _, code) = beltrami(&[
        "export",
        "--quantity",
        "amplitude",
        "--out",
        path.to_str().unwrap(),
        "--count",
        "0",
    ]);
    assert_eq!(code, Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.trim(), "delta_e,k_dot_k,amplitude");
}

#[test]
fn bad_config_exits_with_field_path() {
    let dir = std::env::temp_dir().join("beltrami-config-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.conf");
    std::fs::write(&path, "grid.nodes = 5\n").unwrap();
    let (_, stderr, code) = beltrami(&["verify", "--config", path.to_str().unwrap()]);
    assert_ne!(code, Some(0));
    assert!(stderr.contains("grid.nodes"), "{stderr}");
}
