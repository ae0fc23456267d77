//! Acceptance suite: each test runs one verification criterion at its full
//! stated instance counts and tolerances and prints a pass/fail line.
//! `criterion_10_cli` additionally drives the installed binary through the
//! exit-code contract on crafted fixtures.

use std::process::Command;

use dqmat_cli::report::CheckLine;
use dqmat_cli::verify::{self, VerifyConfig};

fn cfg() -> VerifyConfig {
    VerifyConfig::new(42, 1000, None)
}

fn assert_criterion(line: CheckLine) {
    println!(
        "{}  {}: instances={} violations={} worst_slack=({}, {})  {}",
        if line.pass { "PASS" } else { "FAIL" },
        line.name,
        line.instances,
        line.violations,
        line.worst_slack.0,
        line.worst_slack.1,
        line.detail
    );
    assert!(line.pass, "criterion {} violated {} times", line.name, line.violations);
}

#[test]
fn criterion_01_dual_scalar_laws() {
    assert_criterion(verify::criterion_scalar_laws(&cfg()));
}

#[test]
fn criterion_02_quaternion_identity() {
    assert_criterion(verify::criterion_quaternion_identity(&cfg()));
}

#[test]
fn criterion_03_decomposition_residuals() {
    assert_criterion(verify::criterion_decomposition_residuals(&cfg()));
}

#[test]
fn criterion_04_trace_identities() {
    assert_criterion(verify::criterion_trace_identities(&cfg()));
}

#[test]
fn criterion_05_majorization_suite() {
    assert_criterion(verify::criterion_majorization_suite(&cfg()));
}

#[test]
fn criterion_06_von_neumann() {
    assert_criterion(verify::criterion_von_neumann(&cfg()));
}

#[test]
fn criterion_07_hoffman_wielandt_singular() {
    assert_criterion(verify::criterion_hw_singular(&cfg()));
}

#[test]
fn criterion_08_hoffman_wielandt_hermitian() {
    assert_criterion(verify::criterion_hw_hermitian(&cfg()));
}

#[test]
fn criterion_09_spectral_norm() {
    assert_criterion(verify::criterion_spectral_norm(&cfg()));
}

#[test]
fn criterion_10_cli() {
    assert_criterion(verify::criterion_file_format(&cfg()));

    // Exit-code contract on crafted fixtures: 0 pass, 1 violated (via the
    // injection hook; the inequalities themselves are theorems), 2 error.
    let dir = tempfile::TempDir::new().unwrap();
    let herm = dir.path().join("h.dqm");
    let status = Command::new(env!("CARGO_BIN_EXE_dqmat"))
        .args(["gen", "--kind", "hermitian", "--m", "3", "--seed", "40", "--out"])
        .arg(&herm)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));

    let pass = Command::new(env!("CARGO_BIN_EXE_dqmat"))
        .args(["check", "vn"])
        .arg(&herm)
        .arg(&herm)
        .status()
        .unwrap();
    assert_eq!(pass.code(), Some(0), "equality case must pass");

    let violated = Command::new(env!("CARGO_BIN_EXE_dqmat"))
        .args(["verify", "--trials", "1", "--sizes", "2", "--inject-failure"])
        .output()
        .unwrap();
    assert_eq!(violated.status.code(), Some(1), "injected failure must exit 1");

    let condition_not_met = Command::new(env!("CARGO_BIN_EXE_dqmat"))
        .args(["check", "hw"])
        .arg(&herm)
        .arg(&herm)
        .status()
        .unwrap();
    assert_eq!(condition_not_met.code(), Some(2), "hw with B = A must exit 2");

    let not_hermitian = dir.path().join("nh.dqm");
    std::fs::write(
        &not_hermitian,
        "DQM 2 2\n0 0 0 0 0 0 0 0\n0 1 0 0 0 0 0 0\n0 1 0 0 0 0 0 0\n0 0 0 0 0 0 0 0\n",
    )
    .unwrap();
    let err = Command::new(env!("CARGO_BIN_EXE_dqmat"))
        .args(["eig"])
        .arg(&not_hermitian)
        .status()
        .unwrap();
    assert_eq!(err.code(), Some(2), "non-Hermitian eig must exit 2");

    // Reproducibility of the full report for a fixed seed.
    let run = |seed: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_dqmat"))
            .args(["verify", "--trials", "5", "--sizes", "2,3", "--seed", seed, "--json"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value =
            serde_json::from_slice(&out.stdout).expect("json report");
        v.as_object_mut().unwrap().remove("wall_ms");
        v
    };
    assert_eq!(run("9"), run("9"), "identical seed must reproduce the report");
}
