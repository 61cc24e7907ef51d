//! End-to-end runs of the `trilin` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn trilin(args: &[&str]) -> Output {
    trilin_env(args, &[])
}

fn trilin_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_trilin"));
    cmd.arg("--fixtures").arg(fixtures()).args(args).env_remove("TRILIN_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_low_orders() {
    let o = trilin(&["expand", "--mode", "a", "--order", "0"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&trilin(&["expand", "--mode", "a", "--order", "1"]))).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn expand_matches_fixture_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c8.json");
    let o = trilin(&["expand", "--mode", "c", "--order", "8", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read(out).unwrap(), fs::read(fixtures().join("appendix_a_mode_c.json")).unwrap());
}

#[test]
fn verify_targets() {
    for args in [&["verify", "table1"][..], &["verify", "appendix-a"], &["verify", "commutators", "--order", "2"]] {
        let o = trilin(args);
        assert_eq!(code(&o), 0, "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn tampered_fixture_is_a_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    for f in ["SHA256SUMS", "appendix_a_mode_a.json", "appendix_a_mode_c.json"] {
        fs::copy(fixtures().join(f), dir.path().join(f)).unwrap();
    }
    let path = dir.path().join("appendix_a_mode_a.json");
    fs::write(&path, fs::read_to_string(&path).unwrap().replacen("\"num_re\":1,", "\"num_re\":3,", 1)).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_trilin"))
        .args(["--fixtures", dir.path().to_str().unwrap(), "verify", "appendix-a", "--mode", "a"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
    let o = Command::new(env!("CARGO_BIN_EXE_trilin"))
        .args(["--fixtures", "/nonexistent", "verify", "appendix-a"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&trilin(&["expand", "--mode", "x", "--order", "2"])), 2);
    assert_eq!(code(&trilin(&["sweep", "--chi", "0.02", "--alpha-min", "1", "--alpha-max", "2", "--steps", "1", "--quantities", "V_xc"])), 2);
    assert_eq!(code(&trilin(&["moments", "--alpha", "10", "--chi", "1.5"])), 2);
    assert_eq!(code(&trilin(&["moments", "--alpha", "70", "--chi", "0.01", "--oracle"])), 3);
    assert_eq!(code(&trilin(&["expand", "--mode", "a", "--order", "8", "--term-cap", "10"])), 3);
    assert_eq!(code(&trilin_env(&["verify", "table1"], &[("TRILIN_THREADS", "0")])), 2);
    assert_eq!(code(&trilin(&["frobnicate"])), 2);
}

#[test]
fn sweep_is_deterministic_across_threads() {
    let args = ["sweep", "--chi", "0.02", "--alpha-min", "1", "--alpha-max", "100", "--steps", "64", "--quantities", "V_xc,V_pc,ab"];
    let one = trilin_env(&args, &[("TRILIN_THREADS", "1")]);
    let two = trilin_env(&args, &[("TRILIN_THREADS", "2")]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, two.stdout);
    let text = stdout(&one);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("alpha,V_xc,V_pc,ab_re,ab_im"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 64);
    assert_eq!(rows[0][0], 1.0);
    assert_eq!(rows[63][0], 100.0);
    assert!(rows.iter().all(|r| r[2] < 1.0 && 1.0 < r[1]));
}

#[test]
fn strong_pump_sweep() {
    let o = trilin(&["sweep", "--chi", "0.001", "--alpha-min", "5000", "--alpha-max", "10000", "--steps", "3", "--quantities", "V_pc,V_abc", "--branch", "strong-pump"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().skip(1).all(|l| l.split(',').nth(1) == Some("1.0000000000000000e0")), "{text}");
    let o = trilin(&["sweep", "--chi", "0.001", "--alpha-min", "1", "--alpha-max", "2", "--steps", "2", "--quantities", "dcdc", "--branch", "strong-pump"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn moments_json() {
    let o = trilin(&["moments", "--alpha", "10", "--chi", "0.02", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["energy_residual"].as_f64().unwrap() <= 1e-10);
    assert_eq!(v["source"], "analytic");

    let o = trilin(&["moments", "--alpha", "8", "--chi", "0.05", "--oracle", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["oracle"]["source"], "oracle");
    assert!(v["oracle"]["truncation"]["tail_mass"].as_f64().unwrap() <= 1e-12);
    assert!(v["abs_errors"]["n_signal"].as_f64().unwrap() < 1e-3);
}

#[test]
fn compare_skips_zero_coupling() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cmp.json");
    let o = trilin(&["compare", "--alpha", "4", "--chi-prime", "0,0.5", "--out", out.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["skipped_chi_prime"][0].as_f64(), Some(0.0));
    assert_eq!(v["skipped_chi_prime"].as_array().unwrap().len(), 1);
    assert_eq!(v["reports"].as_array().unwrap().len(), 1);
    assert_eq!(code(&o), if v["passed"] == true { 0 } else { 1 });
}
