use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn frobnil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobnil")).args(args).output().expect("run frobnil")
}

fn stdout(args: &[&str]) -> String {
    let out = frobnil(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    frobnil(args).status.code()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("frobnil-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn normalize_examples() {
    assert_eq!(stdout(&["normalize", "--algebra", "clifford_odd", "--n", "2", "u1*x2"]), "x1*u1 + c[1] - c[2]\n");
    assert_eq!(stdout(&["normalize", "--algebra", "ground", "--n", "2", "u1*x2 - x1*u1"]), "1\n");
    assert_eq!(stdout(&["normalize", "--algebra", "ground", "--n", "3", "u1*u1"]), "0\n");
    assert_eq!(stdout(&["normalize", "--algebra", "dual_numbers", "--n", "1", "--in", "pol", "y[1]*y[1]"]), "0\n");
    assert_eq!(stdout(&["normalize", "--algebra", "ground", "--n", "2", "--in", "onh", "v1*y2"]), "1 - y1*v1\n");
    assert_eq!(stdout(&["normalize", "--algebra", "clifford_odd", "--n", "3", "--in", "nc", "u1*c[1]"]), "c[2]*u1\n");
}

#[test]
fn normalize_output_replays() {
    let first = stdout(&["normalize", "--algebra", "clifford_odd", "--n", "3", "(u2*x3 + c[1])*(u1 - x1)"]);
    let again = stdout(&["normalize", "--algebra", "clifford_odd", "--n", "3", first.trim()]);
    assert_eq!(first, again);
}

#[test]
fn act_example() {
    assert_eq!(stdout(&["act", "--algebra", "dual_numbers", "--n", "2", "y[1]*y[2]*u1", "--on", "x2^3"]), "0\n");
    assert_eq!(stdout(&["act", "--algebra", "ground", "--n", "2", "u1", "--on", "x2"]), "1\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["normalize", "--algebra", "ground", "--n", "2", "x0"]), Some(2));
    assert_eq!(code(&["normalize", "--algebra", "ground", "--n", "2", "x1 +"]), Some(2));
    assert_eq!(code(&["normalize", "--algebra", "no_such", "x1"]), Some(2));
    assert_eq!(code(&["normalize", "--algebra", "clifford_even", "x1"]), Some(2));
    assert_eq!(code(&["normalize", "x1"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    let err = String::from_utf8(frobnil(&["normalize", "--algebra", "ground", "--n", "2", "x1 * )"]).stderr).unwrap();
    assert!(err.contains("1:6"), "{err}");
}

#[test]
fn verify_builtins() {
    for b in ["ground", "clifford_odd", "clifford_even", "dual_numbers", "cyclic_group(2)"] {
        assert_eq!(code(&["verify", "--algebra", b, "--degree-cap", "3", "--samples", "30"]), Some(0), "{b}");
    }
}

#[test]
fn verify_json_is_reproducible() {
    let args = ["verify", "--algebra", "dual_numbers", "--n", "2", "--degree-cap", "3", "--samples", "20", "--seed", "7", "--json"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
    let reports = v["reports"].as_array().unwrap();
    assert!(reports.iter().all(|r| r["checks"].as_array().is_some_and(|c| !c.is_empty())));
    let text = stdout(&["verify", "--algebra", "dual_numbers", "--n", "2", "--degree-cap", "3", "--samples", "20", "--seed", "7"]);
    let total: u64 = reports.iter().flat_map(|r| r["checks"].as_array().unwrap()).map(|c| c["instances"].as_u64().unwrap()).sum();
    let listed = text.lines().filter(|l| l.trim_start().starts_with("PASS ")).count();
    let checks: usize = reports.iter().map(|r| r["checks"].as_array().unwrap().len()).sum();
    assert_eq!(listed, checks);
    assert!(total > 0);
}

#[test]
fn config_files() {
    let kc2 = temp_file(
        "kc2.txt",
        "frobnil-algebra v1\nname = kC2\ntrace_parity = even\n[basis]\ne even\ng even\n[trace]\ne = 1\n[mult]\ng * g = e\n",
    );
    let path = kc2.to_str().unwrap();
    assert_eq!(code(&["verify", "--config", path, "--degree-cap", "2", "--samples", "10"]), Some(0));
    assert_eq!(stdout(&["normalize", "--config", path, "--n", "2", "g[1]*g[1]*u1"]), "u1\n");
    let dual = temp_file("dual.txt", "frobnil-algebra v1\ntrace_parity = even\n[basis]\ne even\ng even\n[trace]\ng = 1\n");
    assert_eq!(code(&["verify", "--config", dual.to_str().unwrap(), "--degree-cap", "2", "--samples", "10"]), Some(0));
    let degenerate = temp_file("degenerate.txt", "frobnil-algebra v1\ntrace_parity = even\n[basis]\ne even\ng even\n[trace]\ne = 1\n");
    assert_eq!(code(&["verify", "--config", degenerate.to_str().unwrap()]), Some(2));
    let syntax = temp_file("syntax.txt", "frobnil-algebra v1\ntrace_parity = sideways\n[basis]\ne even\n");
    let err = String::from_utf8(frobnil(&["verify", "--config", syntax.to_str().unwrap()]).stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(code(&["verify", "--config", "/nonexistent/frobnil.txt"]), Some(2));
    for f in [kc2, dual, degenerate, syntax] {
        let _ = std::fs::remove_file(f);
    }
}

#[test]
fn dual_basis_tau_nakayama() {
    assert_eq!(stdout(&["dual-basis", "--algebra", "clifford_odd"]), "1^∨ = c\nc^∨ = 1\n");
    assert_eq!(stdout(&["tau", "--algebra", "clifford_odd", "--n", "3"]), "tau1 = c[1] - c[2]\ntau2 = c[2] - c[3]\n");
    assert_eq!(stdout(&["nakayama", "--algebra", "clifford_even"]), "psi(1) = 1\npsi(c) = -c\nsymmetric: false\n");
    let v: Value = serde_json::from_str(&stdout(&["nakayama", "--algebra", "ground", "--json"])).unwrap();
    assert_eq!(v["symmetric"], Value::Bool(true));
    assert_eq!(code(&["tau", "--algebra", "clifford_even"]), Some(2));
}

#[test]
fn iso_check() {
    assert_eq!(code(&["iso-check", "--n", "2", "--samples", "30"]), Some(0));
    let v: Value = serde_json::from_str(&stdout(&["iso-check", "--n", "2", "--samples", "10", "--json"])).unwrap();
    assert_eq!(v["passed"], Value::Bool(true));
}

#[test]
fn grade() {
    assert_eq!(stdout(&["grade", "--algebra", "ground", "--n", "2", "u1 + x1"]), "u1: degree -2, even\nx1: degree 2, even\n");
    assert_eq!(code(&["grade", "--algebra", "dual_numbers", "--n", "2", "x1"]), Some(2));
    let v: Value = serde_json::from_str(&stdout(&["grade", "--algebra", "clifford_odd", "--n", "2", "--json", "c[1]*x2"])).unwrap();
    assert_eq!(v[0]["parity"], Value::String("even".into()));
}
