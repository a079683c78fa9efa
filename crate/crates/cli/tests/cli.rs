use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn hkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hkit")).args(args).output().expect("binary runs")
}

fn problem(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

const PLANES: &str = r#"{
  "ring": {"variables": ["x", "y", "z", "w"]},
  "ideals": {"a": ["x^2*z", "x^2*w", "y^2*z", "y^2*w"]},
  "quotients": {"A": {"defining": "a", "dim": 2}},
  "parameters": {"Q": ["x - z", "y - w"]},
  "artinian": {"C": ["x^2", "y^2", "z", "w"]},
  "tasks": [
    {"command": "coeffs", "args": {"quotient": "A", "params": "Q"}, "expect": [5, -2, -1]},
    {"command": "kernel-e1", "args": {"artinian": "C", "params": "Q", "e0": 5}, "expect": [-2, -1]},
    {"command": "ann-length", "args": {"artinian": "C", "elem": "x - z"}, "expect": 2}
  ]
}"#;

#[test]
fn problem_file_with_expectations_passes() {
    let f = problem(PLANES);
    let out = hkit(&["run", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let r = json_of(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(r["tasks"][0]["value"], serde_json::json!([5, -2, -1]));
}

#[test]
fn failed_expectation_exits_one() {
    let f = problem(&PLANES.replace("[5, -2, -1]", "[5, -2, 0]"));
    let out = hkit(&["run", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json_of(&out);
    assert_eq!(r["tasks"][0]["pass"], false);
    assert_eq!(r["tasks"][1]["pass"], true);
}

#[test]
fn unknown_name_exits_two() {
    let f = problem(&PLANES.replace(r#""params": "Q"}, "expect": [5"#, r#""params": "Q9"}, "expect": [5"#));
    let out = hkit(&["run", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Q9"));
}

#[test]
fn malformed_input_exits_two() {
    let f = problem("{\"ring\": ");
    assert_eq!(hkit(&["run", f.path().to_str().unwrap()]).status.code(), Some(2));
    let out = hkit(&["coeffs", "--defining", "x^2*z,x^^2", "--params", "x-z,y-w"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hkit(&["colength", "--ideal", "x", "--field", "fp:32004"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_primary_ideal_exits_three() {
    let out = hkit(&["colength", "--vars", "x,y", "--ideal", "x", "--json"]);
    assert_eq!(out.status.code(), Some(3));
    let r = json_of(&out);
    assert!(r["tasks"][0]["error"].as_str().unwrap().contains("not primary"));
}

#[test]
fn direct_commands() {
    let out = hkit(&[
        "coeffs",
        "--defining",
        "x^2*z,x^2*w,y^2*z,y^2*w",
        "--params",
        "x-z,y-w",
        "--expect",
        "[5,-2,-1]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = hkit(&["gb", "--vars", "x,y", "--ideal", "x^2 - y, x*y", "--json"]);
    assert_eq!(json_of(&out)["tasks"][0]["value"], serde_json::json!(["y^2", "x*y", "x^2 - y"]));
    let out = hkit(&["colength", "--vars", "x,y", "--ideal", "x - x^2, y^2", "--json"]);
    assert_eq!(json_of(&out)["tasks"][0]["value"], 2);
    let out = hkit(&["colength", "--vars", "x,y", "--ideal", "x - x^2, y^2", "--mode", "global", "--json"]);
    assert_eq!(json_of(&out)["tasks"][0]["value"], 4);
}

#[test]
fn sampling_is_seeded_and_reports_warnings() {
    let args = [
        "sample-reductions",
        "--defining",
        "x^2*z,x^2*w,x*y*z,x*y*w,y^2*z,y^2*w",
        "--ideal",
        "m",
        "--count",
        "3",
        "--json",
    ];
    let a = hkit(&[&args[..], &["--seed", "7", "--threads", "1"]].concat());
    let b = hkit(&[&args[..], &["--seed", "7", "--threads", "3"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = json_of(&a);
    assert_eq!(r["tasks"][0]["value"].as_array().unwrap().len(), 3);
    assert!(r["warnings"][0].as_str().unwrap().contains("F_32003"));
}

#[test]
fn suite_json_is_reproducible() {
    let a = hkit(&["suite", "--json", "--seed", "3", "--threads", "1"]);
    let b = hkit(&["suite", "--json", "--seed", "3", "--threads", "4"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let r = json_of(&a);
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert!(checks.iter().any(|c| c["group"] == "9f"));
}
