use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_virtfib"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("spawn virtfib")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn check_passes_worked_instance() {
    let o = run(&["check", "(1/5,1/5,1/5)"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("PASS"));
    assert!(text.contains("-3/5"));
}

#[test]
fn check_json_round_trips() {
    let o = run(&["check", "(1/5,1/5,1/5)", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"]["overall"], "PASS");
    assert_eq!(v["gamma"].as_array().map(Vec::len), Some(14));
}

#[test]
fn out_file_matches_stdout() {
    let path = tmp("worked.json");
    let o = run(&["check", "(1/5,1/5,1/5)", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let written = std::fs::read(&path).unwrap();
    let printed = run(&["check", "(1/5,1/5,1/5)", "--json"]).stdout;
    assert_eq!(written, printed);
}

#[test]
fn not_applicable_exits_one() {
    for link in ["(1/4,1/4,1/4)", "(1/3,1/3,1/3)", "(1/5,1/5,-2/5)", "(1/5,1/7,1/5)"] {
        let o = run(&["check", link]);
        assert_eq!(code(&o), 1, "{link}");
        assert!(stdout(&o).contains("NOT APPLICABLE"), "{link}");
    }
    let o = run(&["check", "(1/5,1/5,-2/5)", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"]["overall"], "NOT_APPLICABLE");
}

#[test]
fn parse_errors_exit_three() {
    for bad in ["(1/5,1/5", "1/5,1/5,1/5)", "(1/0,1/5,1/5)", "(a/5)"] {
        let o = run(&["check", bad]);
        assert_eq!(code(&o), 3, "{bad}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run(&["batch", "--p", "x..y", "--n", "3", "--q", "1"])), 3);
}

#[test]
fn oversized_input_exits_four() {
    let o = run(&["check", "(1/103,1/103,1/103)"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn batch_table_and_json() {
    let o = run(&["batch", "--p", "5..7", "--n", "3", "--q", "1,2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("PASS")).count(), 16);

    let o = run(&["batch", "--p", "3..=5", "--n", "3", "--q", "-1,1", "--json"]);
    assert_eq!(code(&o), 0);
    let rows: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 16);
    for r in &rows {
        let q: i64 = r["q"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().parse::<i64>().unwrap()).sum();
        let expected = if r["p"] == "3" { "NOT_APPLICABLE" } else { "PASS" };
        assert_eq!(r["status"], expected, "{r}");
        assert_ne!(q, 0);
    }
}

#[test]
fn dot_outputs() {
    for args in [
        vec!["cover-dot", "(1/5,1/5,1/5)"],
        vec!["cover-dot", "(1/5,1/5,1/5)", "--dot", "boundary"],
        vec!["jsj-dot", "(1/5,1/5,1/5)"],
        vec!["jsj-dot", "(1/5,1/5,1/5)", "--dot", "doubled"],
    ] {
        let o = run(&args);
        assert_eq!(code(&o), 0, "{args:?}");
        assert!(stdout(&o).trim_start().starts_with("graph") || stdout(&o).trim_start().starts_with("digraph"));
    }
    assert_eq!(code(&run(&["cover-dot", "(1/3,1/3,1/3)"])), 1);
}
