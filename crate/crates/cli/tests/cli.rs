use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primcirc"))
        .args(args)
        .env_remove("PRIMCIRC_OUT_DIR")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn text(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_formats() {
    let o = run(&["build", "--p", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(text(&o), "1 2\n2 1\n");

    let o = run(&["build", "--p", "5", "--format", "csv"]);
    assert_eq!(text(&o).lines().nth(1), Some("3,1,2,4"));

    let o = run(&["build", "--p", "7", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["g"], 3);
    assert_eq!(v["first_row"], serde_json::json!([1, 3, 2, 6, 4, 5]));
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        &["build", "--p", "9"][..],
        &["build", "--p", "2"],
        &["rank", "--p", "7", "--g", "2"],
        &["build", "--p", "5", "--format", "xml"],
        &["snf", "--p", "211"],
        &["scan", "--max-p", "10001"],
        &["scan", "--max-p", "211", "--checks", "snf"],
        &["scan", "--max-p", "20", "--checks", "rank,eigen"],
        &["verify", "--p", "5", "--which", "nonsense"],
        &["code", "--p", "11", "--blocks", "7"],
        &["code", "--p", "5", "--blocks", "0"],
        &["graph", "--p", "5", "--format", "dot"],
    ] {
        let o = run(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("primcirc: "));
    }
}

#[test]
fn rank_json() {
    let o = run(&["rank", "--p", "11"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rank_real"], 6);
    assert_eq!(v["rank_mod_p"], 1);
    assert_eq!(v["route"], "elimination");

    let v: Value = serde_json::from_slice(&run(&["rank", "--p", "211"]).stdout).unwrap();
    assert_eq!(
        (v["rank_real"].as_u64(), v["route"].as_str()),
        (Some(106), Some("structural"))
    );
}

#[test]
fn spectrum_reports_counts() {
    let o = run(&["spectrum", "--p", "7"]);
    assert_eq!(code(&o), 0);
    assert!(text(&o).contains("nonzero eigenvalues: 4 of 6 (expected 4)"));

    let v: Value =
        serde_json::from_slice(&run(&["spectrum", "--p", "5", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["nonzero_count"], 3);
    assert_eq!(v["classes"][2]["class"], "EVEN_ZERO");
}

#[test]
fn snf_exit_codes_follow_the_pattern() {
    let o = run(&["snf", "--p", "11", "--multipliers"]);
    assert_eq!(code(&o), 0);
    assert!(text(&o).contains("(1, 11, 11, 11, 11, 11, 0, 0, 0, 0)"));
    assert!(text(&o).contains("|det V| = 1: true"));

    let o = run(&["snf", "--p", "23", "--format", "json"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], false);
    assert_eq!(v["diagonal"][11], 69);
}

#[test]
fn verify_exits_zero_despite_discrepancy() {
    let o = run(&["verify", "--p", "7"]);
    assert_eq!(code(&o), 0);
    let out = text(&o);
    for section in [
        "== parity ==",
        "== jacobi-gauss ==",
        "== gauss-magnitude ==",
        "== lemma-formula ==",
    ] {
        assert!(out.contains(section), "{section}");
    }
    assert!(out.contains("PAPER-DISCREPANCY"));

    let o = run(&["verify", "--p", "7", "--which", "parity,gauss-magnitude"]);
    assert!(!text(&o).contains("PAPER-DISCREPANCY"));
}

#[test]
fn scan_csv_and_summary() {
    let o = run(&["scan", "--max-p", "13"]);
    assert_eq!(code(&o), 0);
    let out = text(&o);
    assert_eq!(out.lines().count(), 6);
    assert_eq!(out.lines().nth(2), Some("5,2,3,3,1,,,OK"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("5 primes: 5 OK, 0 DEVIATION"));

    let o = run(&["scan", "--max-p", "29", "--checks", "snf"]);
    assert_eq!(code(&o), 1);
    assert!(text(&o).contains("23,5,12,12,1,"));
}

#[test]
fn scan_json() {
    let o = run(&[
        "scan",
        "--max-p",
        "7",
        "--checks",
        "spectrum,lemma",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["rows"], 3);
    assert_eq!(
        v["rows"][1]["lemma_audit_verdicts"][0]["verdict"],
        "MISMATCH"
    );
    assert_eq!(v["rows"][1]["status"], "OK");
}

#[test]
fn out_paths() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("scan.csv");
    let o = run(&["scan", "--max-p", "11", "--out", target.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(text(&o).contains("4 primes: 4 OK"));
    assert!(fs::read_to_string(&target)
        .unwrap()
        .starts_with("p,g,rank_real"));

    let o = Command::new(env!("CARGO_BIN_EXE_primcirc"))
        .args(["build", "--p", "5", "--out", "t5.txt"])
        .env("PRIMCIRC_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert_eq!(
        fs::read_to_string(dir.path().join("t5.txt"))
            .unwrap()
            .lines()
            .count(),
        4
    );

    let missing = dir.path().join("no/such/dir/x.csv");
    let o = run(&["scan", "--max-p", "5", "--out", missing.to_str().unwrap()]);
    assert_eq!(code(&o), 3);
}

#[test]
fn code_and_graph() {
    let o = run(&["code", "--p", "5", "--blocks", "3"]);
    assert_eq!(code(&o), 0);
    assert!(text(&o).starts_with("[12, 3, 4]\n"));

    let o = run(&["graph", "--p", "3"]);
    assert_eq!(text(&o), "0 0 1\n0 1 2\n1 0 2\n1 1 1\n");

    let o = run(&["graph", "--p", "5", "--format", "adjacency"]);
    assert_eq!(text(&o), "1 2 4 3\n3 1 2 4\n4 3 1 2\n2 4 3 1\n");

    let v: Value =
        serde_json::from_slice(&run(&["graph", "--p", "7", "--format", "json"]).stdout).unwrap();
    assert_eq!(
        (
            v["nonzero_eigenvalues"].as_u64(),
            v["zero_multiplicity"].as_u64()
        ),
        (Some(4), Some(2))
    );
}
