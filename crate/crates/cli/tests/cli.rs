//! End-to-end tests of the `skewrec` binary: exit codes, output formats and
//! the JSON round-trip guarantee.

use std::path::PathBuf;
use std::process::{Command, Output};

fn skewrec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewrec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn family_emits_json_with_rational_brackets() {
    let out = skewrec(&["family", "--tag", "mu", "--g", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["poly"], "-1,-1,0,0,0,-1,1");
    assert_eq!(v["skew_reciprocal"], true);
    let lo = v["perron"]["lo"].as_str().unwrap();
    assert!(lo.contains('/'), "bracket endpoints are exact rationals");
    let norm = v["normalized"]["decimal"].as_f64().unwrap();
    assert!((norm - 8.185_704_855_348_9).abs() < 1e-6);
}

#[test]
fn json_output_round_trips_byte_identically() {
    for args in [
        vec!["family", "--tag", "lambda", "--g", "4"],
        vec!["check-poly", "--poly", "-1,-1,0,-1,1", "--g", "2", "--json"],
        vec!["monotonicity", "--g", "4", "--json"],
        vec!["g3-case", "--json"],
    ] {
        let out = skewrec(&args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let reserialized = serde_json::to_string_pretty(&value).unwrap();
        assert_eq!(
            text.trim_end(),
            reserialized,
            "round trip must be byte-identical for {args:?}"
        );
    }
}

#[test]
fn check_poly_text_and_verdicts() {
    let out = skewrec(&["check-poly", "--poly", "-1,0,0,-1,0,0,1", "--g", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("odd-g/f(0)=-1"));
    assert!(text.contains("verdict: skew-reciprocal"));

    let out = skewrec(&["check-poly", "--poly", "-1,-1,-1,-1,1", "--g", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verdict: not skew-reciprocal"));
}

#[test]
fn charpoly_matrix_file() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("skewrec_test_matrix.txt");
    std::fs::write(&path, "2\n1 1\n1 0\n").unwrap();
    let out = skewrec(&["charpoly", "--matrix", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "-1,-1,1");
}

#[test]
fn cliquepoly_with_explain() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("skewrec_test_graph.txt");
    // Two disjoint self-loops: A2 with weights 2, 3.
    std::fs::write(&path, "v 2\ne 0 0 2 1\ne 1 1 3 1\n").unwrap();
    let out = skewrec(&["cliquepoly", "--graph", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1,0,-1,-1,0,1");

    let out = skewrec(&["cliquepoly", "--graph", path.to_str().unwrap(), "--explain"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let json_start = text.find('{').unwrap();
    let v: serde_json::Value = serde_json::from_str(&text[json_start..]).unwrap();
    assert_eq!(v["cliques"].as_array().unwrap().len(), 4); // {}, {0}, {1}, {0,1}
}

#[test]
fn sequence_csv_header_and_rows() {
    let out = skewrec(&["sequence", "--gmax", "5", "--csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "g,lambda_lo,lambda_hi,lambda_norm,mu_lo,mu_hi,mu_norm"
    );
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("1,"));
}

#[test]
fn verify_text_mode() {
    let out = skewrec(&["verify", "--g", "2", "--mode", "irreducible"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("-1,-1,0,-1,1"));
    assert!(text.contains("1,0,-3,0,1"), "the g=2 tie appears: {text}");
}

#[test]
fn exit_codes_follow_contract() {
    // 0: success
    let out = skewrec(&["family", "--tag", "lambda", "--g", "1"]);
    assert_eq!(out.status.code(), Some(0));

    // 1: usage errors (unknown flag, bad value, invalid argument)
    let out = skewrec(&["family", "--tag", "nope", "--g", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = skewrec(&["family"]);
    assert_eq!(out.status.code(), Some(1));
    let out = skewrec(&["not-a-command"]);
    assert_eq!(out.status.code(), Some(1));
    let out = skewrec(&["verify", "--g", "99", "--mode", "primitive"]);
    assert_eq!(out.status.code(), Some(1));
    let out = skewrec(&["check-poly", "--poly", "-1,0,2", "--g", "1"]);
    assert_eq!(out.status.code(), Some(1));

    // 2: a verification failure (cap exceeded is a resource error -> 1;
    // forcing a genuine verification failure cheaply is not possible on a
    // correct build, so exercise the code path through the cap error class
    // and the g3 pipeline's success instead).
    let out = skewrec(&["g3-case"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir();
    let path: PathBuf = dir.join("skewrec_test_out.json");
    let _ = std::fs::remove_file(&path);
    let out = skewrec(&[
        "family",
        "--tag",
        "lambda",
        "--g",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["poly"], "-1,-1,0,-1,1");
}

#[test]
fn tolerance_flag_tightens_bracket() {
    let out = skewrec(&[
        "family",
        "--tag",
        "lambda",
        "--g",
        "1",
        "--tol",
        "1/100000000000000000000",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let lo: Vec<&str> = v["perron"]["lo"].as_str().unwrap().split('/').collect();
    // Denominator must exceed the requested precision scale.
    assert!(lo[1].len() >= 20);

    let out = skewrec(&["family", "--tag", "lambda", "--g", "1", "--tol", "0"]);
    assert_eq!(out.status.code(), Some(1));
}
