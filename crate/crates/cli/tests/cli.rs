use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_runcount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn counts(doc: &Value) -> Vec<Vec<String>> {
    doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r["counts"]
                .as_array()
                .unwrap()
                .iter()
                .map(|c| c.as_str().unwrap().to_owned())
                .collect()
        })
        .collect()
}

#[test]
fn brute_table_to_four() {
    let doc = json(&["table", "--n-max", "4", "--method", "brute"]);
    assert_eq!(doc["kind"], "triangle");
    assert_eq!(doc["rows"][2]["n"], 4);
    assert_eq!(
        counts(&doc),
        vec![vec!["2"], vec!["2", "4"], vec!["2", "12", "10"]]
    );
}

#[test]
fn methods_print_identical_tables() {
    let reference = counts(&json(&["table", "--n-max", "9"]));
    for method in ["brute", "closed", "series"] {
        assert_eq!(
            counts(&json(&["table", "--n-max", "9", "--method", method])),
            reference,
            "{method}"
        );
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["table", "--n-max", "1"][..],
        &["table", "--n-max", "12", "--method", "brute"],
        &["table", "--method", "abacus"],
        &["phi", "--s", "0"],
        &["series", "--s", "0"],
        &["verify", "--n-max", "0"],
        &["verify", "--k-max", "0"],
        &["verify", "--corrupt", "psi:3"],
        &["table", "--format", "xml"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn psi_rows_and_latex() {
    let doc = json(&["psi", "--i-max", "2"]);
    let displays: Vec<&str> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["display"].as_str().unwrap())
        .collect();
    assert_eq!(displays, ["K(s)", "K(s-1)(-2)", "K(s-2)(-2n+s+8)/4"]);
    assert_eq!(
        json(&["psi", "--i-max", "0"])["rows"]
            .as_array()
            .unwrap()
            .len(),
        1
    );

    let out = run(&["psi", "--i-max", "3", "--format", "latex"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("$3$ & $K(s-3)(2n-s-3)/2$"), "{text}");
}

#[test]
fn phi_documents() {
    let doc = json(&["phi", "--s", "1"]);
    assert_eq!(doc["numerator"]["variable"], "x");
    assert_eq!(
        doc["numerator"]["coefficients"],
        serde_json::json!(["0", "0", "2"])
    );
    assert_eq!(
        doc["denominator"]["expanded"]["coefficients"],
        serde_json::json!(["1", "-1"])
    );

    let out = run(&["phi", "--s", "4", "--format", "latex"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4x^{5}(24x^2-29x+8)"), "{text}");
    assert!(text.contains("(1-4x)(1-3x)(1-2x)^2(1-x)^2"), "{text}");
}

#[test]
fn series_document() {
    let doc = json(&["series", "--s", "3", "--order", "6"]);
    assert_eq!(doc["kind"], "series");
    assert_eq!(
        doc["coefficients"],
        serde_json::json!(["0", "0", "0", "0", "10", "58", "236"])
    );
    assert_eq!(run(&["series", "--s", "2"]).status.code(), Some(0));
}

#[test]
fn verify_defaults_pass() {
    let doc = json(&["verify"]);
    assert_eq!(doc["kind"], "verification-report");
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["n_max"], 20);
    assert!(doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn corrupted_table_fails_with_named_check() {
    let out = run(&[
        "verify",
        "--n-max",
        "8",
        "--s-max",
        "4",
        "--i-max",
        "4",
        "--k-max",
        "3",
        "--corrupt",
        "table:6:3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("row-sums"), "{stderr}");
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], false);
}
