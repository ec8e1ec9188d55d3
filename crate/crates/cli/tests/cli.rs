//! End-to-end tests against the built binary: exact output strings, exit
//! codes, format round-trips, and byte-level determinism.

use std::process::{Command, Output};

fn tautring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tautring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn tau_single_values() {
    let out = tautring(&["tau", "--genus", "1", "--indices", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1/24\n");

    // Dimension filter: no admissible genus-2 word with indices (7,7).
    let out = tautring(&["tau", "--genus", "2", "--indices", "7,7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");

    // Unsorted input is canonicalized.
    let out = tautring(&["tau", "--genus", "1", "--indices", "2,1,0"]);
    assert_eq!(stdout(&out), "1/12\n");

    let out = tautring(&["tau", "--genus", "2", "--indices", "2,3"]);
    assert_eq!(stdout(&out), "29/5760\n");

    // A single query in a machine format comes out as a one-row table.
    let out = tautring(&[
        "tau", "--genus", "1", "--indices", "1", "--format", "json",
    ]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows[0]["value"], "1/24");
    assert_eq!(rows[0]["genus"], 1);
}

#[test]
fn tau_usage_errors_exit_two() {
    // Four indices.
    let out = tautring(&["tau", "--genus", "5", "--indices", "5,5,5,5"]);
    assert_eq!(out.status.code(), Some(2));

    // Missing indices.
    let out = tautring(&["tau", "--genus", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // Negative genus fails u32 parsing inside clap.
    let out = tautring(&["tau", "--genus", "-1", "--indices", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown suite name.
    let out = tautring(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_lemma2_text_report() {
    let out = tautring(&["verify", "--suite", "lemma2", "--max-genus", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let passes = text.lines().filter(|l| l.starts_with("[PASS] lemma2")).count();
    assert_eq!(passes, 5, "one report per genus 2..=6:\n{text}");
    assert!(text.contains("certificate 1/2880 nonzero"));
    assert!(text.ends_with("5 checks: all passed\n"));
}

#[test]
fn verify_json_parses_and_passes() {
    let out = tautring(&[
        "verify",
        "--suite",
        "eq4",
        "--max-genus",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rows = rows.as_array().expect("array");
    assert_eq!(rows.len(), 5);
    for row in rows {
        assert_eq!(row["passed"], serde_json::Value::Bool(true));
        assert_eq!(row["check"], "eq4");
        // Exact equality of the canonical strings.
        assert_eq!(row["expected"], row["computed"]);
    }
}

#[test]
fn table_json_rationals_round_trip() {
    let out = tautring(&["table", "--max-genus", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    for row in rows.as_array().expect("array") {
        let value = row["value"].as_str().expect("value string");
        let parsed: tautring_core::Rational = value.parse().expect("parses back");
        assert_eq!(parsed.to_canonical_string(), value);
    }
}

#[test]
fn table_csv_contains_known_rows() {
    let out = tautring(&["table", "--max-genus", "1", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("genus,indices,value"));
    assert!(text.contains("\n1,1,1/24\n"), "one-point row:\n{text}");
    assert!(text.contains("\n1,1 1,1/24\n"), "two-point row:\n{text}");
    assert!(text.contains("\n1,1 1 1,1/12\n"), "three-point row:\n{text}");
    assert!(text.contains("\n0,0 0 0,1\n"), "genus-zero row:\n{text}");
}

#[test]
fn tau_table_flag_matches_table_subcommand() {
    let a = tautring(&["tau", "--table", "--max-genus", "2"]);
    let b = tautring(&["table", "--max-genus", "2"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn bernoulli_text_values() {
    let out = tautring(&["bernoulli", "--max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("b_0 = 1\n"));
    assert!(text.contains("b_2 = 1/6\n"));
    assert!(text.contains("b_3 = 0\n"));
    assert!(text.contains("b_4 = -1/30\n"));
}

#[test]
fn bernoulli_csv_shape() {
    let out = tautring(&["bernoulli", "--max", "3", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "k,value\n0,1\n1,-1/2\n2,1/6\n3,0\n"
    );
}

#[test]
fn hodge_single_genus() {
    let out = tautring(&["hodge", "--genus", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 4);

    let out = tautring(&["hodge", "--genus", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["verify", "--suite", "eq5", "--max-genus", "4", "--format", "json"],
        vec!["table", "--max-genus", "3", "--format", "csv"],
        vec!["hodge", "--max-genus", "3", "--format", "json"],
    ] {
        let first = tautring(&args);
        let second = tautring(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
    }
}

#[test]
fn telescope_param_is_csv_quoted() {
    let out = tautring(&[
        "verify",
        "--suite",
        "telescope",
        "--max-genus",
        "2",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    // The parameter "g=1,k=1" contains a comma and must arrive quoted.
    assert!(text.contains("telescope,\"g=1,k=1\",0,0,true"), "{text}");
}
