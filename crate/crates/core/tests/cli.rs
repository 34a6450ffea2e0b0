use std::process::{Command, Output};

use serde_json::Value;

const GROUPS: [&str; 7] = ["SO2", "O2", "SO3", "Sp1", "SU2xSU2", "SU3", "Sp2"];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockspace")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn json_validates_and_matches_csv() {
    let schema: Value = serde_json::from_str(blockspace::output::SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for g in GROUPS {
        let json: Value = serde_json::from_str(&stdout(&["classify", "--group", g, "--format", "json", "--ledger"])).unwrap();
        let errors: Vec<String> = validator.iter_errors(&json).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{g}: {errors:?}");
        let rows = json["rows"].as_array().unwrap().len();
        let csv = stdout(&["classify", "--group", g, "--format", "csv"]);
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(reader.records().count(), rows, "{g}");
    }
}

#[test]
fn output_is_deterministic() {
    for format in ["table", "json", "csv"] {
        let args = ["classify", "--group", "Sp2", "--format", format, "--ledger"];
        assert_eq!(run(&args).stdout, run(&args).stdout, "{format}");
    }
}

#[test]
fn row_counts() {
    let rows = |g: &str| {
        let v: Value = serde_json::from_str(&stdout(&["classify", "--group", g, "--format", "json"])).unwrap();
        v["rows"].as_array().unwrap().len()
    };
    assert_eq!(rows("Sp2"), 31);
    assert_eq!(rows("SO3"), 7);
}

#[test]
fn summary_lines() {
    assert_eq!(stdout(&["summary", "--group", "Sp2"]), "Rank 2: 2^6 1^6 0^5 (t1 m2 f3); Rank 1: 1^6 0^7\n");
    assert!(stdout(&["summary", "--group", "SU3"]).ends_with("Rank 0: 0^7\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "--group", "XX"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--group", "Sp2", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "weyl-subgroups", "E8"]).status.code(), Some(2));
    for args in [
        &["oracle", "lemma-counting"][..],
        &["oracle", "weyl-subgroups", "D8"],
        &["oracle", "weyl-subgroups", "V4"],
        &["oracle", "weyl-subgroups", "D6"],
        &["oracle", "rep-decompose", "D8", "C4"],
    ] {
        assert_eq!(run(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn oracle_reports() {
    let counting = stdout(&["oracle", "lemma-counting"]);
    assert!(counting.contains("total 10: 4 F×1, 2 graph, 4 F×C_2"));
    assert!(stdout(&["oracle", "weyl-subgroups", "D8"]).contains("8 classes, 10 subgroups, 6 reflection classes"));
    assert!(stdout(&["oracle", "rep-decompose", "D8", "C4"]).contains(": (0, 1)"));
}

#[test]
fn divergence_listing() {
    let all = stdout(&["paper-diff"]);
    assert!(all.contains("(T^2, D_4)") && all.contains("computed:  0+2"));
    assert!(all.contains("computed:  t1 m1 f0"));
    assert!(all.contains("(T_long, 1×F)"));
    for g in ["SO2", "O2", "SO3", "Sp1"] {
        let out = run(&["paper-diff", "--group", g]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), "Recorded divergences from published values (0)\n");
    }
}
