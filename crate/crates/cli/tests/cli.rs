use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn ncfdb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncfdb")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

const EXAMPLE: &str = r#"{"n": 2, "order": 4, "coeffs": [
  {"i": 1, "w": "11", "value": [{"c": "1", "word": ["a"]}]},
  {"i": 1, "w": "22", "value": [{"c": "1", "word": ["b"]}]}
]}"#;

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn antipode_of_grade_one_generator() {
    let o = ncfdb(&["antipode", "Y^1_12", "--algorithm", "recursive"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "-Y^1_12\n");
}

#[test]
fn antipode_all_algorithms_agree() {
    let o = ncfdb(&["antipode", "Y^1_1111", "--n", "1", "--all"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("5/5 equal\n"), "{}", stdout(&o));
    let o = ncfdb(&["antipode", "Y^2_1212", "--all", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], 5);
}

#[test]
fn antipode_latex_and_json() {
    let o = ncfdb(&["antipode", "Y^1_1234", "--n", "4", "--algorithm", "recursive", "--format", "latex"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("-Y_{1234}^{1} + "), "{out}");
    assert!(out.contains("Y_{12}^{2} Y_{234}^{1}"));
    let o = ncfdb(&["antipode", "Y^1_123", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_array());
}

#[test]
fn antipode_usage_errors() {
    assert_eq!(code(&ncfdb(&["antipode", "Y^1_1234", "--n", "2"])), 2);
    assert_eq!(code(&ncfdb(&["antipode", "Y^1_1"])), 2);
    assert_eq!(code(&ncfdb(&["antipode", "X^1_12"])), 2);
    assert_eq!(code(&ncfdb(&["antipode", "Y^1_12", "--algorithm", "bogus"])), 2);
    assert_eq!(code(&ncfdb(&["frobnicate"])), 2);
}

#[test]
fn tree_counts() {
    let o = ncfdb(&["trees", "1111", "1", "--n", "1", "--class", "layered", "count"]);
    assert_eq!((code(&o), stdout(&o)), (0, "13\n".to_string()));
    let o = ncfdb(&["trees", "1111", "1", "--n", "1", "--class", "reduced", "count"]);
    assert_eq!(stdout(&o), "11\n");
    let o = ncfdb(&["trees", "11", "1", "--n", "1", "--class", "ost", "list"]);
    assert_eq!(stdout(&o), "1[1,1]\n");
    let o = ncfdb(&["trees", "1111", "1", "--n", "1", "census"]);
    assert_eq!(stdout(&o), "layered 13  reduced 11  simple 12  ost 11\n");
    let o = ncfdb(&["trees", "12", "1", "--class", "rt", "list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn tree_usage_errors() {
    assert_eq!(code(&ncfdb(&["trees", "13", "1", "--n", "2", "count"])), 2);
    assert_eq!(code(&ncfdb(&["trees", "11", "1", "--class", "weird", "count"])), 2);
    assert_eq!(code(&ncfdb(&["trees", "1111111", "1", "count"])), 2);
    assert_eq!(code(&ncfdb(&["trees", "11", "1", "count", "--format", "latex"])), 2);
}

#[test]
fn verify_suites_pass() {
    for (suite, leaves) in [("cancellation", "5"), ("bijection", "5"), ("hopf-axioms", "4"), ("duality", "4")] {
        let o = ncfdb(&["verify", suite, "--max-leaves", leaves, "--n", "2"]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("pass\n"));
    }
    let o = ncfdb(&["verify", "bijection", "--max-leaves", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn verify_usage_errors() {
    assert_eq!(code(&ncfdb(&["verify", "nonsense"])), 2);
    assert_eq!(code(&ncfdb(&["verify", "bijection", "--max-leaves", "7"])), 2);
}

#[test]
fn left_and_right_inverses_differ_at_fourth_order() {
    let f = file(EXAMPLE);
    let path = f.path().to_str().unwrap();
    let o = ncfdb(&["invert", path, "--side", "both", "--order", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("first disagreement at order 4\n"), "{}", stdout(&o));
    let o = ncfdb(&["invert", path, "--side", "both", "--order", "3"]);
    assert!(stdout(&o).ends_with("identical through order 3\n"));
}

#[test]
fn identity_and_random_one_color_series() {
    let f = file(r#"{"n": 2, "order": 3, "coeffs": []}"#);
    let o = ncfdb(&["invert", f.path().to_str().unwrap(), "--side", "both"]);
    assert!(stdout(&o).ends_with("identical through order 3\n"));
    let o = ncfdb(&["invert", "--random", "--n", "1", "--seed", "11", "--side", "both", "--order", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("identical through order 5\n"), "{}", stdout(&o));
}

#[test]
fn invert_reads_stdin_and_emits_json() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ncfdb"))
        .args(["invert", "-", "--side", "left", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(EXAMPLE.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["coeffs"][0]["w"], "11");
}

#[test]
fn candidate_inverses_are_checked() {
    let f = file(EXAMPLE);
    let path = f.path().to_str().unwrap();
    let left = ncfdb(&["invert", path, "--side", "left", "--format", "json"]);
    let right = ncfdb(&["invert", path, "--side", "right", "--format", "json"]);
    let left_file = file(&stdout(&left));
    let right_file = file(&stdout(&right));
    let check = |side: &str, cand: &NamedTempFile| {
        code(&ncfdb(&["invert", path, "--side", side, "--candidate", cand.path().to_str().unwrap()]))
    };
    assert_eq!(check("left", &left_file), 0);
    assert_eq!(check("right", &right_file), 0);
    assert_eq!(check("left", &right_file), 1);
    assert_eq!(check("right", &left_file), 1);
    assert_eq!(check("both", &left_file), 2);
}

#[test]
fn invert_input_errors() {
    let non_tangent =
        file(r#"{"n": 1, "order": 2, "coeffs": [{"i": 1, "w": "1", "value": [{"c": "2", "word": []}]}]}"#);
    assert_eq!(code(&ncfdb(&["invert", non_tangent.path().to_str().unwrap()])), 2);
    let malformed = file("{not json");
    assert_eq!(code(&ncfdb(&["invert", malformed.path().to_str().unwrap()])), 2);
    assert_eq!(code(&ncfdb(&["invert", "/nonexistent/series.json"])), 2);
    assert_eq!(code(&ncfdb(&["invert"])), 2);
    let f = file(EXAMPLE);
    assert_eq!(code(&ncfdb(&["invert", f.path().to_str().unwrap(), "--n", "3"])), 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["invert", "--random", "--n", "2", "--seed", "5", "--order", "3", "--format", "json"];
    assert_eq!(stdout(&ncfdb(&args)), stdout(&ncfdb(&args)));
    let o = ncfdb(&["antipode", "Y^1_1212", "--all"]);
    assert_eq!(stdout(&o), stdout(&ncfdb(&["antipode", "Y^1_1212", "--all"])));
}
