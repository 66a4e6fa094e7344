use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const TERNARY_C: &str = r#"{"a":7,"t":2,"g":[1,1],"b":4,"r":[1,2],"c":2,"h":[]}"#;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chainring"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str], stdin: &str) -> Value {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn classify_ternary_class_c_code() {
    let v = json(&["classify", "--p", "3", "--k", "2"], TERNARY_C);
    assert_eq!(v["class_list"], serde_json::json!(["C", "C'"]));
    assert_eq!(v["profile"], serde_json::json!({"a": 7, "b": 4, "c": 2}));
    assert_eq!(v["size_exponent"], 14);
    assert_eq!(v["class_c"]["case"], 1);
    assert_eq!(v["config"]["params"]["field"]["p"], 3);
}

#[test]
fn emitted_triple_reparses() {
    let v = json(&["classify", "--p", "3", "--k", "2"], TERNARY_C);
    let again = json(&["classify", "--p", "3", "--k", "2"], &v["triple"].to_string());
    assert_eq!(again["triple"], v["triple"]);
}

#[test]
fn job_file_carries_params() {
    let job = format!(r#"{{"params":{{"field":{{"p":3,"m":1}},"k":2,"alpha":1}},"code":{TERNARY_C}}}"#);
    let v = json(&["classify"], &job);
    assert_eq!(v["size_exponent"], 14);
    let twice = run(&["classify", "--p", "3"], &job);
    assert_eq!(twice.status.code(), Some(2));
}

#[test]
fn generators_give_principal_ideal() {
    let v = json(&["classify", "--k", "2"], r#"{"gens":[{"basis":"monomial","layers":[[],[],[1]]}]}"#);
    assert_eq!(v["profile"], serde_json::json!({"a": 4, "b": 4, "c": 0}));
    assert_eq!(v["size_exponent"], 4);
}

#[test]
fn invalid_input_exits_2() {
    let bad = r#"{"a":7,"t":2,"g":[1,1],"b":4,"r":[1,2,1],"c":2,"h":[]}"#;
    let out = run(&["classify", "--p", "3", "--k", "2"], bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("r-degree"));
    assert_eq!(run(&["classify"], r#"{"a":0,"t":0,"g":[],"b":0,"r":[],"c":0,"h":[],"z":1}"#).status.code(), Some(2));
    assert_eq!(run(&["classify"], "not json").status.code(), Some(2));
    assert_eq!(run(&["classify", "--p", "4"], TERNARY_C).status.code(), Some(2));
}

#[test]
fn dual_of_class_c_code_uses_closed_form() {
    let v = json(&["dual", "--p", "3", "--k", "2"], TERNARY_C);
    assert_eq!(v["annihilator_method"], "closed-form");
    assert_eq!(v["annihilator"]["b"], 5);
    assert_eq!(v["size_check"], true);
    assert_eq!(v["selfdual"], false);
}

#[test]
fn dual_of_zero_code_is_everything() {
    let zero = r#"{"a":4,"t":0,"g":[],"b":4,"r":[],"c":4,"h":[]}"#;
    let v = json(&["dual", "--k", "2"], zero);
    assert_eq!(v["dual"], serde_json::json!({"a": 0, "t": 0, "g": [], "b": 0, "r": [], "c": 0, "h": []}));
}

#[test]
fn selfdual_flagged_by_dual() {
    let outside = r#"{"a":4,"t":0,"g":[],"b":2,"r":[],"c":0,"h":[]}"#;
    assert_eq!(json(&["dual", "--k", "2"], outside)["selfdual"], true);
}

#[test]
fn census_k2_has_three_codes() {
    let v = json(&["selfdual", "--mode", "census", "--k", "2"], "");
    assert_eq!(v["total"], 3);
    let csv = run(&["selfdual", "--mode", "census", "--k", "2", "--format", "csv"], "");
    assert_eq!(String::from_utf8_lossy(&csv.stdout).lines().count(), 4);
    assert_eq!(csv.stdout, run(&["selfdual", "--mode", "census", "--k", "2", "--format", "csv"], "").stdout);
}

#[test]
fn count_k3_sums_to_22() {
    let v = json(&["selfdual", "--mode", "count", "--k", "3"], "");
    assert_eq!(v["table"]["total"], 22);
    let rows = v["table"]["rows"].as_array().unwrap();
    assert_eq!(rows.iter().map(|r| r["count"].as_u64().unwrap()).sum::<u64>(), 22);
}

#[test]
fn check_t_zero_is_not_selfdual() {
    let ideal = r#"{"a":2,"t":0,"g":[1],"b":2,"r":[1],"c":2,"h":[]}"#;
    let v = json(&["selfdual", "--k", "2"], ideal);
    assert_eq!(v["selfdual"], false);
    assert_eq!(v["criterion"]["selfdual"], false);
    assert_eq!(v["monomial_criterion"], false);
}

#[test]
fn odd_characteristic_enumeration_is_empty() {
    let v = json(&["selfdual", "--mode", "enumerate", "--p", "3", "--k", "1"], "");
    assert_eq!(v["codes"], serde_json::json!([]));
}

#[test]
fn oracle_suites_agree() {
    let v = json(&["oracle", "--scope", "crosscheck", "--k", "2"], "");
    assert_eq!(v["report"]["mismatches"], serde_json::json!([]));
    assert_eq!(v["report"]["ideal_count"], 59);
    let v = json(&["oracle", "--scope", "ideals", "--p", "3"], "");
    assert_eq!(v["report"]["ideal_count"], 28);
    assert_eq!(v["report"]["mismatches"], serde_json::json!([]));
    let v = json(&["oracle", "--scope", "selfdual", "--k", "3"], "");
    assert_eq!(v["reconciliation"]["scan"], 27);
    assert_eq!(v["report"]["mismatches"], serde_json::json!([]));
}

#[test]
fn delta_is_reduced_and_echoed() {
    let v = json(&["oracle", "--scope", "crosscheck", "--p", "3", "--delta", "2"], "");
    assert_eq!(v["config"]["transform"]["delta0"], serde_json::json!([2]));
    assert_eq!(v["report"]["mismatches"], serde_json::json!([]));
    let triple = run(&["classify", "--p", "3", "--delta", "2"], TERNARY_C);
    assert_eq!(triple.status.code(), Some(2));
    let gens = r#"{"gens":[{"basis":"monomial","layers":[[1,1]]}]}"#;
    assert_eq!(json(&["classify", "--p", "3", "--delta", "2"], gens)["config"]["transform"]["alpha"], serde_json::json!([2]));
}

#[test]
fn budget_exceeded_exits_3() {
    let out = run(&["oracle", "--scope", "ideals", "--k", "3", "--budget", "1000"], "");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn out_file_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["selfdual", "--mode", "count", "--k", "2", "--out", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["table"]["total"], 2);
}
