use serde_json::Value;
use std::path::PathBuf;
use std::process::Command;

fn graph_file(dir: &tempfile::TempDir, name: &str, json: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, json).unwrap();
    path
}

fn run(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_treeconn")).args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let body = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (body, code)
}

const C5: &str = r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]}"#;
const P3: &str = r#"{"n":3,"edges":[[0,1],[1,2]]}"#;

#[test]
fn analyze_reports_omega_2_of_c5() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = graph_file(&dir, "c5.json", C5);
    let (body, code) = run(&["analyze", c5.to_str().unwrap(), "--m", "2"]);
    assert_eq!(code, 0);
    assert_eq!(body["Omega"]["2"], "5/2");
    assert_eq!(body["omega"], 1);
    assert_eq!(body["toughness"], "1");
}

#[test]
fn pack_c5_is_deficient() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = graph_file(&dir, "c5.json", C5);
    let (body, code) = run(&["pack", c5.to_str().unwrap(), "--m", "2"]);
    assert_eq!(code, 2);
    assert_eq!(body["status"], "deficient");
    assert_eq!(body["partition"].as_array().unwrap().len(), 5);
}

#[test]
fn f_walk_on_p3() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = graph_file(&dir, "p3.json", P3);
    let (body, code) = run(&["f-walk", p3.to_str().unwrap(), "--f", "2", "--matching", "0"]);
    assert_eq!(code, 0);
    assert_eq!(body["visits"], serde_json::json!([1, 2, 1]));
    let (body, code) = run(&["f-walk", p3.to_str().unwrap(), "--f", "1"]);
    assert_eq!(code, 2);
    assert_eq!(body["certificate"]["S"], serde_json::json!([1]));
}

#[test]
fn bounded_tree_with_derived_bounds_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = graph_file(&dir, "c5.json", C5);
    let dot = dir.path().join("t.dot");
    let (body, code) = run(&[
        "bounded-tree",
        c5.to_str().unwrap(),
        "--derive",
        r#"{"kind":"k-edge-connected","k":2,"m":1}"#,
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(body["edges"].as_array().unwrap().len(), 4);
    assert!(std::fs::read_to_string(dot).unwrap().contains("penwidth"));
}

#[test]
fn bounded_tree_certificate_and_explicit_eta() {
    let dir = tempfile::tempdir().unwrap();
    let star = graph_file(&dir, "star.json", r#"{"n":4,"edges":[[0,1],[0,2],[0,3]]}"#);
    let (body, code) = run(&["bounded-tree", star.to_str().unwrap(), "--eta", "2", "--lambda", "0"]);
    assert_eq!(code, 2);
    assert_eq!(body["certificate"]["S"], serde_json::json!([0]));
    let (_, code) = run(&["bounded-tree", star.to_str().unwrap(), "--eta", r#"["3","2","2","2"]"#]);
    assert_eq!(code, 0);
}

#[test]
fn parity_forest_and_trail() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = graph_file(&dir, "c5.json", C5);
    let (body, code) = run(&["parity-forest", c5.to_str().unwrap(), "--f", "1", "--Q", "0,1"]);
    assert_eq!(code, 0);
    assert_eq!(body["status"], "solution");
    let (body, code) = run(&["f-trail", c5.to_str().unwrap(), "--f", "1"]);
    assert_eq!(code, 2);
    assert_eq!(body["status"], "deficient");
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "--kind", "k-tree-connected", "--n", "6", "--k", "2", "--seed", "1"]);
    let b = run(&["gen", "--kind", "k-tree-connected", "--n", "6", "--k", "2", "--seed", "1"]);
    assert_eq!(a, b);
    assert_eq!(a.1, 0);
    assert_eq!(a.0["n"], 6);
}

#[test]
fn verify_runs_a_suite() {
    let (body, code) = run(&["verify", "--suite", "parity-forests", "--seeds", "0..10"]);
    assert_eq!(code, 0);
    assert_eq!(body["passed"], true);
    assert_eq!(body["reports"][0]["checked"], 10);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["nope"]).1, 1);
    assert_eq!(run(&["verify", "--suite", "nope"]).1, 1);
    assert_eq!(run(&["analyze", "/definitely/missing.json"]).1, 1);
    assert_eq!(run(&["--help"]).1, 0);
}
