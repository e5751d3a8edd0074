use std::process::{Command, Output};
use std::sync::Arc;

use qschubert_freealg::NcElement;
use qschubert_rootdata::RootDatum;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschubert")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn roots_of_a2() {
    let v = json(&["roots", "--type", "A2", "--word", "1,2,1", "--format", "json"]);
    let degs: Vec<Value> = v["root_vectors"].as_array().unwrap().iter().map(|r| r["degree"].clone()).collect();
    assert_eq!(degs, vec![serde_json::json!([1, 0]), serde_json::json!([1, 1]), serde_json::json!([0, 1])]);
}

#[test]
fn quantum_matrix_relation() {
    let o = run(&["relations", "--type", "A3", "--word", "2,1,3,2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("X_1 X_4 - v^0 X_4 X_1 = (-v^2 + v^-2) * (X^(0,1,1,0))"), "{text}");
    assert_eq!(text.lines().filter(|l| l.ends_with("= 0")).count(), 5);
}

#[test]
fn c2_basis_names_and_round_trip() {
    let args = ["basis", "--type", "C2", "--word", "2,1,2,1", "--degree-bound", "4", "--format", "json"];
    let v = json(&args);
    let d = Arc::new(RootDatum::preset("C2").unwrap());
    let mut names = Vec::new();
    for s in v["slices"].as_array().unwrap() {
        for e in s["elements"].as_array().unwrap() {
            assert_eq!(e["certificate"]["passed"], Value::Bool(true));
            names.push(e["name"].as_str().unwrap().to_string());
            let x = NcElement::from_json_value(&d, e["element"].clone()).unwrap();
            assert_eq!(x.to_json_value(), e["element"]);
            assert_eq!(x.degree().unwrap().0, serde_json::from_value::<Vec<i64>>(s["degree"].clone()).unwrap());
        }
    }
    for n in ["E_{12}", "E_{1^{2}2}", "E_{21}", "E_{21^{2}}", "E_{121}", "E_{21^{2}2}"] {
        assert!(names.iter().any(|x| x == n), "{n} missing from {names:?}");
    }
    // byte-identical reruns
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["roots", "--type", "A2", "--word", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--type", "A2"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--type", "X9", "--word", "1"]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--type", "A2", "--word", "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["basis", "--type", "A2", "--word", "1", "--degree-bound", "0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate", "--type", "A2"]).status.code(), Some(2));
    assert_eq!(run(&["compare", "--type", "A2", "--word", "1,2", "--word2", "2,1"]).status.code(), Some(2));
    assert_eq!(run(&["embed", "--type", "A2", "--word", "1,2", "--word2", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["basis", "--type", "A3", "--word", "1,2,1,3,2,1", "--degree-bound", "12", "--max-words", "1000"])
            .status
            .code(),
        Some(2)
    );
    // -E_1 is signed but not canonical
    assert_eq!(run(&["strings", "--type", "A2", "--element=-E_{1}"]).status.code(), Some(1));
    assert_eq!(run(&["strings", "--type", "A2", "--element", "(2)*E_{1}"]).status.code(), Some(1));
    assert_eq!(run(&["strings", "--type", "A2", "--element", "E_{1}"]).status.code(), Some(0));
}

#[test]
fn commands_on_small_frames() {
    let o = run(&["compare", "--type", "A2", "--word", "1,2,1", "--word2", "2,1,2", "--degree-bound", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["embed", "--type", "A3", "--word", "2", "--word2", "1,3,2", "--degree-bound", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--type", "B2", "--word", "1,2,1,2", "--degree-bound", "3", "--check-level", "full"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&[
        "bischubert",
        "--type",
        "A3",
        "--word",
        "1,2,3,2,1",
        "--word2",
        "1,2,3,2,1",
        "--degree-bound",
        "3",
        "--format",
        "json",
    ]);
    assert!(!v["slices"].as_array().unwrap().is_empty());
    let v = json(&["expand", "--type", "A2", "--word", "1,2,1", "--element", "E_{1 2}", "--format", "json"]);
    assert_eq!(v["components"][0]["degree"], serde_json::json!([1, 1]));
    let o = run(&["expand", "--type", "A2", "--word", "1,2", "--element", "E_{2 1}"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["strings", "--type", "A3", "--element", "E_{2 1 3 2}"]);
    assert!(o.status.code().is_some());
}

#[test]
fn gcm_file_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let gcm = dir.path().join("a2.json");
    std::fs::write(&gcm, RootDatum::preset("A2").unwrap().to_json()).unwrap();
    let cache = dir.path().join("cache");
    let args = ["basis", "--gcm", gcm.to_str().unwrap(), "--word", "1,2,1", "--degree-bound", "3"];
    let first =
        Command::new(env!("CARGO_BIN_EXE_qschubert")).args(args).env("QSCHUBERT_CACHE_DIR", &cache).output().unwrap();
    assert_eq!(first.status.code(), Some(0));
    assert!(std::fs::read_dir(&cache).unwrap().count() > 0);
    let second =
        Command::new(env!("CARGO_BIN_EXE_qschubert")).args(args).env("QSCHUBERT_CACHE_DIR", &cache).output().unwrap();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(run(&args).stdout, first.stdout);
}
