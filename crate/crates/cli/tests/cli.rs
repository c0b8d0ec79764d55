use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn csf(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csf"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    serde_json::from_str(text.lines().last().unwrap()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const TRIANGLE: &str = r#"{"vertices":[{"id":0,"weight":1},{"id":1,"weight":1},{"id":2,"weight":1}],
    "edges":[[0,1],[1,2],[0,2]]}"#;

#[test]
fn compute_triangle_in_e() {
    let dir = TempDir::new().unwrap();
    let file = write(&dir, "tri.json", TRIANGLE);
    let out = csf(&["compute", &file, "--basis", "e"], dir.path());
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["basis"], "e");
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([3]));
    assert_eq!(v["terms"][0]["num"], 6);
}

#[test]
fn compute_anticlique_and_loop() {
    let dir = TempDir::new().unwrap();
    let anti = write(&dir, "anti.json", r#"{"vertices":[{"id":4,"weight":1},{"id":9,"weight":3}],"edges":[]}"#);
    for engine in ["all", "stable", "subsets", "delcon"] {
        let out = csf(&["compute", &anti, "--engine", engine], dir.path());
        assert!(out.status.success());
        let v = stdout_json(&out);
        assert_eq!(v["terms"][0]["partition"], serde_json::json!([3, 1]));
    }
    let looped = write(
        &dir,
        "loop.json",
        r#"{"vertices":[{"id":0,"weight":2},{"id":1,"weight":1}],"edges":[[0,1],[1,1]]}"#,
    );
    let v = stdout_json(&csf(&["compute", &looped], dir.path()));
    assert_eq!(v["degree"], 3);
    assert!(v["terms"].as_array().unwrap().is_empty());
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", "{\"vertices\": [");
    assert_eq!(csf(&["compute", &bad], dir.path()).status.code(), Some(2));
    assert_eq!(csf(&["compute", "missing.json"], dir.path()).status.code(), Some(2));
    assert_eq!(csf(&["verify", "nonsense"], dir.path()).status.code(), Some(2));
    assert_eq!(csf(&["frobnicate"], dir.path()).status.code(), Some(2));
    let tri = write(&dir, "tri.json", TRIANGLE);
    assert_eq!(csf(&["compute", &tri, "--basis", "q"], dir.path()).status.code(), Some(2));
}

#[test]
fn verify_streams_reports_and_summary() {
    let dir = TempDir::new().unwrap();
    let out = csf(&["verify", "fig1"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["pass"], true);
    assert_eq!(lines[1]["failed"], 0);

    let out = csf(&["verify", "involution", "--n", "3", "--maxw", "2"], dir.path());
    assert!(out.status.success());
    assert!(stdout_json(&out)["summary"]["involution"]["pass"].as_u64().unwrap() > 0);
    assert!(!dir.path().join("csf-witnesses").exists());
}

#[test]
fn verify_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let args = ["verify", "engines", "--n", "5", "--maxw", "2", "--seed", "11", "--count", "25"];
    let a = csf(&args, dir.path());
    let b = csf(&args, dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout_json(&a)["total"], 25);
}

#[test]
fn convert_round_trip() {
    let dir = TempDir::new().unwrap();
    let p2 = write(
        &dir,
        "p2.json",
        r#"{"basis":"p","degree":2,"terms":[{"partition":[2],"num":1,"den":1}]}"#,
    );
    let out = csf(&["convert", &p2, "--basis", "e"], dir.path());
    assert!(out.status.success());
    let e = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(e.trim()).unwrap();
    // p_2 = e_(1,1) - 2 e_(2)
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([2]));
    assert_eq!(v["terms"][0]["num"], -2);
    assert_eq!(v["terms"][1]["partition"], serde_json::json!([1, 1]));
    let back = write(&dir, "e.json", e.trim());
    let v = stdout_json(&csf(&["convert", &back, "--basis", "p"], dir.path()));
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
}

#[test]
fn tree_search_finds_single_weighted_pair() {
    let dir = TempDir::new().unwrap();
    let out = csf(&["search-trees", "--n", "5", "--maxw", "3"], dir.path());
    assert!(out.status.success());
    let v = stdout_json(&out);
    let collisions = v["collisions"].as_array().unwrap();
    assert_eq!(collisions.len(), 1);
    assert_eq!(collisions[0]["same_underlying_tree"], true);
    assert_eq!(v["non_isomorphic_underlying"], 0);
    let two = stdout_json(&csf(&["search-trees", "--n", "2", "--maxw", "3"], dir.path()));
    assert!(two["collisions"].as_array().unwrap().is_empty());
}

#[test]
fn oriented_file_is_accepted() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "p3.json",
        r#"{"vertices":[{"id":0,"weight":1},{"id":1,"weight":1},{"id":2,"weight":1}],
            "edges":[[1,2],[0,1]],"orientation":[[1,2],[0,1]]}"#,
    );
    let out = csf(&["compute", &f, "--pretty"], dir.path());
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("p(2,1)"));
}
