//! End-to-end tests of the command-line interface: exit codes, report
//! shapes, and byte-for-byte determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_equihom")
}

fn run(args: &[&str]) -> Output {
    Command::new(binary())
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

fn parse_stdout(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn homology_of_three_points_under_s3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "points.json",
        r#"{"n":3,"facets":[[1],[2],[3]],"void":false}"#,
    );
    let out = run(&["homology", "--input", &input, "--group", "symmetric:3"]);
    let report = parse_stdout(&out);
    assert_eq!(report["betti"]["0"], 2);
    assert_eq!(report["rows"][0]["degree"], 0);
    assert_eq!(
        report["rows"][0]["values"][0],
        serde_json::json!(["2", "0", "-1"])
    );
    assert_eq!(report["pass"], true);
}

#[test]
fn homology_of_matroid_file_with_trivial_group() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "u23.json",
        r#"{"n":3,"bases":[[1,2],[1,3],[2,3]]}"#,
    );
    let out = run(&["homology", "--input", &input]);
    let report = parse_stdout(&out);
    // Independence complex of U_{2,3} is the triangle boundary.
    assert_eq!(report["betti"]["1"], 1);
}

#[test]
fn verify_main_on_k4_with_edge_action() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "k4.json",
        r#"{"vertices":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    );
    let out = run(&[
        "verify",
        "main",
        "--input",
        &input,
        "--group",
        "edge-action:4",
        "--method",
        "both",
    ]);
    let report = parse_stdout(&out);
    assert_eq!(report["pass"], true);
    assert_eq!(report["support"], serde_json::json!([1]));
    assert_eq!(report["mobius"], "-6");
}

#[test]
fn verify_duality_with_generator_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "complex.json",
        r#"{"n":8,"facets":[[1,2],[3,4],[5,6],[7,8],[1,3],[2,4]],"void":false}"#,
    );
    let group = write(dir.path(), "group.json", "[[2,1,4,3,5,6,7,8]]");
    let out = run(&[
        "verify", "duality", "--input", &input, "--group", &group, "--method", "exact",
    ]);
    let report = parse_stdout(&out);
    assert_eq!(report["pass"], true);
    assert_eq!(report["group"]["order"], 2);
}

#[test]
fn verify_crosscut_on_boolean_atoms() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "b3.json", r#"{"n":3,"bases":[[1,2,3]]}"#);
    let out = run(&[
        "verify",
        "crosscut",
        "--input",
        &input,
        "--group",
        "symmetric:3",
        "--method",
        "both",
    ]);
    let report = parse_stdout(&out);
    assert_eq!(report["pass"], true);
}

#[test]
fn verify_arrangement_braid() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "braid3.json",
        r#"{"rows":2,"columns":[[1,-1],[1,0],[0,1]]}"#,
    );
    let out = run(&[
        "verify",
        "arrangement",
        "--input",
        &input,
        "--group",
        "edge-action:3",
        "--method",
        "both",
    ]);
    let report = parse_stdout(&out);
    assert_eq!(report["pass"], true);
    assert_eq!(report["dimension"], "2");
}

#[test]
fn complete_graph_command() {
    let out = run(&["complete-graph", "4"]);
    let report = parse_stdout(&out);
    assert_eq!(report["pass"], true);
    assert_eq!(report["dimension"], "6");
    assert_eq!(report["decomposition"]["2,1,1"], 1);
    assert_eq!(report["decomposition"]["3,1"], 1);
}

#[test]
fn decompose_command() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "chi.json",
        r#"{"m":3,"values":{"1,1,1":"2","2,1":"0","3":"-1"}}"#,
    );
    let out = run(&["decompose", "--input", &input]);
    let report = parse_stdout(&out);
    assert_eq!(report["multiplicities"], serde_json::json!({"2,1": 1}));

    let sign = write(
        dir.path(),
        "sign4.json",
        r#"{"m":4,"values":{"1,1,1,1":"1","2,1,1":"-1","2,2":"1","3,1":"1","4":"-1"}}"#,
    );
    let out = run(&["decompose", "--input", &sign, "4"]);
    let report = parse_stdout(&out);
    assert_eq!(report["multiplicities"], serde_json::json!({"1,1,1,1": 1}));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{not json");
    let out = run(&["homology", "--input", &bad]);
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.path().join("missing.json").to_string_lossy().into_owned();
    let out = run(&["homology", "--input", &missing]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validation_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    // Degree mismatch between the group and the complex.
    let input = write(
        dir.path(),
        "points.json",
        r#"{"n":3,"facets":[[1],[2],[3]],"void":false}"#,
    );
    let out = run(&["homology", "--input", &input, "--group", "symmetric:4"]);
    assert_eq!(out.status.code(), Some(3));
    // Non-automorphism generators.
    let group = write(dir.path(), "group.json", "[[2,3,1]]");
    let path = write(
        dir.path(),
        "path.json",
        r#"{"n":3,"facets":[[1,2],[2,3]],"void":false}"#,
    );
    let out = run(&["homology", "--input", &path, "--group", &group]);
    assert_eq!(out.status.code(), Some(3));
    // Bases violating the exchange axiom.
    let bad_matroid = write(dir.path(), "bad.json", r#"{"n":4,"bases":[[1,2],[3,4]]}"#);
    let out = run(&["verify", "main", "--input", &bad_matroid]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "k4.json",
        r#"{"vertices":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    );
    let args = [
        "verify",
        "main",
        "--input",
        &input,
        "--group",
        "edge-action:4",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "byte-for-byte determinism");
}

#[test]
fn output_file_matches_stdout_json() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "points.json",
        r#"{"n":3,"facets":[[1],[2],[3]],"void":false}"#,
    );
    let outfile = dir.path().join("report.json");
    let out = run(&[
        "homology",
        "--input",
        &input,
        "--group",
        "symmetric:3",
        "--output",
        outfile.to_string_lossy().as_ref(),
        "--json",
    ]);
    let stdout_report = parse_stdout(&out);
    let file_report: Value =
        serde_json::from_str(&fs::read_to_string(&outfile).unwrap()).unwrap();
    assert_eq!(stdout_report, file_report);
    assert!(stdout_report["input_hash"].as_str().unwrap().len() == 64);
}
