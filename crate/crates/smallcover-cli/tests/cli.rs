//! End-to-end command tests: pipelines, file formats, determinism and exit
//! codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const P048_POINTS: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../smallcover/tests/fixtures/p048_points.json"
));
const P048_POLYTOPE: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../smallcover/tests/fixtures/p048_polytope.json"
));
const P148_POLYTOPE: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../smallcover/tests/fixtures/p148_polytope.json"
));

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_smallcover"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&run_ok(args)).expect("valid JSON output")
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn pipeline_enumerate_classify_lift() {
    let dir = tempfile::tempdir().unwrap();
    let polytope = write(dir.path(), "p048.json", P048_POLYTOPE);
    let matrices = dir.path().join("mats.json");

    let out = run(&[
        "enumerate",
        polytope.to_str().unwrap(),
        "--output",
        matrices.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let mats: Value = serde_json::from_str(&std::fs::read_to_string(&matrices).unwrap()).unwrap();
    assert_eq!(mats["ring"], "Z2");
    assert_eq!(mats["matrices"].as_array().unwrap().len(), 7);

    let classes = json(&[
        "classify",
        polytope.to_str().unwrap(),
        matrices.to_str().unwrap(),
    ]);
    assert_eq!(classes["aut_order"], 4);
    assert_eq!(classes["orbits"].as_array().unwrap().len(), 3);

    let lifts = json(&[
        "lift",
        polytope.to_str().unwrap(),
        matrices.to_str().unwrap(),
        "--bound",
        "1",
    ]);
    assert_eq!(lifts["ring"], "Z");
    assert_eq!(lifts["bound"], 1);
    let entries = lifts["lifts"].as_array().unwrap();
    assert_eq!(entries.len(), 7);
    assert!(
        entries.iter().all(|e| e.get("matrix").is_some()),
        "all lift at bound 1"
    );
}

#[test]
fn hull_of_moment_curve_matches_gen_cyclic() {
    let dir = tempfile::tempdir().unwrap();
    // t = 1..7 on the moment curve in R^4
    let coords: Vec<Vec<String>> = (1i64..=7)
        .map(|t| (1..=4).map(|k| t.pow(k).to_string()).collect())
        .collect();
    let points = serde_json::json!({ "dim": 4, "points": coords });
    let points_file = write(dir.path(), "moment.json", &points.to_string());

    let hull = json(&["hull", points_file.to_str().unwrap()]);
    let cyclic = json(&["gen", "cyclic", "4", "7"]);
    assert_eq!(hull["dim"], cyclic["dim"]);
    assert_eq!(hull["num_facets"], cyclic["num_facets"]);
    assert_eq!(hull["vertices"], cyclic["vertices"]);
}

#[test]
fn hull_of_p048_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let points_file = write(dir.path(), "p048_points.json", P048_POINTS);
    let hull = json(&["hull", points_file.to_str().unwrap()]);
    assert_eq!(hull["num_facets"], 8);
    assert_eq!(hull["vertices"].as_array().unwrap().len(), 20);
}

#[test]
fn outputs_are_deterministic_across_workers_and_runs() {
    let dir = tempfile::tempdir().unwrap();
    let polytope = write(dir.path(), "p148.json", P148_POLYTOPE);
    let base = run_ok(&["enumerate", polytope.to_str().unwrap()]);
    for _ in 0..2 {
        for workers in ["1", "2", "8"] {
            let out = run_ok(&[
                "enumerate",
                polytope.to_str().unwrap(),
                "--workers",
                workers,
            ]);
            assert_eq!(out, base, "workers = {workers}");
        }
    }
}

#[test]
fn batch_over_the_two_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a_p048.json", P048_POLYTOPE);
    write(dir.path(), "b_p148.json", P148_POLYTOPE);

    let out = run(&["batch", dir.path().to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "file polytope matrices aut_order orbits lifting");
    // 7 matrices over P048 and 3 over P148; the symmetry columns carry the
    // computed group orders and orbit counts (see the acceptance suite's
    // criterion-3 notes on the published values)
    assert_eq!(lines[1], "a_p048.json P048 7 4 3 all_lift");
    assert_eq!(lines[2], "b_p148.json P148 3 2 2 all_lift");

    // the JSON form is deterministic across repeated runs and worker counts
    let first = run_ok(&["batch", dir.path().to_str().unwrap()]);
    let second = run_ok(&["batch", dir.path().to_str().unwrap()]);
    assert_eq!(first, second);
    for workers in ["2", "8"] {
        let parallel = run_ok(&["batch", dir.path().to_str().unwrap(), "--workers", workers]);
        assert_eq!(parallel, first, "workers = {workers}");
    }
}

#[test]
fn batch_reports_bad_files_and_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a_good.json", P148_POLYTOPE);
    write(dir.path(), "b_bad.json", "{ not json ");

    let out = run(&["batch", dir.path().to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(1), "partial failure exit code");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("a_good.json P148 3")));
    assert!(text.lines().any(|l| l.starts_with("b_bad.json error:")));
}

#[test]
fn batch_of_empty_directory_is_empty_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["batch", dir.path().to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1, "header only");
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{ not json ");
    let out = run(&["enumerate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.path().join("missing.json");
    let out = run(&["enumerate", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // duplicate vertex sets carry a diagnostic naming the duplicate
    let dup = write(
        dir.path(),
        "dup.json",
        r#"{"name":"d","dim":2,"num_facets":3,"vertices":[[0,1],[1,2],[0,2],[1,2]]}"#,
    );
    let out = run(&["enumerate", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("duplicate vertex set [1, 2]"), "stderr: {err}");
}

#[test]
fn simplex_has_one_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let simplex5 = smallcover::SimplePolytope::simplex(5);
    let file = write(
        dir.path(),
        "simplex5.json",
        &smallcover::io::polytope_to_json(&simplex5),
    );
    let mats = json(&["enumerate", file.to_str().unwrap()]);
    assert_eq!(mats["matrices"].as_array().unwrap().len(), 1);
}

#[test]
fn blocked_polytope_enumerates_to_zero_without_search() {
    let dir = tempfile::tempdir().unwrap();
    let blocked = run_ok(&["gen", "cyclic", "4", "16"]);
    let file = write(dir.path(), "c416.json", &blocked);
    let out = run(&["enumerate", file.to_str().unwrap()]);
    assert!(out.status.success());
    let mats: Value = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(mats["matrices"].as_array().unwrap().len(), 0);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("obstruction"), "stderr: {err}");
}

#[test]
fn text_format_prints_matrix_rows() {
    let dir = tempfile::tempdir().unwrap();
    let polytope = write(dir.path(), "p048.json", P048_POLYTOPE);
    let text = run_ok(&["enumerate", polytope.to_str().unwrap(), "--format", "text"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "polytope P048");
    assert_eq!(lines[1], "count 7");
    // matrices print as rows of space-separated bits
    let first_row = lines[3];
    assert_eq!(first_row.split(' ').count(), 8);
    assert!(first_row.split(' ').all(|t| t == "0" || t == "1"));
}

#[test]
fn invariants_report_shape() {
    let dir = tempfile::tempdir().unwrap();
    let polytope = write(dir.path(), "p048.json", P048_POLYTOPE);
    let report = json(&["invariants", polytope.to_str().unwrap()]);
    assert_eq!(report["f"], serde_json::json!([1, 8, 28, 40, 20]));
    assert_eq!(report["h"], serde_json::json!([1, 4, 10, 4, 1]));
    assert_eq!(report["neighborly_k"], 2);
    assert_eq!(report["chi"], 8);
    assert_eq!(report["obstruction_2n"], false);
    assert_eq!(report["betti"], report["h"]);
}

#[test]
fn gen_cyclic_counts() {
    let c47 = json(&["gen", "cyclic", "4", "7"]);
    assert_eq!(c47["num_facets"], 7);
    assert_eq!(c47["vertices"].as_array().unwrap().len(), 14);

    let c69 = json(&["gen", "cyclic", "6", "9"]);
    assert_eq!(c69["num_facets"], 9);
    assert_eq!(c69["vertices"].as_array().unwrap().len(), 30);

    let out = run(&["gen", "cyclic", "4", "4"]);
    assert_eq!(out.status.code(), Some(2), "m > n required");
}
