use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rectcount::report::Report;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn rectcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rectcount")).args(args).env_remove("RECTCOUNT_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn count_worked_example() {
    let m = fixture("example.txt");
    let c = fixture("example_pattern.txt");
    let o = rectcount(&["count", "--matrix", m.to_str().unwrap(), "--pattern", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "direct=1 incl-excl=1 MATCH");
}

#[test]
fn count_all_match_fixture() {
    let m = fixture("all_match.txt");
    let c = fixture("all_match_pattern.txt");
    for method in ["direct", "inclusion-exclusion"] {
        let o = rectcount(&["count", "--matrix", m.to_str().unwrap(), "--pattern", c.to_str().unwrap(), "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o).trim(), "5");
    }
}

#[test]
fn malformed_row_reports_line() {
    let m = fixture("malformed.txt");
    let c = fixture("example_pattern.txt");
    let o = rectcount(&["count", "--matrix", m.to_str().unwrap(), "--pattern", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn count_dimension_mismatch_and_missing_file() {
    let m = fixture("example.txt");
    let c = fixture("all_match_pattern.txt");
    let o = rectcount(&["count", "--matrix", m.to_str().unwrap(), "--pattern", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = rectcount(&["count", "--matrix", "/nonexistent", "--pattern", c.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_klee_grid() {
    let o = rectcount(&["verify", "klee", "--k", "0..40", "--m", "0..40"]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o).lines().nth(1).unwrap().to_owned();
    let cells: Vec<&str> = line.split_whitespace().collect();
    assert_eq!(&cells[..4], ["klee", "PASS", "1681", "0"]);
}

#[test]
fn verify_usage_errors() {
    let o = rectcount(&["verify", "eq7", "--l", "5", "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(rectcount(&["verify", "eq13"]).status.code(), Some(2));
    assert_eq!(rectcount(&["verify", "klee", "--bogus"]).status.code(), Some(2));
    assert_eq!(rectcount(&["verify", "klee", "--l", "1"]).status.code(), Some(2));
    assert_eq!(rectcount(&["verify", "all", "--n", "3"]).status.code(), Some(2));
    assert_eq!(rectcount(&["verify", "pipeline", "--n-max", "11"]).status.code(), Some(2));
    assert_eq!(rectcount(&[]).status.code(), Some(2));
}

#[test]
fn corrupted_evaluation_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let o = rectcount(&["verify", "eq7", "--n", "0..5", "--perturb", "0:1", "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("eq7 counterexample"));
    let report: Report = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(!report.passed());
    assert_eq!(report.failure_count, report.tuples_checked);
    assert_eq!(report.failures.len(), 100);
    let first = &report.failures[0];
    assert_eq!(first.params.values().copied().collect::<Vec<_>>(), vec![0, 0, 0, 0, 0]);
    assert_eq!((first.lhs.as_str(), first.rhs.as_str()), ("1", "2"));
}

#[test]
fn json_report_fields_and_seed() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("counting.json");
    let o = Command::new(env!("CARGO_BIN_EXE_rectcount"))
        .args(["verify", "counting", "--samples", "50", "--json", json.to_str().unwrap()])
        .env("RECTCOUNT_SEED", "4242")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let reports = doc.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    for key in ["check", "grid", "tuples_checked", "failures", "seed", "wall_time_ms", "status"] {
        assert!(reports[1].get(key).is_some(), "{key}");
    }
    assert_eq!(reports[1]["seed"], 4242);
    assert_eq!(reports[1]["tuples_checked"], 50);
    assert_eq!(reports[1]["status"], "PASS");

    let bad = Command::new(env!("CARGO_BIN_EXE_rectcount"))
        .args(["verify", "counting"])
        .env("RECTCOUNT_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let run = |seed: &str| {
        let dir = tempfile::tempdir().unwrap();
        let json = dir.path().join("r.json");
        let o = rectcount(&["verify", "counting", "--seed", seed, "--json", json.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let mut reports: Vec<Report> = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
        reports.iter_mut().for_each(|r| r.wall_time_ms = 0);
        serde_json::to_string(&reports).unwrap()
    };
    assert_eq!(run("17"), run("17"));
}

#[test]
fn bernoulli_routes() {
    for via in [&["--via", "direct"][..], &["--via", "eq11", "--k", "3"], &["--via", "eq12", "--k", "3"]] {
        let mut args = vec!["bernoulli", "4", "--upto", "4"];
        args.extend_from_slice(via);
        let o = rectcount(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), "1 5 11 15 16");
    }
    assert_eq!(rectcount(&["bernoulli", "4", "--upto", "5"]).status.code(), Some(2));
    // Exact decimal output, no exponent notation.
    let o = rectcount(&["bernoulli", "300", "--upto", "300"]);
    let last = stdout(&o).split_whitespace().last().unwrap().to_owned();
    assert_eq!(last.len(), 91);
    assert!(last.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn sweep_lists_tuples() {
    let o = rectcount(&["sweep", "klee", "--k", "2", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k m lhs rhs terms status\n2 3 2 2 3 ok\n");
    let o = rectcount(&["sweep", "prop2_1", "--k", "3", "--perturb", "2:-1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("3 1 0 4 FAIL"));
}

#[test]
fn help_prints_default_grids() {
    let o = rectcount(&["verify", "--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Default grids:"));
    assert!(stdout(&o).contains("n=0..16 k=0..16"));
}
