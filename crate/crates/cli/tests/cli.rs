use std::fs;
use std::process::{Command, Output};

use extremal::construct::greedy_tree;
use extremal::invariants::wiener;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_prints_classification() {
    let o = run(&["check", "3,3,2,1,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"class\":\"unicyclic\",\"graphic\":true}\n");
}

#[test]
fn sequence_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pi.txt");
    fs::write(&path, "(3, 1, 1, 1)\n").unwrap();
    let o = run(&["check", "--file", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "{\"class\":\"tree\",\"graphic\":true}\n");
}

#[test]
fn greedy_star() {
    let o = run(&["greedy", "--kind", "tree", "4,1,1,1,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "5\n0 1\n0 2\n0 3\n0 4\n");
}

#[test]
fn greedy_round_trips_through_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.txt");
    let pi = "4,4,3,3,3,3,2,1,1,1,1,1,1,1,1,1,1";
    fs::write(&path, run(&["greedy", pi]).stdout).unwrap();
    let o = run(&["invariant", "--kind", "wiener,hosoya", "--file", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let t = greedy_tree(&pi.parse().unwrap()).unwrap();
    assert_eq!(v["wiener"].as_u64().unwrap(), wiener(t.graph()).unwrap());
}

#[test]
fn boundary_constructions_carry_boundary_lines() {
    let o = run(&["greedy", "--kind", "boundary-unicyclic", "3,3,3,1,1,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("B: ")));
}

#[test]
fn enumerate_streams_and_counts() {
    let o = run(&["enumerate", "3,2,2,1,1,1"]);
    let text = stdout(&o);
    assert_eq!(text.split("\n\n").count(), 2);
    assert!(text.ends_with('\n'));
    let o = run(&["enumerate", "--count-only", "3,2,2,1,1,1"]);
    assert_eq!(stdout(&o), "{\"classes\":2,\"labeled\":\"12\"}\n");
    let o = run(&["enumerate", "--kind", "unicyclic", "--count-only", "2,2,2,2"]);
    assert_eq!(stdout(&o), "{\"classes\":1,\"labeled\":\"3\"}\n");
}

#[test]
fn majorize_prints_chain() {
    let o = run(&["majorize", "2,2,2,1,1", "4,1,1,1,1"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.first().unwrap(), "(2,2,2,1,1)");
    assert_eq!(lines.last().unwrap(), "(4,1,1,1,1)");
}

#[test]
fn verify_writes_passing_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = run(&["verify", "--max-n", "7", "--suites", "wiener-min", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let reports: Vec<serde_json::Value> = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn verify_csv_is_deterministic() {
    let a = run(&["verify", "--max-n", "6", "--suites", "all-tree,unicyclic-rho", "--format", "csv"]);
    let b = run(&["verify", "--max-n", "6", "--suites", "all-tree,unicyclic-rho", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("tag,sequence,status,optimum,witness-code\n"));
}

#[test]
fn failing_suite_exits_one() {
    let o = run(&["verify", "--max-n", "6", "--suites", "hosoya-min", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_and_computation_errors() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--nope", "1,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "5", "--suites", "wiener-max"]).status.code(), Some(1));
    let o = run(&["greedy", "--kind", "tree", "3,3,1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}
