//! End-to-end checks of the command-line binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cliquebound"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn binary");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn colex_edge_list() {
    let o = run(&["colex", "--edges", "4", "--edgelist"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 2\n1 3\n2 3\n1 4\n");
}

#[test]
fn search_report_fields_in_order() {
    let o = run(&["search", "--m", "6", "--r", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.starts_with(r#"{"m":6,"r":3,"f":11,"g":11,"agrees":true"#),
        "{text}"
    );
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["f"], 11);
    assert_eq!(v["agrees"], true);
}

#[test]
fn count_complete_graph_from_stdin() {
    let k4 = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
    let o = run(&["count", "--edgelist-stdin"], k4);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"k":{"2":6,"3":4,"4":1},"total":11}"#);
}

#[test]
fn graph6_output_lists_every_maximizer() {
    let o = run(
        &["search", "--m", "10", "--r", "3", "--format", "graph6"],
        "",
    );
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2, "{lines:?}");
}

#[test]
fn degree_violation_names_the_vertex() {
    let star = "1 2\n1 3\n1 4\n1 5\n";
    let o = run(&["count", "--edgelist-stdin", "--r", "3"], star);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("vertex 1"), "{}", stderr(&o));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let o = run(&["search", "--bogus"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_graph6_is_rejected() {
    let dir = std::env::temp_dir().join(format!("cliquebound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (i, bad) in ["~~~", "C\u{1}", "A"].iter().enumerate() {
        let path = dir.join(format!("bad{i}.g6"));
        std::fs::write(&path, bad).unwrap();
        let o = run(&["count", "--input", path.to_str().unwrap()], "");
        assert_eq!(o.status.code(), Some(2), "input {bad:?}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn oversized_search_is_refused() {
    let o = run(&["search", "--m", "60", "--r", "2"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--force"), "{}", stderr(&o));
}

#[test]
fn output_does_not_depend_on_jobs() {
    let args = ["search", "--m-min", "1", "--m", "9", "--r", "3"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat(), "");
    let many = run(&[&args[..], &["--jobs", "8"]].concat(), "");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn law_suite_reports_no_violations() {
    let o = run(
        &["laws", "--r-max", "3", "--m-max", "7", "--s-max", "5"],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains(r#""violations":[]"#), "{text}");
    assert!(!text.contains(r#""violations":[{"#), "{text}");
}
