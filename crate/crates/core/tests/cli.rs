//! The command-line surface: exit codes, golden reports, determinism and round trips.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gcrossed"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gcrossed-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_double_matches_golden_and_validates() {
    let o = run(&["gen-double", "c2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(golden("toric.inst")).unwrap());
    let path = scratch("c2.inst");
    std::fs::write(&path, &o.stdout).unwrap();
    assert_eq!(run(&["validate", path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn reports_match_golden_files() {
    let inst = golden("toric.inst");
    let inst = inst.to_str().unwrap();
    let o = run(&["subcats", inst, "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(golden("toric_subcats.json")).unwrap());
    let o = run(&["centralize", inst, "--all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(golden("toric_centralize.txt")).unwrap());
}

#[test]
fn structured_reports_are_deterministic_json() {
    for args in [
        vec!["simples", "builtin:s3", "--format", "structured"],
        vec!["centralize", "builtin:twisted_s3", "--all", "--format", "structured"],
        vec!["check", "builtin:c3", "--format", "structured"],
    ] {
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn simples_counts() {
    let v: serde_json::Value =
        serde_json::from_slice(&run(&["simples", "builtin:c3", "--format", "structured"]).stdout).unwrap();
    assert_eq!(v["simples"]["simples"].as_array().unwrap().len(), 9);
    let v: serde_json::Value =
        serde_json::from_slice(&run(&["simples", "builtin:s3", "--format", "structured"]).stdout).unwrap();
    assert_eq!(v["simples"]["global_dimension"], 36);
    let v: serde_json::Value =
        serde_json::from_slice(&run(&["simples", "builtin:c1", "--format", "structured"]).stdout).unwrap();
    assert_eq!(v["simples"]["simples"].as_array().unwrap().len(), 1);
}

#[test]
fn dot_has_one_source_and_one_sink() {
    let path = scratch("s3.dot");
    let o = run(&["subcats", "builtin:s3", "--dot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    let edges: Vec<(String, String)> = dot
        .lines()
        .filter_map(|l| l.trim().strip_suffix(';')?.split_once(" -> ").map(|(a, b)| (a.into(), b.into())))
        .collect();
    let nodes: Vec<String> = dot.lines().filter(|l| l.contains("[label=")).map(|l| l.split_whitespace().next().unwrap().into()).collect();
    let sources = nodes.iter().filter(|n| !edges.iter().any(|e| &e.1 == *n)).count();
    let sinks = nodes.iter().filter(|n| !edges.iter().any(|e| &e.0 == *n)).count();
    assert_eq!((nodes.len(), sources, sinks), (8, 1, 1));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["gen-double", "c13"]).status.code(), Some(1));
    assert_eq!(run(&["centralize", "builtin:c2"]).status.code(), Some(1));
    assert_eq!(run(&["centralize", "builtin:c2", "--datum", "(2,2)"]).status.code(), Some(1));
    assert_eq!(run(&["centralize", "builtin:c2", "--datum", "(2,2,1)"]).status.code(), Some(0));
    assert_eq!(run(&["simples", "/nonexistent/file"]).status.code(), Some(1));

    let text = std::fs::read_to_string(golden("toric.inst")).unwrap();
    let bad_parse = scratch("parse.inst");
    std::fs::write(&bad_parse, text.replace("boundary", "bnd")).unwrap();
    assert_eq!(run(&["validate", bad_parse.to_str().unwrap()]).status.code(), Some(2));

    // one associator entry flipped: the violated triple is named
    let lines: Vec<&str> = text.lines().collect();
    let w = lines.iter().position(|l| *l == "w").unwrap();
    let mut broken: Vec<String> = lines.iter().map(|s| s.to_string()).collect();
    broken[w + 1] = "0 1".into();
    let bad = scratch("bad.inst");
    std::fs::write(&bad, broken.join("\n") + "\n").unwrap();
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(0,0,1)"));
    assert_eq!(run(&["check", bad.to_str().unwrap()]).status.code(), Some(3));

    assert_eq!(run(&["simples", "builtin:s3", "--limit-group", "4"]).status.code(), Some(5));
    assert_eq!(run(&["subcats", "builtin:d4", "--limit-subcats", "10"]).status.code(), Some(5));
}

#[test]
fn check_passes_on_small_instances() {
    for inst in ["builtin:c2", "builtin:twisted_c2", "builtin:central_c2"] {
        let o = run(&["check", inst, "--level", "full"]);
        assert_eq!(o.status.code(), Some(0), "{inst}: {}", stdout(&o));
        assert!(stdout(&o).contains("properties pass"));
    }
}

#[test]
fn stdin_round_trip() {
    use std::io::Write;
    let text = stdout(&run(&["gen-double", "klein4"]));
    let mut child = bin()
        .args(["validate", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid"));
}

#[test]
fn cayley_table_input() {
    let path = scratch("z3.txt");
    std::fs::write(&path, "group z3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let o = run(&["gen-double", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("order 3\nG z3 3\n"));
    let bad = scratch("notgroup.txt");
    std::fs::write(&bad, "0 1\n0 1\n").unwrap();
    assert_eq!(run(&["gen-double", bad.to_str().unwrap()]).status.code(), Some(3));
}
