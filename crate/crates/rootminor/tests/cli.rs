//! End-to-end runs of the `folio` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use rootminor::cli::ResultDocument;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_folio")).args(args).output().expect("binary runs")
}

fn write(tag: &str, text: &str) -> String {
    let dir: PathBuf = std::env::temp_dir().join(format!("rootminor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{tag}.txt"));
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn json(args: &[&str]) -> ResultDocument {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = bin(&full);
    assert!(out.status.success(), "{:?} failed: {}", args, String::from_utf8_lossy(&out.stderr));
    ResultDocument::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = bin(args);
    assert!(out.status.success(), "{:?} failed: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const TRIANGLE: &str = "p 3 3\n0 1\n1 2\n0 2\n";

const PETERSEN: &str = "p 10 15\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n6 9\n6 8\n5 8\n";

fn clique_file(n: usize) -> String {
    let mut s = format!("p {n} {}\n", n * (n - 1) / 2);
    for v in 0..n {
        for u in 0..v {
            s.push_str(&format!("{u} {v}\n"));
        }
    }
    s
}

#[test]
fn triangle_with_two_roots_has_six_members() {
    let f = write("tri", TRIANGLE);
    let doc = json(&["--roots", "0,1", "folio", &f]);
    assert_eq!(doc.members.len(), 6);
    assert_eq!(doc.roots, vec![0, 1]);
}

#[test]
fn single_vertex_has_two_members() {
    let f = write("single", "p 1 0\nroots 0\n");
    let doc = json(&["folio", &f]);
    assert_eq!(doc.members.len(), 2);
}

#[test]
fn malformed_line_exits_2_with_line_number() {
    let f = write("bad", "p 3 1\n# comment\n0 x\n");
    let out = bin(&["folio", &f]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn self_loop_exits_2() {
    let f = write("loop", "p 2 1\n1 1\n");
    assert_eq!(bin(&["folio", &f]).status.code(), Some(2));
}

#[test]
fn missing_file_exits_2() {
    assert_eq!(bin(&["folio", "/nonexistent/graph.txt"]).status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    assert_eq!(bin(&["--no-such-flag", "gen", "clique", "3"]).status.code(), Some(2));
}

#[test]
fn k5_is_a_minor_of_k5_and_petersen() {
    let k5 = write("k5", &clique_file(5));
    let pet = write("petersen", PETERSEN);
    assert_eq!(json(&["minor", &k5, &k5]).verdict, "present");
    let doc = json(&["minor", &pet, &k5]);
    assert_eq!(doc.verdict, "present");
    assert_eq!(doc.model.unwrap().branch_sets.len(), 5);
}

#[test]
fn k5_is_not_a_minor_of_grids() {
    let k5 = write("k5g", &clique_file(5));
    for size in ["3", "4"] {
        let grid = write(&format!("grid{size}"), &stdout(&["gen", "grid", size]));
        assert_eq!(json(&["minor", &grid, &k5]).verdict, "absent", "grid {size}");
    }
}

#[test]
fn empty_pattern_is_present() {
    let host = write("host", TRIANGLE);
    let empty = write("empty", "p 0 0\n");
    assert_eq!(json(&["minor", &host, &empty]).verdict, "present");
}

#[test]
fn rooted_pattern_uses_pi_lines() {
    let host = write("rhost", "p 4 3\n0 1\n1 2\n2 3\n");
    let ends = write("ends", "p 2 1\n0 1\npi 0 0\npi 1 3\n");
    assert_eq!(json(&["minor", &host, &ends]).verdict, "present");
    let cut = write("rcut", "p 4 2\n0 1\n2 3\n");
    assert_eq!(json(&["minor", &cut, &ends]).verdict, "absent");
}

#[test]
fn paths_on_k4_are_feasible() {
    let f = write("k4paths", &format!("{}pair 0 1\npair 2 3\n", clique_file(4)));
    let doc = json(&["paths", &f]);
    assert_eq!(doc.verdict, "feasible");
    assert_eq!(doc.paths.unwrap().len(), 2);
}

#[test]
fn crossing_paths_on_a_cycle_are_infeasible() {
    let f = write("cycle", "p 4 4\n0 1\n1 2\n2 3\n3 0\npair 0 2\npair 1 3\n");
    assert_eq!(json(&["paths", &f]).verdict, "infeasible");
}

#[test]
fn duplicate_terminal_exits_2() {
    let f = write("dup", &format!("{}pair 0 1\npair 1 2\n", clique_file(4)));
    assert_eq!(bin(&["paths", &f]).status.code(), Some(2));
}

#[test]
fn gen_clique_has_all_edges() {
    let text = stdout(&["gen", "clique", "5"]);
    assert!(text.lines().any(|l| l == "p 5 10"));
}

#[test]
fn gen_is_deterministic_per_seed() {
    let a = stdout(&["--seed", "7", "gen", "random", "12"]);
    let b = stdout(&["--seed", "7", "gen", "random", "12"]);
    let c = stdout(&["--seed", "8", "gen", "random", "12"]);
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn chipheavy_instance_has_chips() {
    let f = write("chipheavy", &stdout(&["--seed", "1", "gen", "chipheavy", "12"]));
    let doc = json(&["carve", &f]);
    assert!(!doc.chips.unwrap().is_empty());
}

#[test]
fn reed_on_a_clique_returns_a_set() {
    let f = write("k6", &clique_file(6));
    let doc = json(&["reed", &f, "2"]);
    assert!(doc.wset.is_some() || doc.separation.is_some());
}

#[test]
fn depth_guard_violation_exits_3() {
    let f = write("grid-guard", &stdout(&["gen", "grid", "4"]));
    let out = bin(&["--depth-guard", "0", "--cutoff", "2", "--roots", "0,1,2", "folio", &f]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bench_reports_rows() {
    let doc = json(&["bench", "random", "8", "--count", "2"]);
    assert_eq!(doc.bench.len(), 2);
}

#[test]
fn text_output_names_the_verdict() {
    let f = write("tri-text", TRIANGLE);
    let text = stdout(&["--roots", "0,1", "folio", &f]);
    assert!(text.contains("verdict: 6 members"));
}
