use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchcut"))
        .args(args)
        .current_dir(dir)
        .env_remove("MATCHCUT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field(out: &str, key: &str) -> Option<String> {
    out.lines().find_map(|l| l.strip_prefix(&format!("{key}: ")).map(str::to_string))
}

fn graph_file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n3 0\n";

#[test]
fn solves_cycle_with_certificate_that_verifies() {
    let dir = TempDir::new().unwrap();
    graph_file(&dir, "c4.txt", C4);
    let o = run(dir.path(), &["solve", "c4.txt", "--solver", "s112", "--emit-certificate", "c4.cert"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "value").as_deref(), Some("2"));
    assert_eq!(field(&out, "outcome").as_deref(), Some("cut"));

    let v = run(dir.path(), &["verify", "c4.txt", "c4.cert"]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(field(&stdout(&v), "verdict").as_deref(), Some("accept"));

    let wrong = run(dir.path(), &["verify", "c4.txt", "c4.cert", "--value", "3"]);
    assert_eq!(wrong.status.code(), Some(4));
}

#[test]
fn triangle_has_no_cut_and_edge_has_one() {
    let dir = TempDir::new().unwrap();
    graph_file(&dir, "k3.txt", "3 3\n0 1\n1 2\n0 2\n");
    graph_file(&dir, "p2.txt", "2 1\n0 1\n");
    let o = run(dir.path(), &["solve", "k3.txt"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(field(&stdout(&o), "outcome").as_deref(), Some("no matching cut"));
    let o = run(dir.path(), &["solve", "p2.txt", "--solver", "brute"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "value").as_deref(), Some("1"));
}

#[test]
fn repeated_runs_match_except_timing() {
    let dir = TempDir::new().unwrap();
    let g = run(dir.path(), &["gen", "gnp", "12", "0.4", "--seed", "7", "--out", "g.txt"]);
    assert_eq!(g.status.code(), Some(0));
    let strip = |o: &Output| stdout(o).lines().filter(|l| !l.starts_with("wall_time_ms")).collect::<Vec<_>>().join("\n");
    let a = run(dir.path(), &["solve", "g.txt"]);
    let b = run(dir.path(), &["solve", "g.txt"]);
    assert_eq!(strip(&a), strip(&b));
    assert!(field(&stdout(&a), "input_sha256").is_some_and(|h| h.len() == 64));
}

#[test]
fn json_report_parses() {
    let dir = TempDir::new().unwrap();
    graph_file(&dir, "c4.txt", C4);
    let o = run(dir.path(), &["--json", "solve", "c4.txt"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["claim_violations"], 0);
}

#[test]
fn reduce_writes_gadget_with_interval() {
    let dir = TempDir::new().unwrap();
    graph_file(&dir, "k2.txt", "2 1\n0 1\n");
    let o = run(dir.path(), &["reduce", "k2.txt", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# interval 7 8"));

    let o = run(dir.path(), &["reduce", "k2.txt", "--k", "1", "--bipartite", "--out", "bip.txt"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("bip.txt")).unwrap();
    assert!(text.contains("# interval 14 16"));

    // the gadget file is itself a readable graph
    let m = run(dir.path(), &["metrics", "bip.txt"]);
    assert_eq!(m.status.code(), Some(0));
    assert_eq!(field(&stdout(&m), "n").as_deref(), Some("46"));
}

#[test]
fn bad_inputs_exit_with_input_error() {
    let dir = TempDir::new().unwrap();
    graph_file(&dir, "empty.txt", "3 0\n");
    graph_file(&dir, "junk.txt", "not a graph\n");
    assert_eq!(run(dir.path(), &["reduce", "empty.txt", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["solve", "junk.txt"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["solve", "missing.txt"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    assert_eq!(run(dir.path(), &["solve"]).status.code(), Some(1));
    assert_eq!(run(dir.path(), &["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn selftest_passes_and_catches_injected_fault() {
    let dir = TempDir::new().unwrap();
    let ok = run(dir.path(), &["selftest", "--max-n", "4", "--samples", "20"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let bad = run(
        dir.path(),
        &["selftest", "--max-n", "5", "--samples", "20", "--suite", "oracle-equivalence", "--inject-fault", "off-by-one:s112", "--counterexample-dir", "cx"],
    );
    assert_eq!(bad.status.code(), Some(4), "{}", stdout(&bad));
    assert!(dir.path().join("cx").join("oracle-equivalence.txt").exists());
}
