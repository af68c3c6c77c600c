use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use indratio::reducer::{verify_certificate, Certificate};
use indratio::{figure1_graph, Rational};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_indratio"))
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("indratio-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn gen_figure1_pipes_into_reduce() {
    let gen = run(&["gen", "figure1"], "");
    assert!(gen.status.success());
    assert_eq!(stdout(&gen).trim(), "ONP?OMI`S?O?GAG@?@O?J");
    let reduced = run(&["reduce"], &stdout(&gen));
    assert!(reduced.status.success());
    let cert = Certificate::<Rational>::from_json(&stdout(&reduced)).unwrap();
    assert!(cert.independent_set.len() >= 5);
    assert_eq!(cert.guarantee_value, Rational::new(81, 17));
    assert!(verify_certificate(&figure1_graph(), &cert).is_valid());
}

#[test]
fn verify_round_trip_and_tampering() {
    let g6 = stdout(&run(&["gen", "figure1"], ""));
    let cert = stdout(&run(&["reduce"], &g6));
    let graph_path = scratch("fig1.g6", &g6);
    let cert_path = scratch("fig1.json", &cert);
    let ok = run(&["verify", graph_path.to_str().unwrap(), cert_path.to_str().unwrap()], "");
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim(), "valid");

    let tampered = cert.replace("\"81/17\"", "\"5\"");
    let bad_path = scratch("bad.json", &tampered);
    let bad = run(&["verify", graph_path.to_str().unwrap(), bad_path.to_str().unwrap()], "");
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("invalid"));
}

#[test]
fn constants_check_reports_tight_set() {
    let out = run(&["constants", "--check", "19/34", "3/34"], "");
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("feasible"));
    assert!(text.contains("tight: {3, 4, 6}"));
    assert!(text.contains("(7) 13a + 20b >= 8  slack 35/34"));
    assert!(text.contains("(9) 1a + 3/2b >= 2/3  slack 5/204"));
}

#[test]
fn validate_k4_fails_with_witness() {
    let k4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    let out = run(&["validate"], k4);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("kind: triangle-4cycle"));
    assert!(text.contains("triangle: {0, 1, 2}"));
    assert!(text.contains("shared_edge:"));

    let c5 = run(&["validate", "--class", "T35"], "Dhc\n");
    assert_eq!(c5.status.code(), Some(0));
    assert_eq!(stdout(&c5).trim(), "OK");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nonsense"], "").status.code(), Some(2));
    assert_eq!(run(&["gen", "prism", "x", "2"], "").status.code(), Some(2));
    assert_eq!(run(&["alpha", "/definitely/missing.g6"], "").status.code(), Some(3));
    // K4 violates the reducer's precondition.
    assert_eq!(run(&["reduce"], "C~\n").status.code(), Some(1));
    assert_eq!(run(&["gen", "prism", "2", "2"], "").status.code(), Some(1));
    assert_eq!(run(&["alpha"], "not graph6 at all\n").status.code(), Some(1));
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "random", "20", "0.3", "--seed", "7", "--class", "T35"], "");
    let b = run(&["gen", "random", "20", "0.3", "--seed", "7", "--class", "T35"], "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let valid = run(&["validate", "--class", "T35"], &stdout(&a));
    assert_eq!(valid.status.code(), Some(0));
}

#[test]
fn prism_edge_list_and_bound() {
    let out = run(&["gen", "prism", "4", "3", "--format", "edges"], "");
    let text = stdout(&out);
    assert!(text.starts_with("12 20\n"));
    let bound = run(&["bound", "--class", "T35"], &text);
    assert!(bound.status.success());
    let report = stdout(&bound);
    assert!(report.contains("bound: 20"));
    assert!(report.contains("satisfied: true"));
    assert!(report.contains("ratio_bound: 34/9"));
}

#[test]
fn alpha_warns_on_large_input() {
    let big = stdout(&run(&["gen", "prism", "5", "9"], ""));
    let out = run(&["alpha"], &big);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    assert!(stdout(&out).contains("alpha: 18"));
}
