use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(rel)
}

fn bolkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bolkit")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = bolkit(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

#[test]
fn identify_reports_flags() {
    let p = corpus("bol8/b8.tbl");
    let (code, v) = json(&["identify", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["order"], 8);
    assert_eq!(v[0]["right_bol"]["holds"], true);
    assert_eq!(v[0]["moufang"]["holds"], false);
}

#[test]
fn multgroup_of_a5() {
    let p = corpus("groups/a5.tbl");
    let (code, v) = json(&["multgroup", "--side", "full", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    // A5 is centerless, so Gr has order 60 * 60.
    assert_eq!(v[0]["order"], 3600);
    let (_, v) = json(&["multgroup", p.to_str().unwrap()]);
    assert_eq!(v[0]["order"], 60);
    assert_eq!(v[0]["simple"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(bolkit(&["validate", corpus("groups/s3.tbl").to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(bolkit(&["validate", corpus("magmas/sub5.tbl").to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bolkit(&["validate", "/nonexistent/file.tbl"]).status.code(), Some(1));
    assert_eq!(bolkit(&["no-such-verb"]).status.code(), Some(1));
    let bad = corpus("instances/z3z3_swap_bad.inst");
    let (code, v) = json(&["construct", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v[0]["verdict"]["condition2"]["holds"], false);
    assert_eq!(v[0]["verdict"]["condition2"]["witness"], serde_json::json!([5]));
}

#[test]
fn malformed_table_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.tbl");
    std::fs::write(&p, "2\n0 1\n1 x\n").unwrap();
    let out = bolkit(&["validate", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn construct_with_quotient() {
    let p = corpus("instances/z3z3_swap.inst");
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("loop.tbl");
    let (code, v) = json(&["construct", p.to_str().unwrap(), "--quotient", "0,4,8", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["quotient"]["isomorphic"], true);
    assert_eq!(v[0]["quotient"]["core_criterion"], true);
    let written = bolkit::io::read_loop(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(written.order(), 3);
}

#[test]
fn corpus_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("q8.tbl");
    let out = bolkit(&["corpus", "--kind", "group", "--name", "Q8", "--out", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let l = bolkit::io::read_loop(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(l.order(), 8);
    assert!(bolkit::table::is_associative(&l).holds);
    let (code, v) = json(&["identify", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v[0]["moufang"]["holds"], true);
}

#[test]
fn closure_cap_from_environment() {
    let p = corpus("groups/a5.tbl");
    let out = Command::new(env!("CARGO_BIN_EXE_bolkit"))
        .args(["multgroup", p.to_str().unwrap()])
        .env("BOLKIT_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn timing_is_opt_in() {
    let p = corpus("groups/z5.tbl");
    let (_, plain) = json(&["identify", p.to_str().unwrap()]);
    assert!(plain[0].get("elapsed_ms").is_none() && plain.get("timing").is_none());
    let out = bolkit(&["--timing", "identify", p.to_str().unwrap()]);
    assert_ne!(out.stdout, bolkit(&["identify", p.to_str().unwrap()]).stdout);
}
