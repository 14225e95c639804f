//! End-to-end checks of the `lcp` binary: verb wiring, exit codes, output
//! formats, and determinism.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn lcp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lcp_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lcp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .expect("stdin is piped")
        .write_all(input.as_bytes())
        .expect("write to child");
    child.wait_with_output().expect("binary exits")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("output is utf-8")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("lcp-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("write scratch file");
    path
}

fn kv_value<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|rest| rest.strip_prefix('=')))
}

#[test]
fn gen_is_deterministic_and_solve_reads_stdin() {
    let a = lcp(&["gen", "--family", "random-gnm", "--params", "10,15", "--seed", "7"]);
    let b = lcp(&["gen", "--family", "random-gnm", "--params", "10,15", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b), "same seed must give the same bytes");

    let yes = lcp_stdin(&["solve", "--k", "0", "--format", "kv"], &stdout(&a));
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(kv_value(&stdout(&yes), "verdict"), Some("yes"));
}

#[test]
fn solve_exit_codes_follow_the_verdict() {
    let c6 = stdout(&lcp(&["gen", "--family", "cycle", "--params", "6"]));
    let input = scratch("c6.lcp", &c6);
    let path = input.to_str().unwrap();

    let yes = lcp(&["solve", "--k", "2", "--input", path, "--witness", "--format", "kv"]);
    assert_eq!(yes.status.code(), Some(0));
    let text = stdout(&yes);
    assert_eq!(kv_value(&text, "verdict"), Some("yes"));
    assert_eq!(kv_value(&text, "k"), Some("2"));
    let red: Vec<&str> = kv_value(&text, "red_vertices").unwrap().split(' ').collect();
    let blue: Vec<&str> = kv_value(&text, "blue_vertices").unwrap().split(' ').collect();
    assert_eq!(red.len() + blue.len(), 6, "witness partitions the vertices");

    let no = lcp(&["solve", "--k", "3", "--input", path]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("verdict: no"));
}

#[test]
fn optimize_and_oracle_agree_on_p6() {
    let p6 = scratch("p6.lcp", &stdout(&lcp(&["gen", "--family", "path", "--params", "6"])));
    let path = p6.to_str().unwrap();
    let opt = lcp(&["optimize", "--input", path, "--format", "kv"]);
    let ora = lcp(&["oracle", "--input", path, "--format", "kv"]);
    assert_eq!(opt.status.code(), Some(0));
    assert_eq!(ora.status.code(), Some(0));
    assert_eq!(kv_value(&stdout(&opt), "mu"), Some("2"));
    assert_eq!(kv_value(&stdout(&ora), "mu"), Some("2"));
    // without --witness the optimize output carries no vertex lists
    assert!(kv_value(&stdout(&opt), "red_vertices").is_none());
}

#[test]
fn kernel_output_is_a_parsable_instance_with_a_trace() {
    let star = scratch("star9.lcp", &stdout(&lcp(&["gen", "--family", "star", "--params", "9"])));
    let out = lcp(&["kernel", "--k", "2", "--input", star.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("p lcp 3 2"), "kernel keeps k pendants: {text}");
    assert!(text.contains("c trace pendant"), "trace comments present");
    let reparsed = lcp_stdin(&["solve", "--k", "2", "--format", "kv"], &text);
    assert_eq!(kv_value(&stdout(&reparsed), "verdict"), Some("no"));
}

#[test]
fn tw_bound_decomposition_round_trips_through_validate_td() {
    let c6 = scratch("c6b.lcp", &stdout(&lcp(&["gen", "--family", "cycle", "--params", "6"])));
    let path = c6.to_str().unwrap();
    let bound = lcp(&["tw-bound", "--k", "3", "--input", path]);
    assert_eq!(bound.status.code(), Some(0));
    let td = scratch("c6.td", &stdout(&bound));
    let td_path = td.to_str().unwrap();

    let ok = lcp(&["validate-td", "--input", path, "--td", td_path]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("valid:"));

    let solved = lcp(&["solve", "--k", "2", "--input", path, "--td", td_path, "--format", "kv"]);
    assert_eq!(solved.status.code(), Some(0));
    assert_eq!(kv_value(&stdout(&solved), "decided_by"), Some("dp"));

    let broken = scratch("broken.td", "s td 1 2 6\nb 1 1 2\n");
    let bad = lcp(&["validate-td", "--input", path, "--td", broken.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("invalid:"));
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let selfloop = lcp_stdin(&["solve", "--k", "1"], "p lcp 2 1\ne 1 1\n");
    assert_eq!(selfloop.status.code(), Some(2));
    let missing = lcp(&["solve", "--k", "1", "--input", "/nonexistent/graph.lcp"]);
    assert_eq!(missing.status.code(), Some(2));
    let badfamily = lcp(&["gen", "--family", "hypercube", "--params", "3"]);
    assert_eq!(badfamily.status.code(), Some(2));
    let nok = lcp(&["solve"]);
    assert_eq!(nok.status.code(), Some(2));
}

#[test]
fn accept_quick_prints_one_line_per_criterion() {
    let out = lcp(&["accept", "--quick", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for i in 1..=8 {
        assert!(
            text.contains(&format!("criterion {i}:")),
            "missing criterion {i} in:\n{text}"
        );
    }
    assert_eq!(text.matches("[PASS]").count(), 8);
    assert!(text.ends_with("acceptance: all criteria passed\n"));
}
