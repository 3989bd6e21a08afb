use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

const GOLDEN: &str = "p cnf 3 8
1 2 3 0
1 2 -3 0
1 -2 3 0
1 -2 -3 0
-1 2 3 0
-1 2 -3 0
-1 -2 3 0
-1 -2 -3 0
";

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_star-frobenius"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with(args, "", &[])
}

fn json(args: &[&str], stdin: &str) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let r = run_with(&full, stdin, &[]);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn decide_cofinite_expression() {
    let v = json(&["decide", "aa+aaa"], "");
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "decide");
    assert_eq!(v["input_echo"]["regex"], "aa+aaa");
    let r = &v["result"];
    assert_eq!(r["cofinite"], true);
    assert_eq!(r["frobenius_length"], 1);
    assert_eq!(r["witness"], "a");
    assert_eq!(r["window_witness"], Value::Null);
    assert_eq!(r["t"], 5);
    assert_eq!(r["nfa_states"], 6);
    assert_eq!(v["timing_ms"], 0);
}

#[test]
fn decide_not_cofinite() {
    let r = &json(&["decide", "aa"], "")["result"];
    assert_eq!(r["cofinite"], false);
    assert_eq!(r["frobenius_length"], Value::Null);
    assert_eq!(r["window_witness"]["length"], 3);

    let r = &json(&["decide", "--alphabet", "ab", "a"], "")["result"];
    assert_eq!(r["cofinite"], false);
    assert_eq!(r["window_witness"]["word"], "aab");
}

#[test]
fn envelope_key_order() {
    let r = run(&["--format", "json", "numeric", "3", "5"]);
    let keys: Vec<usize> = [
        "schema_version",
        "command",
        "input_echo",
        "result",
        "timing_ms",
    ]
    .iter()
    .map(|k| r.stdout.find(&format!("\"{k}\"")).unwrap())
    .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]), "{}", r.stdout);
}

#[test]
fn text_format() {
    let r = run(&["decide", "EPS+a"]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .starts_with("cofinite: true\nfrobenius_length: null\n"));
}

#[test]
fn decide_from_files() {
    let regex = temp_file("pair.re", "aa+aaa\n");
    let v = json(&["decide", "-f", regex.to_str().unwrap()], "");
    assert_eq!(v["result"]["frobenius_length"], 1);

    let nfa = temp_file(
        "pair.nfa",
        "states 4\nalphabet a\ninitial 0\naccepting 2 3\n0 a 1\n1 a 2\n2 a 3\n",
    );
    let v = json(&["decide", "--nfa", nfa.to_str().unwrap()], "");
    assert_eq!(v["result"]["cofinite"], true);
    assert_eq!(v["result"]["frobenius_length"], 1);
    assert_eq!(v["result"]["nfa_states"], 5);
    assert_eq!(v["result"]["t"], Value::Null);
}

#[test]
fn decide_errors() {
    let r = run(&["decide", "((a"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("offset 3"), "{}", r.stderr);
    assert!(r.stdout.is_empty());

    assert_eq!(run(&["decide", "--alphabet", "a", "ab"]).code, 3);
    assert_eq!(run(&["decide", "--alphabet", "aa", "a"]).code, 2);
    assert_eq!(run(&["decide", "--nfa", "/nonexistent/file"]).code, 2);
    assert_eq!(run(&["decide"]).code, 2);
}

#[test]
fn frobenius_of_words() {
    let v = json(&["frobenius", "--alphabet", "ab", "a", "b"], "");
    assert_eq!(v["result"]["cofinite"], true);
    assert_eq!(v["result"]["frobenius_length"], Value::Null);

    let v = json(&["frobenius", "--alphabet", "a", "aaa", "aaaaa"], "");
    assert_eq!(v["result"]["frobenius_length"], 7);
    assert_eq!(v["result"]["witness"], "aaaaaaa");

    assert_eq!(run(&["frobenius", "--alphabet", "a", "ab"]).code, 3);
}

#[test]
fn reduce_and_decide() {
    let v = json(&["reduce"], "p cnf 3 1\n1 -2 3 0\n");
    let regex = v["result"]["regex"].as_str().unwrap();
    assert!(regex.starts_with("FTF+"), "{regex}");
    assert_eq!(v["result"]["symbol_count"], 11);
    assert_eq!(v["result"]["decision"], Value::Null);

    let v = json(&["reduce", "--decide"], GOLDEN);
    let d = &v["result"]["decision"];
    assert_eq!(d["cofinite"], true);
    assert_eq!(d["frobenius_length"], 5);
    assert_eq!(d["witness"], "FFFFF");
    assert_eq!(v["result"]["m"], 8);

    let path = temp_file("golden.cnf", GOLDEN);
    let from_file = json(&["reduce", "--decide", path.to_str().unwrap()], "");
    assert_eq!(from_file, v);
}

#[test]
fn reduce_errors() {
    let r = run_with(&["reduce"], "p cnf 3 1\n1 -1 3 0\n", &[]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("negation"), "{}", r.stderr);
    assert_eq!(run_with(&["reduce"], "p cnf 3 1\n1 2 0\n", &[]).code, 2);
    assert_eq!(run_with(&["sat"], "garbage\n", &[]).code, 2);
}

#[test]
fn sat() {
    let v = json(&["sat"], "p cnf 3 1\n1 -2 3 0\n");
    assert_eq!(v["result"]["satisfiable"], true);
    assert_eq!(
        v["result"]["assignment"],
        serde_json::json!([false, false, false])
    );
    let v = json(&["sat"], GOLDEN);
    assert_eq!(v["result"]["satisfiable"], false);
    assert_eq!(v["result"]["assignment"], Value::Null);
}

#[test]
fn oracle() {
    let v = json(
        &[
            "oracle",
            "aa+aaa",
            "--alphabet",
            "a",
            "--horizon",
            "10",
            "--bound",
            "3",
        ],
        "",
    );
    let r = &v["result"];
    assert_eq!(r["conclusive"], true);
    assert_eq!(r["verdict"]["verdict"], "cofinite");
    assert_eq!(r["verdict"]["frobenius_length"], 1);

    let r = &json(&["oracle", "aa+aaa", "--horizon", "2"], "")["result"];
    assert_eq!(r["conclusive"], false);
    assert_eq!(r["verdict"], Value::Null);
    assert_eq!(r["missing"][0]["length"], 1);

    let r = &json(&["oracle", "aa", "--bound", "auto"], "")["result"];
    assert_eq!(r["verdict"]["verdict"], "not_cofinite");

    assert_eq!(run(&["oracle", "a"]).code, 2);
    assert_eq!(
        run(&["oracle", "a", "--horizon", "3", "--bound", "x"]).code,
        2
    );
}

#[test]
fn oracle_budget() {
    let r = run_with(
        &["oracle", "a", "--alphabet", "ab", "--horizon", "5"],
        "",
        &[("STAR_FROBENIUS_BUDGET", "10")],
    );
    assert_eq!(r.code, 4);
    let r = run(&["oracle", "(a+b)(a+b)b", "--bound", "paper"]);
    assert_eq!(r.code, 4);
    assert!(r.stderr.contains("warning"), "{}", r.stderr);
}

#[test]
fn numeric() {
    assert_eq!(json(&["numeric", "3", "5"], "")["result"]["g"], 7);
    assert_eq!(json(&["numeric", "1", "5"], "")["result"]["g"], -1);
    assert_eq!(run(&["numeric", "4", "6"]).code, 3);
    assert_eq!(run(&["numeric", "0", "3"]).code, 2);
}

#[test]
fn selftest() {
    let v = json(&["selftest", "--seed", "42", "--cases", "20"], "");
    assert_eq!(v["result"]["passed"], true);
    assert_eq!(v["result"]["suites"].as_array().unwrap().len(), 8);
}

#[test]
fn timing_flag() {
    let v = json(&["--timing", "numeric", "3", "5"], "");
    assert!(v["timing_ms"].is_u64());
}
