use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

const EXAMPLE4: &str = "../core/tests/fixtures/example4_trade.txt";

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_trade-kernel"));
    c.current_dir(env!("CARGO_MANIFEST_DIR"));
    c.env_remove("TRADE_KERNEL_BUDGET");
    c
}

fn run_cmd(mut c: Command) -> (i32, Value) {
    let out = c.output().unwrap();
    let code = out.status.code().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (code, v)
}

fn run(args: &[&str]) -> (i32, Value) {
    let mut c = bin();
    c.args(args);
    run_cmd(c)
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn latin_rank_three() {
    let (code, v) = run(&["latin", "rank", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["rank"], 19);
    assert_eq!(v["result"]["nullity"], 8);
    assert_eq!(v["command"], "latin rank --n 3");
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert_eq!(v["seed"], Value::Null);
}

#[test]
fn find_inadmissible_order() {
    let (code, v) = run(&["cycles", "find", "--n", "8"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["status"], "NotAdmissible");
}

#[test]
fn budget_from_environment() {
    let mut c = bin();
    c.env("TRADE_KERNEL_BUDGET", "3").args(["cycles", "find", "--n", "9"]);
    let (code, v) = run_cmd(c);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["status"], "Exhausted");
    let (code, _) = run(&["--budget", "3", "cycles", "find", "--n", "9"]);
    assert_eq!(code, 1);
}

#[test]
fn example_decomposition() {
    let (code, v) = run(&["latin", "decompose", "--trade", EXAMPLE4]);
    assert_eq!(code, 0);
    let coeffs = v["result"]["coefficients"].as_object().unwrap();
    let got: Vec<(&str, i64)> = coeffs.iter().map(|(k, x)| (k.as_str(), x.as_i64().unwrap())).collect();
    assert_eq!(
        got,
        vec![("(1,1,1)", 1), ("(1,1,2)", -1), ("(2,2,2)", 1), ("(2,2,3)", -1), ("(3,3,3)", 1)]
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["latin", "rank"]).0, 2);
    assert_eq!(run(&["cycles", "frobnicate"]).0, 2);
    assert_eq!(run(&["latin", "decompose", "--trade", "/nonexistent/trade.txt"]).0, 2);
    assert_eq!(run(&["--mode", "sideways", "cycles", "rank", "--n", "6"]).0, 2);
}

#[test]
fn cycle_files_round_trip() {
    let found = tmp("found9.txt");
    let free = tmp("free9.txt");
    assert_eq!(run(&["cycles", "find", "--n", "9", "--out", s(&found)]).0, 0);
    assert_eq!(run(&["cycles", "validate", "--system", s(&found)]).0, 0);
    let (code, v) = run(&["--seed", "1", "cycles", "diamond-free", "--n", "9", "--out", s(&free)]);
    assert_eq!(code, 0);
    assert_eq!(v["seed"], 1);
    let (code, v) = run(&["cycles", "count-diamonds", "--system", s(&free)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 0);

    let plan = tmp("self9.plan");
    let (code, _) = run(&["--mode", "strict", "cycles", "transform", "--from", s(&found), "--to", s(&found), "--out", s(&plan)]);
    assert_eq!(code, 0);
    let (code, v) = run(&["cycles", "validate", "--plan", s(&plan), "--from", s(&found), "--to", s(&found)]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["valid"], true);
}

#[test]
fn latin_files_round_trip() {
    let a = tmp("a.sq");
    let b = tmp("b.sq");
    std::fs::write(&a, "n=4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n").unwrap();
    std::fs::write(&b, "n=4\n1 0 2 3\n0 1 3 2\n2 3 1 0\n3 2 0 1\n").unwrap();
    let plan = tmp("ab.plan");
    let (code, v) = run(&["latin", "transform", "--from", s(&a), "--to", s(&b), "--out", s(&plan)]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["moves"], v["result"]["plan"].as_array().unwrap().len());
    let (code, v) = run(&["latin", "validate", "--plan", s(&plan), "--from", s(&a), "--to", s(&b)]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["reaches_target"], true);
    assert_eq!(run(&["latin", "validate", "--square", s(&a)]).0, 0);
    assert_eq!(run(&["latin", "validate", "--trade", EXAMPLE4]).0, 0);

    let dump = tmp("latin3.dump");
    assert_eq!(run(&["latin", "matrix", "--n", "3", "--out", s(&dump)]).0, 0);
    let (code, v) = run(&["linalg", "rank", "--matrix", s(&dump)]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["rank"], 19);
    let (_, v) = run(&["linalg", "kernel", "--matrix", s(&dump), "--integer"]);
    assert_eq!(v["result"]["dimension"], 8);
    let (_, v) = run(&["linalg", "lattice-eq", "--a", s(&dump), "--b", s(&dump)]);
    assert_eq!(v["result"]["equal"], true);
}

#[test]
fn cycle_rank_report_keys() {
    let (code, v) = run(&["cycles", "rank", "--n", "7"]);
    assert_eq!(code, 0);
    let keys: Vec<&str> = v["result"].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["n", "rows", "cols", "rank", "nullity", "diamond_count", "diamond_span_rank", "mode"]);
    assert_eq!(v["result"]["rank"], 21);
    assert_eq!(v["result"]["diamond_span_rank"], 84);
    assert_eq!(run(&["cycles", "basis", "--n", "5"]).0, 1);
}

#[test]
fn payloads_are_stable() {
    for args in [
        &["--seed", "3", "cycles", "diamond-free", "--n", "9"][..],
        &["cycles", "span", "--n", "9"][..],
        &["latin", "decompose", "--trade", EXAMPLE4][..],
    ] {
        let (_, a) = run(args);
        let (_, b) = run(args);
        assert_eq!(a["result"].to_string(), b["result"].to_string(), "{args:?}");
        assert_eq!(a["input_digest"], b["input_digest"]);
    }
    let mut text = bin();
    text.args(["--text", "latin", "rank", "--n", "2"]);
    let out = text.output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n=2 rows=12 cols=8 rank=7 nullity=1\n");
}
