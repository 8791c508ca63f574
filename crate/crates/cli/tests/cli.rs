use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use proptest::prelude::*;
use serde_json::{json, Value};

fn example(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

/// Runs the binary on a file; returns (exit code, stdout).
fn run(args: &[&str], file: &PathBuf) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ringbasis"))
        .args(args)
        .arg(file)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn run_stdin(args: &[&str], src: &str) -> (i32, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ringbasis"))
        .args(args)
        .arg("-")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(src.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json_of(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("not JSON ({e}): {s}"))
}

#[test]
fn is_free_on_integer_example() {
    let (code, out) = run(&["is-free"], &example("integer_free.gb"));
    assert_eq!(code, 0);
    assert_eq!(json_of(&out), json!({"free": true, "short_reduced_basis": ["x1^2", "x2"]}));
}

#[test]
fn module_basis_on_integer_example() {
    let (code, out) = run(&["module-basis"], &example("integer_free.gb"));
    assert_eq!(code, 0);
    let v = json_of(&out);
    assert_eq!(v["rank"], json!(2));
    assert_eq!(v["basis"], json!(["1", "x1"]));
    assert_eq!(v["complete"], json!(true));
    assert_eq!(v["free"], json!(true));
}

#[test]
fn module_basis_rejects_torsion() {
    let (code, out) = run(&["module-basis"], &example("integer_torsion.gb"));
    assert_eq!(code, 2);
    assert_eq!(json_of(&out)["error"], json!("NotMonic"));
    let (code, out) = run(&["is-free"], &example("integer_torsion.gb"));
    assert_eq!(code, 0);
    assert_eq!(json_of(&out)["free"], json!(false));
}

#[test]
fn infinite_rank_needs_a_cap() {
    let (code, out) = run(&["module-basis"], &example("infinite_rank.gb"));
    assert_eq!(code, 2);
    assert_eq!(json_of(&out)["error"], json!("CapRequired"));
    let (code, out) = run(&["module-basis", "--cap", "2"], &example("infinite_rank.gb"));
    assert_eq!(code, 0);
    let v = json_of(&out);
    assert_eq!(v["rank"], json!("infinite"));
    assert_eq!(v["complete"], json!(false));
    assert_eq!(v["basis"].as_array().unwrap().len(), 5);
}

#[test]
fn parametric_short_reduce_checks() {
    let (code, out) = run(&["short-reduce", "--check"], &example("parametric.gb"));
    assert_eq!(code, 0);
    let v = json_of(&out);
    assert_eq!(v["basis"], json!(["x - 1", "a^2 - a"]));
    assert_eq!(v["verified"], json!(true));
    assert_eq!(v["monic"], json!(false));
}

#[test]
fn strong_check_reports_probe() {
    let (code, out) = run(&["strong-check"], &example("strong_counterexample.gb"));
    assert_eq!(code, 0);
    let v = json_of(&out);
    assert_eq!(v["strong"], json!(false));
    assert_eq!(v["counterexample"], json!("(a1^3 + a2^3)*x"));
}

#[test]
fn border_basis_and_normal_forms() {
    let (code, out) = run(&["border-basis", "--check"], &example("border.gb"));
    assert_eq!(code, 0);
    let v = json_of(&out);
    assert_eq!(v["order_ideal"], json!(["1", "x"]));
    let mut basis: Vec<String> = serde_json::from_value(v["basis"].clone()).unwrap();
    basis.sort();
    assert_eq!(basis, ["x*y - x", "x^2 - 1", "y - 1"]);

    let (code, out) = run(&["nf", "--check"], &example("border.gb"));
    assert_eq!(code, 0);
    let forms: Vec<String> = json_of(&out)["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["normal_form"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(forms, ["1", "2*x + 3", "0"]);
}

#[test]
fn border_basis_needs_order_ideal() {
    let (code, out) = run(&["border-basis"], &example("integer_free.gb"));
    assert_eq!(code, 1);
    assert_eq!(json_of(&out)["error"], json!("MissingSection"));
}

#[test]
fn lattice_section_is_free() {
    let (code, out) = run(&["is-free"], &example("lattice.gb"));
    assert_eq!(code, 0);
    assert_eq!(json_of(&out)["free"], json!(true));
}

#[test]
fn parse_errors_exit_one() {
    let (code, out) = run_stdin(&["gb"], "ring Z\nvars 1\nx1 +\n");
    assert_eq!(code, 1);
    let v = json_of(&out);
    assert_eq!(v["error"], json!("SyntaxError"));
    assert_eq!((v["line"].clone(), v["column"].clone()), (json!(3), json!(5)));
    let (code, out) = run_stdin(&["gb"], "ring Z\nvars x\nx + y\n");
    assert_eq!(code, 1);
    assert_eq!(json_of(&out)["error"], json!("UnknownVariable"));
    let (code, _) = run(&["gb"], &PathBuf::from("/nonexistent/problem.gb"));
    assert_eq!(code, 1);
}

#[test]
fn text_output() {
    let out = Command::new(env!("CARGO_BIN_EXE_ringbasis"))
        .args(["is-free", "--text"])
        .arg(example("integer_free.gb"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "free: true\nshort reduced basis:\n  x1^2\n  x2\n");
}

fn term() -> impl Strategy<Value = String> {
    (-9i64..=9, 0u32..3, 0u32..3).prop_map(|(c, a, b)| format!("{c}*x^{a}*y^{b}"))
}

fn problem() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::collection::vec(term(), 1..4), 1..4).prop_map(|gens| {
        let body: Vec<String> = gens.into_iter().map(|t| t.join(" + ")).collect();
        format!("ring Z\nvars x, y\norder grevlex\n{}\n", body.join("\n"))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Byte-stable output, and the printed basis parses back to itself.
    #[test]
    fn deterministic_and_round_trips(src in problem()) {
        let (c1, a) = run_stdin(&["short-reduce"], &src);
        let (c2, b) = run_stdin(&["short-reduce"], &src);
        prop_assert_eq!(c1, 0);
        prop_assert_eq!(c2, 0);
        prop_assert_eq!(&a, &b);
        let basis: Vec<String> = serde_json::from_value(json_of(&a)["basis"].clone()).unwrap();
        prop_assume!(!basis.is_empty());
        let again = format!("ring Z\nvars x, y\norder grevlex\n{}\n", basis.join("\n"));
        let (c3, c) = run_stdin(&["short-reduce"], &again);
        prop_assert_eq!(c3, 0);
        prop_assert_eq!(json_of(&c)["basis"].clone(), json!(basis));
    }
}
