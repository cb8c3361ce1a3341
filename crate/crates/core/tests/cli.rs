use std::path::PathBuf;
use std::process::Command;

use qchar::rmatrix::HeckeSymmetry;
use serde_json::Value;

fn qchar(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qchar"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out, err) = qchar(&a);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, v)
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qchar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn verify_exit_codes() {
    assert_eq!(qchar(&["verify", "--dj", "2"]).0, 0);
    assert_eq!(qchar(&["verify", "--dj", "1"]).0, 0);

    let good = HeckeSymmetry::dj(2).to_json();
    let path = temp_file("dj2.json", &good);
    assert_eq!(qchar(&["verify", "--rmatrix", path.to_str().unwrap()]).0, 0);

    let mut v: Value = serde_json::from_str(&good).unwrap();
    let e = v["entries"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|e| e["coeff"] == "p")
        .unwrap();
    e["coeff"] = Value::String("p^3".into());
    let bad = temp_file("bad.json", &v.to_string());
    let (code, out) = json(&["verify", "--rmatrix", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(out["yang_baxter"], false);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(qchar(&["verify", "--rmatrix", "/nonexistent/r.json"]).0, 1);
    assert_eq!(qchar(&["char-table"]).0, 1);
    assert_eq!(qchar(&["char-table", "-n", "9"]).0, 1);
    assert_eq!(qchar(&["frobnicate"]).0, 1);
    assert_eq!(qchar(&["qdim", "-l", "2,x"]).0, 1);
    assert_eq!(qchar(&["verify", "--dj", "2", "--rmatrix", "x.json"]).0, 1);
    let bad = temp_file("garbage.json", "{\"r\": 2");
    assert_eq!(qchar(&["verify", "--rmatrix", bad.to_str().unwrap()]).0, 1);
    assert_eq!(qchar(&["--help"]).0, 0);
}

#[test]
fn char_table_output() {
    let (code, v) = json(&["char-table", "-n", "2"]);
    assert_eq!(code, 0);
    let vals: Vec<&str> = v["table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap())
        .collect();
    assert_eq!(vals, ["1", "p^2", "1", "-1"]);

    let (code, csv, _) = qchar(&["char-table", "-n", "3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().count(), 1 + 3 * 6);

    let (code, v) = json(&["char-table", "-n", "4", "--check"]);
    assert_eq!(code, 0);
    assert_eq!(v["match"], true);
}

#[test]
fn qdim_and_schur() {
    let (code, v) = json(&["qdim", "--dj", "2", "-l", "2,1", "--check"]);
    assert_eq!(code, 0);
    assert_eq!(v["quantum_rank"], "p^-1 + p");
    assert_eq!(v["match"], true);

    let (code, v) = json(&["schur", "--dj", "3", "-l", "2", "--seed", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["match"], true);
    assert_eq!(v["equals_schur_at_q_i_a_i"], false);
}

#[test]
fn identities_hold() {
    let (code, v) = json(&["hciz", "--dj", "2", "-n", "2", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["match"], true);
    assert_eq!(v["lhs"], v["rhs"]);

    let (code, v) = json(&["cayley", "--dj", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["symbolic_zero"], true);
    assert_eq!(v["literal_signs_zero"], false);

    let (code, v) = json(&["integral", "--dj", "2", "-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["gram"], serde_json::json!([["1", "0"], ["0", "1"]]));

    let (code, v) = json(&["integral", "--dj", "1", "--monomial", "1;1;1;1"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "1");
}

#[test]
fn points_file_and_evaluation() {
    let pts = temp_file("pts.json", r#"[["1", "p^2"], [3, "1/2"]]"#);
    let (code, v) = json(&[
        "hciz",
        "--dj",
        "2",
        "-n",
        "1",
        "--points",
        pts.to_str().unwrap(),
        "--p0",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["mu"][1]["exact"], "p^2");
    assert_eq!(v["mu"][1]["at_p0"], "4");
    assert_eq!(v["lhs"]["at_p0"], v["rhs"]["at_p0"]);

    let short = temp_file("short.json", r#"[["1"]]"#);
    assert_eq!(
        qchar(&["hciz", "-n", "1", "--points", short.to_str().unwrap()]).0,
        1
    );
}

#[test]
fn json_is_reproducible() {
    for args in [
        &["hciz", "--dj", "3", "-n", "2", "--seed", "42"][..],
        &["schur", "--dj", "2", "-l", "2,1", "--seed", "9"][..],
        &["cayley", "--dj", "2", "--seed", "5"][..],
    ] {
        let mut a = args.to_vec();
        a.extend(["--format", "json"]);
        let first = qchar(&a).1;
        assert_eq!(first, qchar(&a).1);
        let v: Value = serde_json::from_str(&first).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
    let a = qchar(&["hciz", "-n", "1", "--seed", "1", "--format", "json"]).1;
    let b = qchar(&["hciz", "-n", "1", "--seed", "2", "--format", "json"]).1;
    assert_ne!(a, b);
}
