use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use qckit::format::{self, CodeFile};
use qckit::{factor_cyclic_modulus, CyclicCode, Field, Poly, QuasiCyclicCode};

fn qckit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qckit")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn hamming(g: Vec<u32>) -> String {
    let f2 = Field::prime(2).unwrap();
    CodeFile::from_cyclic(&CyclicCode::new(&f2, 7, &Poly::new(&f2, g)).unwrap()).unwrap().to_json()
}

#[test]
fn factor_matches_library_bytes() {
    let out = qckit(&["factor", "--q", "2", "--m", "7", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let cls = factor_cyclic_modulus(&Field::prime(2).unwrap(), 7).unwrap();
    let expected = serde_json::to_string_pretty(&format::factor_json(&cls)).unwrap() + "\n";
    assert_eq!(String::from_utf8(out.stdout.clone()).unwrap(), expected);
    let v = json(&out);
    assert_eq!(v["self_reciprocal"].as_array().unwrap().len(), 1);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 1);
    assert_eq!(v["delta"], 1);
}

#[test]
fn field_size_syntax() {
    let a = qckit(&["factor", "--q", "4", "--m", "5", "--json"]);
    let b = qckit(&["factor", "--q", "2^2", "--m", "5", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let bad = qckit(&["factor", "--q", "12", "--m", "5", "--json"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(json(&bad)["error"]["kind"], "NotPrimePower");
    let bad = qckit(&["factor", "--q", "two", "--m", "5", "--json"]);
    assert_eq!(json(&bad)["error"]["kind"], "BadParameters");
}

#[test]
fn isodual_selfdual_code_has_identity_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sd.json");
    let p = path.to_str().unwrap();
    let out = qckit(&["construct", "selfdual-qc", "--q", "2", "--l", "2", "--m", "3", "-o", p]);
    assert_eq!(out.status.code(), Some(0));
    let out = qckit(&["isodual", p, "--strategy", "bruteforce", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"], "isodual");
    assert_eq!(v["witness"]["is_identity"], true);
    let out = qckit(&["selfdual", p, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["agree"], true);
}

#[test]
fn hamming_codes_are_multiplier_equivalent() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", &hamming(vec![1, 1, 0, 1]));
    let b = write(dir.path(), "b.json", &hamming(vec![1, 0, 1, 1]));
    let out = qckit(&["equiv", "cyclic", &a, &b, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let w = json(&out)["multiplier"].as_u64().unwrap();
    assert!([3, 5, 6].contains(&w));
    let out = qckit(&["equiv", "linear", &a, &b, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["witness"]["is_permutation"], true);
}

#[test]
fn dual_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", &hamming(vec![1, 1, 0, 1]));
    let d = dir.path().join("d.json");
    let dd = dir.path().join("dd.json");
    assert_eq!(qckit(&["dual", &a, "-o", d.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(qckit(&["dual", d.to_str().unwrap(), "-o", dd.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(dd).unwrap(), hamming(vec![1, 1, 0, 1]));
    let out = qckit(&["equiv", "linear", &a, d.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn isodual_qc_over_f3_reports_monomial_only() {
    let out = qckit(&["construct", "isodual-qc", "--q", "3", "--l", "2", "--m", "1", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["permutation_verdict"]["result"], "not_isodual");
    assert_eq!(v["bruteforce_verdict"]["result"], "not_isodual");
    assert_eq!(v["monomial_witness"]["is_permutation"], false);
}

#[test]
fn decompose_and_enumerate() {
    let dir = tempfile::tempdir().unwrap();
    let f2 = Field::prime(2).unwrap();
    let c = QuasiCyclicCode::new(&f2, 2, 3, &[vec![1, 0, 1, 0, 1, 0], vec![0, 1, 0, 1, 0, 1]]).unwrap();
    let p = write(dir.path(), "c.json", &CodeFile::from_qc(&c).unwrap().to_json());
    let v = json(&qckit(&["decompose", &p, "--json"]));
    assert_eq!(v["constituents"][0]["dim"], 2);
    assert_eq!(v["constituents"][1]["dim"], 0);
    assert_eq!(v["base_dimension"], 2);

    let full = QuasiCyclicCode::from_linear(qckit::LinearCode::full(&f2, 9), 3).unwrap();
    let p = write(dir.path(), "full.json", &CodeFile::from_qc(&full).unwrap().to_json());
    let out = qckit(&["enumerate", &p, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["tuples_counted"].as_u64(), v["distinct_codes"].as_u64()), (Some(9), Some(1)));
    let out = qckit(&["equiv", "qc", &p, &p, "--json"]);
    assert_eq!(json(&out)["multipliers"], serde_json::json!([1, 1]));
}

#[test]
fn bad_inputs_exit_two_with_error_object() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "x.json", r#"{"format_version":"qckit-1","field":{"p":2,"e":1},"n":1,"generators":[],"colour":1}"#);
    let out = qckit(&["dual", &p, "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"]["kind"], "Format");
    assert_eq!(v["error"]["format_version"], "qckit-1");

    let out = qckit(&["selfdual", "/nonexistent/file.json", "--json"]);
    assert_eq!((out.status.code(), json(&out)["error"]["kind"].as_str()), (Some(2), Some("Io")));

    let out = qckit(&["frobnicate", "--json"]);
    assert_eq!((out.status.code(), json(&out)["error"]["kind"].as_str()), (Some(2), Some("Usage")));

    let out = qckit(&["dual", &p]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error [Format]"));
    assert!(!String::from_utf8_lossy(&out.stderr).contains("panicked"));
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(qckit(&["--help"]).status.code(), Some(0));
    assert_eq!(qckit(&["--version"]).status.code(), Some(0));
    assert_eq!(qckit(&["construct", "--help"]).status.code(), Some(0));
}

#[test]
fn single_selftest_suite() {
    let out = qckit(&["selftest", "--suite", "factorization", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["seed"], 1729);
    assert_eq!(v["suites"][0]["passed"], true);
    let out = qckit(&["selftest", "--suite", "nope", "--json"]);
    assert_eq!(json(&out)["error"]["kind"], "UnknownSuite");
}

#[test]
fn isodual_cyclic_construction() {
    let out = qckit(&["construct", "isodual-cyclic", "--q", "5", "--s", "3", "--variant", "B", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["code"]["n"], 6);
    assert_eq!(v["code"]["cyclic"]["n"], 6);
}
