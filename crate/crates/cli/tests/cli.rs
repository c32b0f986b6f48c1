use std::process::Command;

use braidrep::{burau, LaurentPoly};
use braidrep_cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("braidrep").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = call(&full);
    assert!(code <= 1, "exit {code}: {err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn braid_relation_is_equal() {
    let (code, out, _) = call(&["equal", "--n", "3", "--w1", "1,2,1", "--w2", "2,1,2"]);
    assert_eq!((code, out.as_str()), (0, "equal\n"));
    let (code, out, _) = call(&["equal", "--n", "3", "--w1", "1,2", "--w2", "2,1"]);
    assert_eq!((code, out.as_str()), (1, "not equal\n"));
}

#[test]
fn kernel_word_is_nontrivial() {
    let word = burau::kernel_word_b6().to_string();
    let (code, out, _) = call(&["trivial", "--n", "6", "--word", &word]);
    assert_eq!(code, 1);
    assert!(out.starts_with("nontrivial (LKB)\n"));
    assert!(out.contains("Burau image is the identity"));
    let m = json(&["matrix", "--rep", "burau", "--n", "6", "--word", &word]);
    let entries = m["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 6);
    assert!(entries.iter().all(|e| e[0] == e[1] && e[2] == "1*q^0*t^0"));
    let (code, _, _) = call(&["trivial", "--n", "4", "--word", "1 2 -2 -1"]);
    assert_eq!(code, 0);
}

#[test]
fn bratteli_dimension() {
    let (code, out, _) = call(&["bratteli", "--n", "6", "--diagram", "1,1,1,1"]);
    assert_eq!((code, out.as_str()), (0, "15\n"));
    let level = json(&["bratteli", "--n", "4"]);
    assert_eq!(level["sum_squares"], "105");
    let (code, _, err) = call(&["bratteli", "--n", "4", "--diagram", "3"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn matrix_json_round_trips() {
    let v = json(&["matrix", "--rep", "lkb", "--n", "4", "--word", "1,-2,3"]);
    assert_eq!(v["dim"], 6);
    assert_eq!(v["order"], "lex-refpair");
    let expected = braidrep::lkb::of_word(&braidrep::BraidWord::parse(4, "1,-2,3").unwrap()).unwrap();
    let mut rebuilt = braidrep::RepMatrix::zero(6);
    for e in v["entries"].as_array().unwrap() {
        let poly: LaurentPoly = e[2].as_str().unwrap().parse().unwrap();
        assert!(!poly.is_zero());
        rebuilt.set(e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize, poly);
    }
    assert_eq!(rebuilt, expected);
}

#[test]
fn normal_form_and_length() {
    let v = json(&["normal-form", "--n", "3", "--word", "1,2,1,1"]);
    assert_eq!(v["factors"], serde_json::json!([[1, 2, 1], [1]]));
    let (code, _, _) = call(&["normal-form", "--n", "3", "--word", "1,-2"]);
    assert_eq!(code, 2);
    let (_, out, _) = call(&["length-omega", "--n", "3", "--word", "-1,-2,-1"]);
    assert_eq!(out, "1\n");
    let (_, out, _) = call(&["length-omega", "--n", "3", "--word", "1,-2"]);
    assert_eq!(out, "2\n");
}

#[test]
fn growth_census() {
    let v = json(&["growth", "--n", "3", "--radius", "2"]);
    assert_eq!(v["counts"], serde_json::json!([1, 10, 34]));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["matrix", "--rep", "lkb", "--n", "3", "--word", "1,x"]).0, 2);
    assert_eq!(call(&["matrix", "--rep", "lkb", "--n", "3", "--word", "3"]).0, 2);
    assert_eq!(call(&["matrix", "--rep", "lkb", "--n", "40", "--word", "1"]).0, 3);
    assert_eq!(call(&["growth", "--n", "9", "--radius", "1"]).0, 3);
    assert_eq!(call(&["verify", "--suite", "nope", "--n", "3"]).0, 2);
    assert_eq!(call(&["no-such-command"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn verify_suites() {
    let (code, out, _) = call(&["verify", "--suite", "all", "--n", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS") || l.starts_with("INFO")));
    let v = json(&["verify", "--suite", "full-twist", "--n", "3"]);
    assert_eq!(v["passed"], true);
    let (_, again, _) = call(&["verify", "--suite", "all", "--n", "4"]);
    assert_eq!(again, out);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_braidrep");
    let equal = Command::new(bin).args(["equal", "--n", "3", "--w1", "1,2,1", "--w2", "2,1,2"]).output().unwrap();
    assert_eq!(equal.status.code(), Some(0));
    assert_eq!(equal.stdout, b"equal\n");
    let trivial = Command::new(bin).args(["trivial", "--n", "3", "--word", "1"]).output().unwrap();
    assert_eq!(trivial.status.code(), Some(1));
    let env_guard = Command::new(bin)
        .args(["growth", "--n", "4", "--radius", "2"])
        .env("BRAIDREP_MAX_BALL", "50")
        .output()
        .unwrap();
    assert_eq!(env_guard.status.code(), Some(3));
}
