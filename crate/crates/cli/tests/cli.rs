use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn quadop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadop"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--json", "--no-timing"]);
    let out = quadop(&all);
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|_| panic!("{}", String::from_utf8_lossy(&out.stderr)));
    (v, code)
}

#[test]
fn magma_dims() {
    let (v, code) = json(&["dims", "--operad", "magma", "--max-arity", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["dims"], serde_json::json!([1, 2, 12, 120]));
    assert!(v.get("dual").is_none());
    assert!(v.get("timing").is_none());
}

#[test]
fn relations_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"name": "mine", "relations": ["(a*b)*c = a*(b*c)"]}}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    let (v, code) = json(&["dims", "--relations-file", path, "--max-arity", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["operad"], "mine");
    assert_eq!(v["dims"], serde_json::json!([1, 2, 6, 24]));
    assert_eq!(v["closure_enlarged"], true);
}

#[test]
fn dual_of_magma_is_everything() {
    let (v, _) = json(&["dual", "--operad", "magma"]);
    assert_eq!(v["dual"]["dimension"], 12);
    assert_eq!(v["dual"]["generators"].as_array().unwrap().len(), 12);
    assert_eq!(v["dual"]["routes_agree"], true);
}

#[test]
fn dual_of_prelie_is_perm() {
    for route in ["pairing", "lieadm", "both"] {
        let (v, code) = json(&["dual", "--operad", "prelie-right", "--route", route]);
        assert_eq!(code, 0);
        assert_eq!(v["dual"]["matches_preset"], "perm", "{route}");
    }
}

#[test]
fn koszul_verdicts_and_exit_codes() {
    let (v, code) = json(&["koszul", "--operad", "assoc"]);
    assert_eq!(code, 0);
    assert_eq!(v["koszul"]["verdict"], "inconclusive");
    assert_eq!(v["koszul"]["obstruction_order"], Value::Null);
    let (v, code) = json(&["koszul", "--operad", "magma", "--order", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["koszul"]["dual_dims"], serde_json::json!([1, 2, 0, 0]));
    assert_eq!(
        v["koszul"]["composite"],
        serde_json::json!(["1", "0", "0", "0"])
    );
    let (v, code) = json(&["koszul", "--operad", "novikov-left"]);
    assert_eq!(code, 1);
    assert_eq!(v["koszul"]["obstruction_coefficient"], "1/6");
}

#[test]
fn reduce() {
    let (v, _) = json(&["reduce", "--operad", "novikov-right", "a*(b*c)"]);
    let nf = v["reduce"]["normal_form"].as_str().unwrap();
    let (w, _) = json(&["reduce", "--operad", "novikov-right", "b*(a*c)"]);
    assert_eq!(w["reduce"]["normal_form"], nf);
    let (v, _) = json(&["reduce", "--operad", "assoc", "(a*b)*c - a*(b*c)"]);
    assert_eq!(v["reduce"]["normal_form"], "0");
    assert_eq!(v["reduce"]["in_span"], true);
    let (v, _) = json(&["reduce", "--operad", "novikov-right", "(x*y)*z = x*(y*z)"]);
    assert_eq!(v["reduce"]["in_span"], false);
}

#[test]
fn error_exit_codes() {
    assert_eq!(quadop(&["dims", "--operad", "lie"]).status.code(), Some(2));
    assert_eq!(quadop(&["dims"]).status.code(), Some(2));
    assert_eq!(
        quadop(&["reduce", "--operad", "assoc", "a*b*c"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        quadop(&["reduce", "--operad", "assoc", "a*b"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        quadop(&["dims", "--operad", "assoc", "--field", "prime:10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        quadop(&["dims", "--operad", "assoc", "--max-arity", "7"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        quadop(&["dims", "--operad", "assoc", "--arity-cap", "8"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        quadop(&["dims", "--relations-file", "/nonexistent.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn text_output() {
    let out = quadop(&["dual", "--operad", "novikov-right", "--no-timing"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("routes agree: PASS"));
    assert!(text.contains("preset novikov-left"));
    assert!(!text.contains("time:"));
}

#[test]
fn expression_may_start_with_minus() {
    let (v, code) = json(&[
        "reduce",
        "--operad",
        "novikov-left",
        "-(v*u)*w + (v*w)*u = 0",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["reduce"]["in_span"], true);
}
