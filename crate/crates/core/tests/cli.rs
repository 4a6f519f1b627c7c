use std::process::Command;

use dunkl_core::cli::{run, EXIT_FAILED, EXIT_OK, EXIT_POLE, EXIT_USAGE};
use dunkl_core::polyring::{poly_from_json, PolyJson};
use dunkl_core::scalars::{RatFun, Rational};
use serde_json::Value;

type Q = RatFun<Rational>;

fn dunkl(args: &[&str]) -> dunkl_core::cli::Outcome {
    run(std::iter::once("dunkl").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = dunkl(args);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn limit_at_singular_value_is_centred_elementary() {
    let v = json(&["limit", "--group", "Sn:4", "--degree", "4", "--at", "1/4"]);
    assert_eq!(v["equals_centred_elementary"], true);
    let v = json(&["limit", "--group", "Sn:3", "--degree", "3", "--at", "0"]);
    assert_eq!(v["equals_centred_elementary"], true);
}

#[test]
fn limit_reports_pole() {
    let out = dunkl(&["limit", "--group", "Sn:4", "--degree", "4", "--at", "5/12"]);
    assert_eq!(out.code, EXIT_POLE);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"], "pole");
    assert_eq!(v["denominator"], "12*c-5");
}

#[test]
fn canonical_dihedral_expansion() {
    let v = json(&["canonical", "--group", "I2:5", "--a", "0,2"]);
    let exp = v["expansion"].as_array().unwrap();
    assert_eq!(exp.len(), 2);
    assert_eq!(exp[0]["monomial"], "e5^2");
    assert_eq!(exp[0]["coef"], "1");
    assert_eq!(exp[1]["monomial"], "e2^5");
    assert_eq!(exp[1]["coef"], "2/(c-1)");
}

#[test]
fn canonical_e4_matches_closed_form() {
    let v = json(&["canonical", "--group", "Sn0:4", "--a", "0,0,1"]);
    let exp = v["expansion"].as_array().unwrap();
    assert_eq!(exp[0]["monomial"], "eb4");
    assert_eq!(exp[1]["monomial"], "eb2^2");
    assert_eq!(exp[1]["coef"], "(-4*c+1)/(48*c-20)");
}

#[test]
fn canonical_monic_square() {
    let v = json(&["canonical", "--group", "Sn:3", "--a", "2,0,0"]);
    assert_eq!(v["expansion"].as_array().unwrap().len(), 1);
    let p: PolyJson = serde_json::from_value(v["poly"].clone()).unwrap();
    let poly = poly_from_json::<Q>(&p).unwrap();
    let e1 = dunkl_core::invariants::elementary_symmetric::<Q>(1, 3);
    assert_eq!(poly, e1.pow(2));
}

#[test]
fn canonical_json_round_trips() {
    for args in [["--group", "Sn:4", "--a", "0,0,0,1"], ["--group", "Sn:3", "--a", "1,0,1"]] {
        let v = json(&[&["canonical"][..], &args[..]].concat());
        let p: PolyJson = serde_json::from_value(v["poly"].clone()).unwrap();
        let poly = poly_from_json::<Q>(&p).unwrap();
        let again = dunkl_core::polyring::poly_to_json(&poly, &p.params, None);
        assert_eq!(again, p);
    }
}

#[test]
fn canonical_formats() {
    let plain = dunkl(&["canonical", "--group", "I2:5", "--a", "0,2", "--format", "plain"]);
    assert_eq!(plain.stdout.trim(), "b[e5^2] = e5^2 + (2/(c-1))*e2^5");
    let tex = dunkl(&["canonical", "--group", "I2:5", "--a", "0,2", "--format", "latex"]);
    assert!(tex.stdout.contains(r"\frac{2}{c-1} e_{2}^{5}"), "{}", tex.stdout);
}

#[test]
fn rational_params() {
    let v = json(&["canonical", "--group", "I2:5", "--a", "0,2", "--params", "-1"]);
    assert_eq!(v["expansion"][1]["coef"], "-1");
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "--suite", "commute", "--group", "Sn:4", "--max-degree", "6", "--seed", "42"][..],
        &["verify", "--suite", "gf", "--group", "I2:5", "--order", "3"][..],
        &["verify", "--suite", "limit", "--group", "Sn:5"][..],
    ] {
        let out = dunkl(args);
        assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
        let v: Value = serde_json::from_str(out.stdout.lines().next().unwrap()).unwrap();
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
        assert!(v["cases"].as_u64().unwrap() > 0);
    }
}

#[test]
fn verify_reports_sorted_and_deterministic() {
    let args = ["verify", "--suite", "phic-poly,berest", "--suite", "commute", "--group", "I2:3", "--seed", "7"];
    let a = dunkl(&args);
    let b = dunkl(&args);
    assert_eq!(a, b);
    let names: Vec<String> = a
        .stdout
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["suite"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(names, ["berest", "commute", "phic-poly"]);
}

#[test]
fn exit_codes() {
    assert_eq!(dunkl(&["verify", "--suite", "bogus", "--group", "Sn:3"]).code, EXIT_USAGE);
    assert_eq!(dunkl(&["canonical", "--group", "Xn:3", "--a", "1"]).code, EXIT_USAGE);
    assert_eq!(dunkl(&["canonical", "--group", "Sn:3", "--a", "1,0"]).code, EXIT_USAGE);
    assert_eq!(dunkl(&["canonical", "--group", "Sn:3"]).code, EXIT_USAGE);
    assert_eq!(dunkl(&["verify", "--suite", "gf", "--group", "Sn:3"]).code, EXIT_USAGE);
    assert_ne!(EXIT_FAILED, EXIT_OK);
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_dunkl"))
        .args(["limit", "--group", "Sn:4", "--degree", "4", "--at", "5/12"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_POLE));
    let lib = dunkl(&["limit", "--group", "Sn:4", "--degree", "4", "--at", "5/12"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
}
