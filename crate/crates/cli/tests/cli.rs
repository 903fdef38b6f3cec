use std::process::Command;

use serde_json::Value;

const PARABOLIC_QUARTIC: &str = "2*x*y^3-6*x*y^2*z+6*x*y*z^2-2*x*z^3+4*y^3*z-8*y^2*z^2+4*y*z^3-y+z-1";
const ELLIPSOID: &str = "4*x^2+16*y^2+z^2-1";
const HYPERBOLIC: &str = "-u^3*(v^2+1)/(2*v); u^3*(v^2-1)/(2*v); u^2+1";

fn run(args: &[&str]) -> (u8, String, String) {
    let mut argv = vec!["ars"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = ars::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{}", err);
    serde_json::from_str(&out).unwrap()
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn quartic_with_parabolic_axis() {
    let r = run_json(&["detect", "--implicit", PARABOLIC_QUARTIC, "--json"]);
    assert_eq!(r["input"]["implicit"], PARABOLIC_QUARTIC);
    assert_eq!(r["D"], 1);
    let axes = r["axes"].as_array().unwrap();
    assert_eq!(axes.len(), 1);
    assert_eq!(axes[0]["type"], "parabolic");
    assert_eq!(strings(&axes[0]["direction"]), ["1/1", "0/1", "0/1"]);
    assert_eq!(strings(&axes[0]["moment"]), ["0/1", "0/1", "0/1"]);
    assert_eq!(strings(&axes[0]["normal_direction"]), ["0/1", "1/1", "-1/1"]);
    assert_eq!(axes[0]["evidence"]["generator_identity"], true);
    assert_eq!(r["affine_sphere"]["is"], false);
}

#[test]
fn ellipsoid_matches_golden() {
    let (code, out, _) = run(&["detect", "--implicit", ELLIPSOID, "--json"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/ellipsoid.json"));
    let r: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(r["affine_sphere"]["is"], true);
    assert_eq!(strings(&r["affine_sphere"]["center"]["point"]), ["0/1", "0/1", "0/1"]);
    assert!(r["axes"].as_array().unwrap().is_empty());
    assert_eq!(r["verdict"], "affine sphere, not an affine rotation surface");
}

#[test]
fn text_report() {
    let (code, out, _) = run(&["detect", "--implicit", ELLIPSOID]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: affine sphere, not an affine rotation surface\n"));
    assert!(out.contains("affine sphere center (0, 0, 0)\n"));
}

#[test]
fn parametric_hyperbolic_axis() {
    let r = run_json(&["detect", "--parametric", HYPERBOLIC, "--json"]);
    let axes = r["axes"].as_array().unwrap();
    assert_eq!(axes.len(), 1);
    assert_eq!(axes[0]["type"], "hyperbolic");
    assert_eq!(strings(&axes[0]["direction"]), ["0/1", "0/1", "1/1"]);
    assert_eq!(r["prechecks"]["irreducible"], "not applicable");
}

#[test]
fn numbers_are_exact_strings() {
    fn walk(v: &Value, key: &str) {
        match v {
            Value::Number(_) => assert!(["D", "degree", "multiplicity"].contains(&key) || key.is_empty(), "number under {}", key),
            Value::Array(a) => a.iter().for_each(|x| walk(x, key)),
            Value::Object(o) => o.iter().for_each(|(k, x)| walk(x, k)),
            _ => {}
        }
    }
    let mut r = run_json(&["detect", "--implicit", PARABOLIC_QUARTIC, "--json"]);
    // Exponent vectors of the implicit terms are integers by nature.
    r["implicit"] = Value::Null;
    walk(&r, "");
    for s in strings(&r["basis"][0]) {
        assert!(s.split_once('/').is_some_and(|(n, d)| n.parse::<i64>().is_ok() && d.parse::<u64>().is_ok()));
    }
}

#[test]
fn revolution_cone() {
    let (code, out, _) = run(&["cone", "--w", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("case: revolution-cone\n"));
    assert!(out.contains("axis of revolution: (1, 0, 1)\n"));
    let r = run_json(&["cone", "--w", "0", "--json"]);
    assert_eq!(strings(&r["revolution_axis"]), ["1/1", "0/1", "1/1"]);
}

#[test]
fn cone_cases() {
    let r = run_json(&["cone", "--w", "3", "--json"]);
    assert_eq!(r["case"], "elliptic-cone");
    // l^2 + 3 l - 1 = 0
    assert_eq!(r["eigenvalues"][1]["text"], "-3/2 + 1/2*sqrt(13)");
    let r = run_json(&["cone", "--w", "2*sqrt(-1)", "--json"]);
    assert_eq!(r["case"], "non-diagonalizable");
    let r = run_json(&["cone", "--w", "1+sqrt(-1)", "--json"]);
    assert_eq!(r["case"], "imaginary");
}

#[test]
fn form_structure() {
    let r = run_json(&["structure", "--form", "x*(y^2-2*x*z)^2*(y^2-2*x*z-x^2)", "--json"]);
    assert_eq!(r["degree"], 7);
    assert_eq!(r["plane_multiplicity"], 1);
    assert_eq!(r["cone_multiplicity"], 2);
    let roots = r["w_roots"].as_array().unwrap();
    assert_eq!(roots.len(), 1);
    assert_eq!(roots[0]["value"]["text"], "1");
    let (code, _, err) = run(&["structure", "--form", "x^3+y^3"]);
    assert_eq!(code, 1);
    assert!(err.contains("not a polynomial in y^2 - 2xz"));
}

#[test]
fn generated_surface_round_trip() {
    let r = run_json(&["generate", "--type", "parabolic", "--directrix", "s; s^3", "--origin", "1,2,3", "--json"]);
    assert_eq!(strings(&r["axis"]["direction"]), ["0/1", "0/1", "1/1"]);
    let x = r["parametric"].as_str().unwrap();
    let d = run_json(&["detect", "--parametric", x, "--json"]);
    let axes = d["axes"].as_array().unwrap();
    assert_eq!(axes.len(), 1);
    assert_eq!(axes[0]["type"], "parabolic");
    assert_eq!(axes[0]["direction"], r["axis"]["direction"]);
    assert_eq!(axes[0]["moment"], r["axis"]["moment"]);
}

#[test]
fn implicitize_cone() {
    let (code, out, _) = run(&["implicitize", "--parametric", "u; v*u; v^2*u/2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "2*x*z - y^2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["detect", "--implicit", "x^2+y^2-z^2"]).0, 2);
    assert_eq!(run(&["detect", "--implicit", "x+y"]).0, 2);
    assert_eq!(run(&["detect", "--implicit", "(x^2+y^2+z^2-1)*(x^2+y^2+z^2-4)"]).0, 2);
    assert_eq!(run(&["detect", "--parametric", "u+v; u+v; u"]).0, 2);
    assert_eq!(run(&["implicitize", "--parametric", "u^7+v; v^5*u; u^3+v^4", "--degree-bound", "3"]).0, 3);
    assert_eq!(run(&["detect", "--implicit", "x^2+"]).0, 64);
    assert_eq!(run(&["detect"]).0, 64);
    assert_eq!(run(&["detect", "--implicit", "x", "--parametric", "u;v;u"]).0, 64);
    assert_eq!(run(&["detect", "--implicit", PARABOLIC_QUARTIC, "--samples", "5"]).0, 64);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["--help"]).0, 0);
    let (code, _, err) = run(&["detect", "--implicit", "x^2+y^2-z^2"]);
    assert_eq!(code, 2);
    assert_eq!(err, "error: input rejected: surface is developable\n");
}

#[test]
fn report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = run(&["detect", "--implicit", ELLIPSOID, "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), include_str!("golden/ellipsoid.json"));
}

#[test]
fn section_polylines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("section.json");
    let (code, out, err) = run(&["sections", "--implicit", "x^2+y^2-z^3-z", "--plane", "0,0,1,-2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{}", err);
    assert!(out.contains("family: concentric circles at (0, 0, 2)\n"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(strings(&v["plane"]), ["0/1", "0/1", "1/1", "-2/1"]);
    assert_eq!(v["presentation_only"], true);
    let curves = v["curves"].as_array().unwrap();
    assert_eq!(curves.len(), 1);
    // x^2 + y^2 = 10 at z = 2
    for p in curves[0].as_array().unwrap() {
        let p: Vec<f64> = p.as_array().unwrap().iter().map(|c| c.as_f64().unwrap()).collect();
        assert!(((p[0] * p[0] + p[1] * p[1]).sqrt() - 10f64.sqrt()).abs() < 0.05);
        assert_eq!(p[2], 2.0);
    }
}

#[test]
fn parametric_section_is_two_branches() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("section.json");
    let r = run_json(&["sections", "--parametric", HYPERBOLIC, "--plane", "0,0,1,-5", "--out", path.to_str().unwrap(), "--json"]);
    assert_eq!(r["conic"], "rectangular hyperbola");
    assert_eq!(strings(&r["family"]["center"]), ["0/1", "0/1", "5/1"]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["curves"].as_array().unwrap().len(), 2);
}

#[test]
fn binary_output_is_reproducible() {
    let bin = env!("CARGO_BIN_EXE_ars");
    let args = ["detect", "--implicit", PARABOLIC_QUARTIC, "--json"];
    let outputs: Vec<Vec<u8>> = (0..2).map(|_| Command::new(bin).args(args).output().unwrap().stdout).collect();
    assert!(!outputs[0].is_empty());
    assert_eq!(outputs[0], outputs[1]);
    let seeded = Command::new(bin).args(args).env("ARS_SEED", "17").output().unwrap();
    assert!(seeded.status.success());
    assert_eq!(seeded.stdout, outputs[0]);
    let bad = Command::new(bin).args(args).env("ARS_SEED", "seventeen").output().unwrap();
    assert_eq!(bad.status.code(), Some(64));
    let rejected = Command::new(bin).args(["detect", "--implicit", "x^2+y^2-z^2"]).output().unwrap();
    assert_eq!(rejected.status.code(), Some(2));
}
