use std::process::{Command, Output};

use serde_json::Value;

fn hadamard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hadamard"))
        .args(args)
        .env_remove("HD_TOL")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn norm_of_dirichlet_kernel() {
    let v = json(&hadamard(&["norm", "--kernel", "dirichlet:7"]));
    assert!((v["lower"].as_f64().unwrap() - 8f64.sqrt()).abs() < 1e-12);
    assert_eq!(v["exact"], true);
    assert_eq!(v["truncation"], 8);
}

#[test]
fn norm_methods_agree() {
    let dense = json(&hadamard(&["norm", "--kernel", "vallee-poussin:6", "--method", "dense"]));
    let power = json(&hadamard(&["norm", "--kernel", "vallee-poussin:6", "--method", "power"]));
    let (a, b) = (dense["lower"].as_f64().unwrap(), power["lower"].as_f64().unwrap());
    assert!((a - 2f64.sqrt()).abs() < 1e-12);
    assert!((a - b).abs() < 1e-9);
    assert!(!hadamard(&["norm", "--kernel", "fejer:3", "--method", "qr"]).status.success());
}

#[test]
fn short_section_is_not_exact() {
    let v = json(&hadamard(&["norm", "--coeffs", "[[0,0],[1,0],[1,0],[1,0]]", "--trunc", "2"]));
    assert_eq!(v["exact"], false);
    assert!(v["upper"].as_f64().unwrap() >= v["lower"].as_f64().unwrap());
}

#[test]
fn bounds_for_dirichlet_two() {
    let v = json(&hadamard(&["bounds", "--coeffs", "[[1,0],[1,0],[1,0]]"]));
    assert_eq!(v["upper_i"], 7.0);
    assert!((v["ii"].as_f64().unwrap() - 3f64.sqrt()).abs() < 1e-12);
    assert!(v["lower"].as_f64().unwrap() <= 3f64.sqrt());
}

#[test]
fn local_dirichlet_at_boundary_and_interior() {
    let v = json(&hadamard(&[
        "local-dirichlet",
        "--series",
        "[[1,0],[0,0],[0,0],[-4,0],[3,0]]",
        "--zeta",
        "1,0",
    ]));
    assert_eq!(v["value"], 12.0);
    assert_eq!(v["g"], serde_json::json!([[-1.0, 0.0], [-1.0, 0.0], [-1.0, 0.0], [3.0, 0.0]]));

    let v = json(&hadamard(&["local-dirichlet", "--series", "[[0,0],[1,0]]", "--zeta", "-0.5,0.2"]));
    assert_eq!(v["value"], 1.0);
    assert!(!hadamard(&["local-dirichlet", "--series", "[[0,0],[1,0]]", "--zeta", "2,0"]).status.success());
}

#[test]
fn quadrature_poisson_atom() {
    let v = json(&hadamard(&[
        "quadrature",
        "--series",
        "[[0,0],[1,0]]",
        "--atoms",
        r#"[{"zeta":[1,0],"mass":1}]"#,
        "--levels",
        "8",
    ]));
    assert!((v["value"].as_f64().unwrap() - 1.0).abs() < 1e-2);
    assert!(v["refinement_gap"].as_f64().unwrap() <= 1e-2);
}

#[test]
fn inputs_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let series = dir.path().join("f.json");
    std::fs::write(&series, "[[0,0],[0,0],[1,0]]").unwrap();
    let v = json(&hadamard(&["local-dirichlet", "--series", series.to_str().unwrap(), "--zeta", "0"]));
    assert_eq!(v["value"], 1.0);
}

#[test]
fn verify_writes_deterministic_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let csv = dir.path().join("a.csv");
    for path in [&a, &b] {
        let out = hadamard(&[
            "verify",
            "divergence",
            "--seed",
            "4",
            "--out",
            path.to_str().unwrap(),
            "--csv",
            csv.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let text = std::fs::read(&a).unwrap();
    assert_eq!(text, std::fs::read(&b).unwrap());
    let first: Value = serde_json::from_str(String::from_utf8(text).unwrap().lines().next().unwrap()).unwrap();
    assert_eq!(first["kind"], "report");
    assert_eq!(first["passed"], true);
    assert!(std::fs::read_to_string(&csv).unwrap().starts_with("table,label,column,value\n"));
}

#[test]
fn verify_failures_exit_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let status = hadamard(&["verify", "no-such-suite", "--out", out.to_str().unwrap()]).status;
    assert_eq!(status.code(), Some(1));

    // The Cesàro floor of 1.8 at N = 4096 is not reached.
    let status = hadamard(&["verify", "bounds-sandwich", "--out", out.to_str().unwrap()]).status;
    assert_eq!(status.code(), Some(1));
}

#[test]
fn tolerance_override_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let status = Command::new(env!("CARGO_BIN_EXE_hadamard"))
        .args(["verify", "sharpness", "--out", out.to_str().unwrap()])
        .env("HD_TOL", "0.5")
        .status()
        .unwrap();
    // D_0 gives 0 against 1, outside even a 0.5 tolerance.
    assert_eq!(status.code(), Some(1));
    let head: Value =
        serde_json::from_str(std::fs::read_to_string(&out).unwrap().lines().next().unwrap()).unwrap();
    assert_eq!(head["parameters"]["tolerances"]["exact"], 0.5);
}
