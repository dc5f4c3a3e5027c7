use std::io::Write;
use std::process::Command;

use acn_cli::commands::{self, ExportTarget, Which};
use acn_cli::InputDocument;
use serde_json::Value;

fn acn(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_acn")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn doc(target: ExportTarget) -> InputDocument {
    InputDocument::from_json(&commands::export(target).unwrap()).unwrap()
}

fn write(doc: &InputDocument) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(doc.to_json().as_bytes()).unwrap();
    f
}

fn json_run(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let (code, out, err) = acn(&all);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}")))
}

#[test]
fn check_passes_on_g() {
    let f = write(&doc(ExportTarget::G));
    let (code, out, _) = acn(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("[PASS] Jacobi identity"));
    assert!(out.contains("```json"));
}

#[test]
fn check_names_the_failing_triple() {
    let mut d = doc(ExportTarget::G);
    // [X1, X2] = X1 + a X4
    d.brackets.get_mut("1,2").unwrap()[0] = "1".into();
    let f = write(&d);
    let (code, v) = json_run(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    let checks = v["report"]["checks"].as_array().unwrap();
    let jacobi = checks.iter().find(|c| c["name"] == "Jacobi identity").unwrap();
    assert_eq!(jacobi["passed"], false);
    assert!(jacobi["detail"].as_str().unwrap().contains("(X1, X2, "));
}

#[test]
fn check_passes_on_abelian_flat_structure() {
    let text = r#"{
        "dim": 3,
        "basis": ["e1", "e2", "e3"],
        "metric": [["1","0","0"],["0","-1","0"],["0","0","1"]],
        "phi": [["0","-1","0"],["1","0","0"],["0","0","0"]],
        "xi": ["0","0","1"],
        "eta": ["0","0","1"]
    }"#;
    let d = InputDocument::from_json(text).unwrap();
    let f = write(&d);
    let (code, _, _) = acn(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    for which in ["f", "connection", "curvature"] {
        let (code, out, _) = acn(&["tensors", f.path().to_str().unwrap(), "--which", which]);
        assert_eq!(code, 0);
        assert!(out.contains("all components zero"), "{out}");
    }
}

#[test]
fn tensors_f_pattern_on_g() {
    let out = commands::tensors(&doc(ExportTarget::G), Which::F).unwrap();
    assert_eq!(out.machine["f"]["routes_agree"], true);
    assert_eq!(out.machine["f"]["class_f0"], false);
    let comps = out.machine["components"].as_array().unwrap();
    assert_eq!(comps.len(), 8);
    assert!(comps.iter().all(|c| c["value"] == "m" || c["value"] == "-m"));
    assert!(comps.iter().any(|c| c["index"] == serde_json::json!([1, 4, 5]) && c["value"] == "m"));
}

#[test]
fn tensors_on_induced_h3_vanish() {
    let f = write(&doc(ExportTarget::H3Induced));
    let (code, v) = json_run(&["tensors", f.path().to_str().unwrap(), "--which", "f"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_zero"], true);
    assert_eq!(v["f"]["class_f0"], true);
}

#[test]
fn tensors_reject_singular_metric() {
    let mut d = doc(ExportTarget::G);
    d.metric[0][0] = "0".into();
    let f = write(&d);
    let (code, _, err) = acn(&["tensors", f.path().to_str().unwrap(), "--which", "connection"]);
    assert_eq!(code, 3, "{err}");
}

#[test]
fn sub_h3_reports_f_zero() {
    let f = write(&doc(ExportTarget::H3));
    let (code, v) = json_run(&["sub", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["decomposition"]["case"], "Orthogonal");
    assert_eq!(v["decomposition"]["xi1"], serde_json::json!(["0", "1", "0"]));
    assert_eq!(v["induced"]["xi"], serde_json::json!(["-t2", "0", "t0"]));
    assert_eq!(v["f"]["class_f0"], true);
}

#[test]
fn sub_h_reports_the_induced_data() {
    let f = write(&doc(ExportTarget::H));
    let (code, v) = json_run(&["sub", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["induced"]["phi"], serde_json::json!([["0", "0", "0"], ["0", "0", "-1"], ["0", "1", "0"]]));
    assert_eq!(v["gauss_weingarten"]["a1"][0][1], "-m");
    assert_eq!(v["f"]["class_f0"], false);
    assert_eq!(v["f"]["routes_agree"], true);
}

#[test]
fn sub_introduces_k_when_absent() {
    let mut d = doc(ExportTarget::H);
    d.section.as_mut().unwrap().induce.as_mut().unwrap().k = None;
    let out = commands::submanifold(&d).unwrap();
    assert_eq!(out.exit, 0, "{}", out.human);
    assert_eq!(out.machine["induced"]["parameters"]["k"], "k");
    assert_eq!(out.machine["induced"]["axioms"]["passed"], true);
}

fn row(xs: &[i64]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

#[test]
fn sub_with_rational_k() {
    // flat 7-dimensional model, N1 = xi - X2 - X4, N2 = X6: a = 1, b = 0
    let n = 7;
    let unit = |i: usize, v: i64| (0..n).map(|j| if j == i { v } else { 0 }).collect::<Vec<_>>();
    let mut metric = Vec::new();
    let mut phi = vec![vec![0; n]; n];
    for i in 0..n {
        metric.push(row(&unit(i, if (3..6).contains(&i) { -1 } else { 1 })));
    }
    for i in 0..3 {
        phi[i + 3][i] = 1;
        phi[i][i + 3] = -1;
    }
    let d = InputDocument {
        symbols: vec![],
        relations: vec![],
        dim: n,
        basis: ["X1", "X2", "X3", "X4", "X5", "X6", "xi"].map(String::from).to_vec(),
        brackets: Default::default(),
        metric,
        phi: phi.iter().map(|r| row(r)).collect(),
        xi: row(&unit(6, 1)),
        eta: row(&unit(6, 1)),
        section: Some(acn_cli::document::SectionBlock {
            n1: row(&[0, -1, 0, -1, 0, 0, 1]),
            n2: row(&unit(5, 1)),
            tangent: vec![
                row(&unit(0, 1)),
                row(&unit(2, 1)),
                row(&unit(4, 1)),
                row(&[0, 1, 0, 0, 0, 0, 1]),
                row(&[0, 0, 0, 1, 0, 0, -1]),
            ],
            induce: None,
        }),
    };
    let out = commands::submanifold(&d).unwrap();
    assert_eq!(out.exit, 0, "{}", out.human);
    assert_eq!(out.machine["induced"]["parameters"]["k"], "1");
    assert_eq!(out.machine["induced"]["branch"], "KEqPlus1");
}

#[test]
fn sub_refuses_xi_sections() {
    let mut d = doc(ExportTarget::G);
    d.section = Some(acn_cli::document::SectionBlock {
        n1: ["0", "0", "0", "1", "0"].map(String::from).to_vec(),
        n2: ["0", "0", "0", "0", "1"].map(String::from).to_vec(),
        tangent: vec![
            ["1", "0", "0", "0", "0"].map(String::from).to_vec(),
            ["0", "1", "0", "0", "0"].map(String::from).to_vec(),
            ["0", "0", "1", "0", "0"].map(String::from).to_vec(),
        ],
        induce: None,
    });
    let f = write(&d);
    let (code, out, _) = acn(&["sub", f.path().to_str().unwrap()]);
    assert_eq!(code, 4);
    assert!(out.contains("xi-section: true"));
    assert!(out.contains("induction refused"));
}

#[test]
fn sub_requires_a_section_block() {
    let f = write(&doc(ExportTarget::G));
    let (code, _, err) = acn(&["sub", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("section"));
}

#[test]
fn malformed_input_exits_2() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(b"{\"dim\": 2,\n  \"basis\": 7}").unwrap();
    let (code, _, err) = acn(&["check", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = acn(&["check", "/nonexistent/file.json"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_examples_reports_the_known_discrepancies() {
    let (code, v) = json_run(&["verify-examples"]);
    assert_eq!(code, 1);
    let summary = v["summary"].as_array().unwrap();
    assert!(summary.iter().any(|s| s == "H3: class F₀ confirmed"));
    assert!(summary.iter().any(|s| s == "H: F matches closed form"));
    let failed: Vec<&str> = v["report"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["b1 is a subalgebra", "H: normal connection form gamma matches"]);
    for args in [["--epsilon", "-1", "--branch", "lambda1"], ["--epsilon", "1", "--branch", "lambda2"]] {
        let mut all = vec!["verify-examples"];
        all.extend_from_slice(&args);
        let (_, v) = json_run(&all);
        let checks = v["report"]["checks"].as_array().unwrap();
        let axioms: Vec<_> = checks.iter().filter(|c| c["name"].as_str().unwrap().starts_with("H: induced ")).collect();
        assert!(!axioms.is_empty() && axioms.iter().all(|c| c["passed"] == true));
    }
    let (code, _, _) = acn(&["verify-examples", "--epsilon", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn exports_reparse_to_the_same_document() {
    for t in ["g", "e-frame", "h3", "h", "h3-induced", "h-induced"] {
        let (code, out, _) = acn(&["export", t]);
        assert_eq!(code, 0);
        let d = InputDocument::from_json(&out).unwrap();
        assert_eq!(InputDocument::from_json(&d.to_json()).unwrap(), d);
        d.build().unwrap();
    }
}
