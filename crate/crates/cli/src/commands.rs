use std::fmt::Write as _;
use std::sync::Arc;

use acn_core::catalog::{self, symbol_table};
use acn_core::geometry::*;
use acn_core::submanifold::*;
use acn_core::{Fraction, Matrix, Report, SymbolTable, Tensor3, Vector};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::document::{Built, InduceBlock, InputDocument};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Connection,
    Curvature,
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Lambda1,
    Lambda2,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Lambda1 => Branch::Lambda1,
            BranchArg::Lambda2 => Branch::Lambda2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportTarget {
    G,
    EFrame,
    H3,
    H,
    H3Induced,
    HInduced,
}

/// A command result: a human block, a machine block and the exit code.
#[derive(Clone, Debug)]
pub struct Output {
    pub human: String,
    pub machine: Value,
    pub exit: i32,
}

impl Output {
    fn new(human: String, machine: Value, ok: bool) -> Self {
        Output { human, machine, exit: if ok { 0 } else { 1 } }
    }

    pub fn render(&self, format: Format) -> String {
        let machine = serde_json::to_string_pretty(&self.machine).expect("json values");
        match format {
            Format::Human => format!("{}\n```json\n{machine}\n```\n", self.human.trim_end()),
            Format::Json => format!("{machine}\n"),
        }
    }
}

pub fn read_document(path: &str) -> Result<InputDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.into(), message: e.to_string() })?;
    InputDocument::from_json(&text)
}

fn report_json(r: &Report) -> Value {
    json!({
        "title": r.title,
        "passed": r.all_passed(),
        "checks": r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

fn vec_json(v: &Vector<Fraction>) -> Value {
    json!(v.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn mat_json(m: &Matrix<Fraction>) -> Value {
    json!(m.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn vec_text(v: &Vector<Fraction>) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn mat_text(out: &mut String, indent: &str, m: &Matrix<Fraction>) {
    for r in 0..m.rows() {
        let _ = writeln!(out, "{indent}{}", vec_text(&m.row(r)));
    }
}

pub fn check(doc: &InputDocument) -> Result<Output, CliError> {
    let built = doc.build()?;
    let space = &built.space;
    let names = space.frame.names();
    let mut report = Report::new("structure checks");
    let jacobi = check_jacobi(&space.frame);
    report.push_failures(
        "Jacobi identity",
        jacobi
            .failures
            .iter()
            .map(|f| {
                let (i, j, k) = f.indices;
                format!("({}, {}, {}): cyclic sum {}", names[i], names[j], names[k], vec_text(&f.cyclic_sum))
            })
            .collect(),
    );
    report.extend(check_acn_axioms(space));
    let ok = report.all_passed();
    Ok(Output::new(report.to_string(), json!({"command": "check", "passed": ok, "report": report_json(&report)}), ok))
}

fn tensor3_lines(out: &mut String, label: &str, names: &[String], t: &Tensor3<Fraction>) -> Vec<Value> {
    let mut machine = Vec::new();
    for ([i, j, k], v) in t.nonzero() {
        let _ = writeln!(out, "  {label}({}, {}, {}): {v}", names[i], names[j], names[k]);
        machine.push(json!({"index": [i + 1, j + 1, k + 1], "value": v.to_string()}));
    }
    if machine.is_empty() {
        out.push_str("  all components zero\n");
    }
    machine
}

pub fn tensors(doc: &InputDocument, which: Which) -> Result<Output, CliError> {
    let built = doc.build()?;
    let s = &built.space;
    let names = s.frame.names();
    let conn = koszul_connection(&s.frame, &s.metric).map_err(|e| CliError::Precondition(e.to_string()))?;
    let mut human = String::new();
    let (label, components, extra) = match which {
        Which::Connection => {
            human.push_str("Levi-Civita connection, nabla_{e_i} e_j = sum_k Gamma(i, j, k) e_k\n");
            let gamma = Tensor3::from_fn(s.dim(), |i, j, k| conn.covariant(i, j)[k].clone());
            ("connection", tensor3_lines(&mut human, "Gamma", names, &gamma), json!(null))
        }
        Which::Curvature => {
            human.push_str("curvature R(i, j, k, l) = g(R(e_i, e_j) e_k, e_l)\n");
            let r = curvature(&conn, &s.frame, &s.metric);
            let mut machine = Vec::new();
            for ([i, j, k, l], v) in r.lowered().nonzero() {
                let _ = writeln!(human, "  R({}, {}, {}, {}): {v}", names[i], names[j], names[k], names[l]);
                machine.push(json!({"index": [i + 1, j + 1, k + 1, l + 1], "value": v.to_string()}));
            }
            if machine.is_empty() {
                human.push_str("  all components zero\n");
            }
            ("curvature", machine, json!(null))
        }
        Which::F => {
            human.push_str("F(i, j, k) = g((nabla_{e_i} phi) e_j, e_k)\n");
            let f_lie = f_tensor_lie(&s.frame, &s.metric, &s.structure.phi);
            let f_conn = f_tensor_from_connection(&conn, &s.metric, &s.structure.phi);
            let lines = tensor3_lines(&mut human, "F", names, &f_lie);
            let agree = f_lie == f_conn;
            if !agree {
                human.push_str("  note: F from the connection differs from the bracket formula\n");
            }
            let _ = writeln!(human, "  class F0: {}", if is_class_f0(&f_lie) { "yes" } else { "no" });
            ("f", lines, json!({"routes_agree": agree, "class_f0": is_class_f0(&f_lie)}))
        }
    };
    let all_zero = components.is_empty();
    let machine = json!({
        "command": "tensors",
        "which": label,
        "all_zero": all_zero,
        "components": components,
        "f": extra,
    });
    Ok(Output::new(human, machine, true))
}

fn class_json(c: &SectionClass) -> Value {
    json!({
        "rank": c.rank,
        "signature": match c.signature {
            acn_core::linalg::Signature::Known { positive, negative } => json!([positive, negative]),
            acn_core::linalg::Signature::Indeterminate => json!(null),
        },
        "type": format!("{:?}", c.kind).to_lowercase(),
        "degeneracy": format!("{:?}", c.degeneracy),
        "holomorphic": c.holomorphic,
        "xi_section": c.xi_section,
        "totally_real": c.totally_real,
        "xi_orthogonal": c.xi_orthogonal,
    })
}

fn fresh_name(table: &SymbolTable, base: &str) -> String {
    let mut name = base.to_string();
    let mut i = 1;
    while table.index_of(&name).is_some() {
        name = format!("{base}_{i}");
        i += 1;
    }
    name
}

/// Exact square root of a nonnegative rational constant, if it has one.
fn rational_sqrt(t: &Arc<SymbolTable>, x: &Fraction) -> Option<Fraction> {
    if x.sign() == Some(std::cmp::Ordering::Less) {
        return None;
    }
    let r = x.to_scalar()?.as_constant()?;
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    let root = Fraction::parse(t, &format!("{n}/{d}")).ok()?;
    (root.clone() * root.clone() == *x).then_some(root)
}

fn refuse(human: &mut String, machine: &mut Value, exit: i32, message: String) -> Output {
    let _ = writeln!(human, "induction refused: {message}");
    machine["refused"] = json!(message);
    Output { human: std::mem::take(human), machine: machine.take(), exit }
}

fn sub_error(e: SubmanifoldError) -> CliError {
    use SubmanifoldError::*;
    match e {
        NotTotallyReal(_) | XiInSection | NotNormalized(_) | WrongCase { .. } => CliError::SectionType(e.to_string()),
        Dimension(_) | DegenerateSection | NotComplementary | TangentNotOrthogonal(_) => {
            CliError::Validation(e.to_string())
        }
        other => CliError::Precondition(other.to_string()),
    }
}

/// Section with a requested induction, rebuilt over a table that holds any
/// symbol the induction needs.
struct Prepared {
    built: Built,
    section: NormalSection<Fraction>,
    dec: Decomposition<Fraction>,
    induce: InduceBlock,
}

fn prepare(doc: &InputDocument, built: Built, section: NormalSection<Fraction>) -> Result<Prepared, SubmanifoldError> {
    let dec = decompose(&built.space, &section)?;
    let induce = doc.section.as_ref().and_then(|s| s.induce.clone()).unwrap_or_default();
    let t = &built.table;
    let mut extra: Vec<(String, Option<String>)> = Vec::new();
    let mut induce = induce;
    match dec.case {
        DecompositionCase::NonOrthogonal if induce.k.is_none() => {
            let k2 = dec.a.clone() * dec.a.clone() - dec.b.clone() * dec.b.clone();
            if let Some(root) = rational_sqrt(t, &k2) {
                induce.k = Some(root.to_string());
            } else {
                let name = fresh_name(t, "k");
                extra.push((name.clone(), Some(k2.to_string())));
                induce.k = Some(name);
            }
        }
        DecompositionCase::Orthogonal
            if induce.t0.is_none() && induce.t2.is_none() && t.index_of("t0").is_some() && t.index_of("t2").is_some() =>
        {
            induce.t0 = Some("t0".into());
            induce.t2 = Some("t2".into());
        }
        DecompositionCase::Orthogonal if induce.t0.is_none() && induce.t2.is_none() => {
            let (t0, t2) = (fresh_name(t, "t0"), fresh_name(t, "t2"));
            extra.push((t0.clone(), None));
            extra.push((t2.clone(), Some(format!("1 - {t0}^2"))));
            induce.t0 = Some(t0);
            induce.t2 = Some(t2);
        }
        _ => {}
    }
    if extra.is_empty() {
        return Ok(Prepared { built, section, dec, induce });
    }
    let rebuilt = doc
        .build_with(&extra)
        .map_err(|e| SubmanifoldError::Dimension(format!("cannot declare induction symbols: {e}")))?;
    let section = rebuilt.section.clone().expect("same document");
    let dec = decompose(&rebuilt.space, &section)?;
    Ok(Prepared { built: rebuilt, section, dec, induce })
}

fn parse_in(t: &Arc<SymbolTable>, field: &str, text: &str) -> Result<Fraction, CliError> {
    Fraction::parse(t, text).map_err(|e| CliError::field(field, e))
}

pub fn submanifold(doc: &InputDocument) -> Result<Output, CliError> {
    let built = doc.build()?;
    let Some(section) = built.section.clone() else {
        return Err(CliError::Validation("document has no `section` block".into()));
    };
    let mut human = String::new();
    let mut machine = json!({"command": "sub"});
    let class = classify_section(&built.space, &section).map_err(sub_error)?;
    let _ = writeln!(human, "normal section: {class}");
    machine["section"] = class_json(&class);
    if class.xi_section {
        return Ok(refuse(&mut human, &mut machine, 4, "xi lies in the normal section".into()));
    }
    let prepared = match prepare(doc, built, section) {
        Ok(p) => p,
        Err(e) => {
            let cli = sub_error(e);
            let code = cli.exit_code();
            if code == 4 {
                return Ok(refuse(&mut human, &mut machine, 4, cli.to_string()));
            }
            return Err(cli);
        }
    };
    let Prepared { built, section, dec, induce } = prepared;
    let space = &built.space;
    let t = &built.table;
    let mut ok = true;

    let _ = writeln!(human, "decomposition ({:?} case)", dec.case);
    let _ = writeln!(human, "  a = {}, b = {}", dec.a, dec.b);
    for (name, v) in [("xi0", &dec.xi0), ("xi1", &dec.xi1), ("xi2", &dec.xi2), ("eta0", &dec.eta0), ("eta1", &dec.eta1), ("eta2", &dec.eta2)] {
        let _ = writeln!(human, "  {name} = {}", vec_text(v));
    }
    human.push_str("  tangential phi =\n");
    mat_text(&mut human, "    ", &dec.phi);
    machine["decomposition"] = json!({
        "case": format!("{:?}", dec.case),
        "a": dec.a.to_string(), "b": dec.b.to_string(),
        "xi0": vec_json(&dec.xi0), "xi1": vec_json(&dec.xi1), "xi2": vec_json(&dec.xi2),
        "eta0": vec_json(&dec.eta0), "eta1": vec_json(&dec.eta1), "eta2": vec_json(&dec.eta2),
        "phi": mat_json(&dec.phi),
        "degenerate": dec.is_degenerate(),
    });
    let identities = check_decomposition_identities(space, &dec).map_err(sub_error)?;
    ok &= identities.all_passed();
    let _ = write!(human, "{identities}");
    machine["identities"] = report_json(&identities);

    let requested = induce.case.as_deref();
    let ind = match (dec.case, requested) {
        (DecompositionCase::NonOrthogonal, None | Some("nonorthogonal")) => {
            let k = parse_in(t, "induce.k", induce.k.as_deref().expect("prepared"))?;
            let branch = match induce.branch.as_deref() {
                None | Some("lambda1") => Branch::Lambda1,
                Some("lambda2") => Branch::Lambda2,
                Some(other) => return Err(CliError::field("induce.branch", format!("unknown branch `{other}`"))),
            };
            induce_nonorthogonal(&dec, &k, branch, induce.epsilon.unwrap_or(1)).map_err(sub_error)?
        }
        (DecompositionCase::Orthogonal, None | Some("orthogonal")) => {
            let t0 = parse_in(t, "induce.t0", induce.t0.as_deref().unwrap_or("1"))?;
            let t2 = parse_in(t, "induce.t2", induce.t2.as_deref().unwrap_or("0"))?;
            induce_orthogonal(&dec, &t0, &t2).map_err(sub_error)?
        }
        (case, Some(req @ ("orthogonal" | "nonorthogonal"))) => {
            let msg = format!("requested {req} induction but the decomposition is {case:?}");
            return Ok(refuse(&mut human, &mut machine, 4, msg));
        }
        (_, Some(other)) => return Err(CliError::field("induce.case", format!("unknown case `{other}`"))),
    };
    let _ = writeln!(human, "induced structure ({:?})", ind.branch);
    let params = match &ind.parameters {
        InducedParameters::NonOrthogonal { lambda, mu, epsilon, k } => {
            let _ = writeln!(human, "  lambda = {lambda}, mu = {mu}, epsilon = {epsilon}, k = {k}");
            json!({"lambda": lambda.to_string(), "mu": mu.to_string(), "epsilon": epsilon, "k": k.to_string()})
        }
        InducedParameters::Orthogonal { t0, t2 } => {
            let _ = writeln!(human, "  t0 = {t0}, t2 = {t2}");
            json!({"t0": t0.to_string(), "t2": t2.to_string()})
        }
    };
    let _ = writeln!(human, "  xi = {}", vec_text(&ind.structure.xi));
    let _ = writeln!(human, "  eta = {}", vec_text(&ind.structure.eta));
    human.push_str("  phi =\n");
    mat_text(&mut human, "    ", &ind.structure.phi);
    for n in &ind.notes {
        let _ = writeln!(human, "  note: {n}");
    }
    let metric = NordenMetric::new(dec.gram.clone()).map_err(|e| CliError::Precondition(e.to_string()))?;
    let axioms = check_structure_axioms(&metric, &ind.structure);
    ok &= axioms.all_passed();
    let _ = write!(human, "{axioms}");
    machine["induced"] = json!({
        "branch": format!("{:?}", ind.branch),
        "parameters": params,
        "xi": vec_json(&ind.structure.xi),
        "eta": vec_json(&ind.structure.eta),
        "phi": mat_json(&ind.structure.phi),
        "notes": ind.notes,
        "axioms": report_json(&axioms),
    });

    let conn = koszul_connection(&space.frame, &space.metric).map_err(|e| CliError::Precondition(e.to_string()))?;
    let gw = gauss_weingarten(space, &section, &conn).map_err(sub_error)?;
    human.push_str("Gauss-Weingarten data\n  A1 =\n");
    mat_text(&mut human, "    ", &gw.a1);
    human.push_str("  A2 =\n");
    mat_text(&mut human, "    ", &gw.a2);
    let _ = writeln!(human, "  gamma = {}", vec_text(&gw.gamma));
    let gauss = check_gauss_weingarten(space, &section, &conn, &gw).map_err(sub_error)?;
    ok &= gauss.all_passed();
    let _ = write!(human, "{gauss}");
    machine["gauss_weingarten"] = json!({
        "a1": mat_json(&gw.a1), "a2": mat_json(&gw.a2), "gamma": vec_json(&gw.gamma),
        "checks": report_json(&gauss),
    });

    let names: Vec<String> = (1..=section.tangent_dim()).map(|i| format!("t{i}")).collect();
    match induced_geometry(space, &dec, &ind, names.clone()) {
        Ok(sub) => {
            human.push_str("induced F\n");
            let f = f_tensor_lie(&sub.frame, &sub.metric, &sub.structure.phi);
            let sub_conn = koszul_connection(&sub.frame, &sub.metric).map_err(|e| CliError::Precondition(e.to_string()))?;
            let agree = f == f_tensor_from_connection(&sub_conn, &sub.metric, &sub.structure.phi);
            let comps = tensor3_lines(&mut human, "F", &names, &f);
            let f0 = is_class_f0(&f);
            let _ = writeln!(human, "  class F0: {}", if f0 { "yes" } else { "no" });
            ok &= agree;
            machine["f"] = json!({"components": comps, "class_f0": f0, "routes_agree": agree});
        }
        Err(SubmanifoldError::NotSubalgebra { i, j }) => {
            let msg = format!("tangent space is not a subalgebra ([t{}, t{}] leaves it); induced F not computed", i + 1, j + 1);
            let _ = writeln!(human, "note: {msg}");
            machine["f"] = json!(null);
            machine["notes"] = json!([msg]);
        }
        Err(e) => return Err(sub_error(e)),
    }
    machine["passed"] = json!(ok);
    Ok(Output::new(human, machine, ok))
}

pub fn verify_examples(epsilon: i64, branch: Branch) -> Result<Output, CliError> {
    if epsilon != 1 && epsilon != -1 {
        return Err(CliError::Validation(format!("--epsilon must be 1 or -1, got {epsilon}")));
    }
    let r = catalog::verify_examples(epsilon, branch).map_err(sub_error)?;
    let mut human = r.to_string();
    let passed = |name: &str| r.get(name).is_some_and(|c| c.passed);
    let mut summary = Vec::new();
    if passed("H3: class F₀ (F = 0)") {
        summary.push("H3: class F₀ confirmed".to_string());
    }
    if passed("H: F matches closed form") {
        summary.push("H: F matches closed form".to_string());
    }
    let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    if !summary.is_empty() {
        let _ = writeln!(human, "{}", summary.join("; "));
    }
    if !failed.is_empty() {
        let _ = writeln!(human, "{} check(s) failed: {}", failed.len(), failed.join("; "));
    }
    let ok = r.all_passed();
    let machine = json!({"command": "verify-examples", "passed": ok, "summary": summary, "report": report_json(&r)});
    Ok(Output::new(human, machine, ok))
}

pub fn export(target: ExportTarget) -> Result<String, CliError> {
    let t = symbol_table();
    let doc = match target {
        ExportTarget::G => InputDocument::from_space(&t, &catalog::build_g()),
        ExportTarget::EFrame => InputDocument::from_space(&t, &catalog::build_e_frame()),
        ExportTarget::H3 => InputDocument::from_bundle(&t, &catalog::example_h3()),
        ExportTarget::H => InputDocument::from_bundle(&t, &catalog::example_h()),
        ExportTarget::H3Induced | ExportTarget::HInduced => {
            let b = if target == ExportTarget::H3Induced { catalog::example_h3() } else { catalog::example_h() };
            let dec = decompose(&b.ambient, &b.section).map_err(sub_error)?;
            let ind = match &b.induction {
                catalog::Induction::NonOrthogonal { k } => induce_nonorthogonal(&dec, k, Branch::Lambda1, 1),
                catalog::Induction::Orthogonal { t0, t2 } => induce_orthogonal(&dec, t0, t2),
            }
            .map_err(sub_error)?;
            let sub = induced_geometry(&b.ambient, &dec, &ind, b.tangent_names.clone()).map_err(sub_error)?;
            InputDocument::from_space(&t, &sub)
        }
    };
    Ok(doc.to_json())
}
