//! Built-in example: a five-dimensional Lie group with an almost contact
//! structure and Norden metric, its E-frame obtained by an `O(3,2)` basis
//! change, and two codimension-two subgroups with their expected data.
//!
//! `√3` is the symbol `s` with `s² = 3`; the orthogonal-case parameters are
//! `t0`, `t2` with `t2² = 1 - t0²`.

use std::sync::Arc;

use crate::geometry::{
    change_basis, check_acn_axioms, check_jacobi, f_tensor_from_connection, f_tensor_lie,
    is_class_f0, koszul_connection, AlmostContactData, AmbientSpace, GeometryError,
    LieAlgebraFrame, NordenMetric,
};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::report::Report;
use crate::scalar::{Fraction, ScalarError, SymbolTable};
use crate::submanifold::{
    check_decomposition_identities, check_gauss_weingarten, classify_section, decompose,
    gauss_weingarten, induce_nonorthogonal, induce_orthogonal, induced_geometry,
    restricted_frame, Branch, InducedParameters, NormalSection, SectionType, SubmanifoldError,
};

pub const X_NAMES: [&str; 5] = ["X1", "X2", "X3", "X4", "xi"];
pub const E_NAMES: [&str; 5] = ["E1", "E2", "E3", "E4", "E5"];

/// Position in the X-frame of each entry of the ordering `(X1, X2, ξ, X3, X4)`
/// used by the basis change matrix `T`.
pub const T_SOURCE_ORDER: [usize; 5] = [0, 1, 4, 2, 3];

/// `a`, `m` free; `s² = 3`; `t2² = 1 - t0²`.
pub fn symbol_table() -> Arc<SymbolTable> {
    SymbolTable::new(["a", "m", "s", "t0", "t2"])
        .and_then(|t| t.with_rule("s", "3"))
        .and_then(|t| t.with_rule("t2", "1 - t0^2"))
        .expect("fixed table")
        .into_shared()
}

/// [`symbol_table`] extended with coordinate symbols `x_i`, `y_i`, `z_i`
/// for each suffix, for writing multilinear forms.
pub fn coordinate_table(suffixes: &[&str]) -> Arc<SymbolTable> {
    let names = ["x", "y", "z"]
        .iter()
        .flat_map(|p| suffixes.iter().map(move |s| format!("{p}{s}")))
        .collect::<Vec<_>>();
    symbol_table().extended(names, &[]).expect("fresh names").into_shared()
}

fn fr(t: &Arc<SymbolTable>, text: &str) -> Fraction {
    Fraction::parse(t, text).unwrap_or_else(|e| panic!("catalog expression `{text}`: {e}"))
}

fn vec_of(t: &Arc<SymbolTable>, xs: &[&str]) -> Vector<Fraction> {
    Vector::new(xs.iter().map(|x| fr(t, x)).collect())
}

fn mat_of(t: &Arc<SymbolTable>, rows: &[&[&str]]) -> Matrix<Fraction> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|x| fr(t, x)).collect()).collect())
        .expect("rectangular")
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// The brackets of the X-frame, keyed by 0-based index pairs. Pairs not
/// listed bracket to zero.
pub fn g_brackets(t: &Arc<SymbolTable>) -> Vec<((usize, usize), Vector<Fraction>)> {
    vec![
        ((0, 1), vec_of(t, &["0", "0", "0", "a", "0"])),
        ((0, 2), vec_of(t, &["0", "0", "0", "-a", "0"])),
        ((1, 2), vec_of(t, &["0", "a", "a", "0", "0"])),
        ((2, 3), vec_of(t, &["a", "0", "0", "0", "0"])),
        ((1, 3), vec_of(t, &["-a", "0", "0", "0", "0"])),
        ((1, 4), vec_of(t, &["2*m", "0", "0", "0", "0"])),
        ((2, 4), vec_of(t, &["0", "0", "0", "-2*m", "0"])),
        ((0, 3), vec_of(t, &["0", "0", "0", "0", "0"])),
        ((0, 4), vec_of(t, &["0", "0", "0", "0", "0"])),
        ((3, 4), vec_of(t, &["0", "0", "0", "0", "0"])),
    ]
}

/// `(pair, component)` of every structure constant written out explicitly
/// in the bracket table: the nonzero ones and the three brackets declared
/// to vanish.
pub fn g_explicit_constants() -> Vec<((usize, usize), usize)> {
    let mut out = vec![
        ((0, 1), 3),
        ((0, 2), 3),
        ((1, 2), 1),
        ((1, 2), 2),
        ((2, 3), 0),
        ((1, 3), 0),
        ((1, 4), 0),
        ((2, 4), 3),
    ];
    for pair in [(0, 3), (0, 4), (3, 4)] {
        out.extend((0..5).map(|c| (pair, c)));
    }
    out
}

pub fn build_g() -> AmbientSpace<Fraction> {
    build_g_in(&symbol_table())
}

/// The X-frame example over `t`, which must declare `a` and `m` (and `s`
/// if the E-frame is wanted).
pub fn build_g_in(t: &Arc<SymbolTable>) -> AmbientSpace<Fraction> {
    let frame = LieAlgebraFrame::new(names(&X_NAMES), g_brackets(t)).expect("valid table");
    let metric = NordenMetric::new(Matrix::diagonal(
        ["1", "1", "-1", "-1", "1"].iter().map(|x| fr(t, x)).collect(),
    ))
    .expect("invertible");
    // φX1 = X3, φX2 = X4, φX3 = -X1, φX4 = -X2, φξ = 0
    let phi = mat_of(
        t,
        &[
            &["0", "0", "-1", "0", "0"],
            &["0", "0", "0", "-1", "0"],
            &["1", "0", "0", "0", "0"],
            &["0", "1", "0", "0", "0"],
            &["0", "0", "0", "0", "0"],
        ],
    );
    let e5 = vec_of(t, &["0", "0", "0", "0", "1"]);
    let acd = AlmostContactData::new(phi, e5.clone(), e5).expect("5x5");
    AmbientSpace::new(frame, metric, acd).expect("consistent")
}

/// `T` in the ordering `(X1, X2, ξ, X3, X4)`; `E = Tᵀ (X1, X2, ξ, X3, X4)ᵀ`.
pub fn e_frame_change(t: &Arc<SymbolTable>) -> Matrix<Fraction> {
    mat_of(
        t,
        &[
            &["1", "0", "0", "0", "0"],
            &["0", "s/2", "1/2", "0", "0"],
            &["0", "-1/2", "s/2", "0", "0"],
            &["0", "0", "0", "1", "0"],
            &["0", "0", "0", "0", "1"],
        ],
    )
}

/// The signature form `diag(1,1,1,-1,-1)` in the ordering `(X1, X2, ξ, X3, X4)`.
pub fn metric_c(t: &Arc<SymbolTable>) -> Matrix<Fraction> {
    Matrix::diagonal(["1", "1", "1", "-1", "-1"].iter().map(|x| fr(t, x)).collect())
}

/// Columns are the X-frame coordinates of `E1..E5`.
pub fn basis_change_matrix(t: &Arc<SymbolTable>) -> Matrix<Fraction> {
    let tm = e_frame_change(t);
    let mut p = Matrix::zeros(5, 5);
    for j in 0..5 {
        for i in 0..5 {
            p[(T_SOURCE_ORDER[j], i)] = tm[(j, i)].clone();
        }
    }
    p
}

pub fn build_e_frame() -> AmbientSpace<Fraction> {
    build_e_frame_in(&symbol_table())
}

pub fn build_e_frame_in(t: &Arc<SymbolTable>) -> AmbientSpace<Fraction> {
    change_basis(&build_g_in(t), &basis_change_matrix(t), names(&E_NAMES))
        .expect("T is invertible")
}

/// The E-frame brackets as stated in closed form.
pub fn expected_e_brackets(t: &Arc<SymbolTable>) -> LieAlgebraFrame<Fraction> {
    let b = |xs: [&str; 5]| vec_of(t, &xs);
    LieAlgebraFrame::new(
        names(&E_NAMES),
        [
            ((0, 1), b(["0", "0", "0", "0", "s/2*a"])),
            ((0, 2), b(["0", "0", "0", "0", "a/2"])),
            ((2, 4), b(["-a/2", "0", "0", "0", "0"])),
            ((1, 4), b(["-s/2*a", "0", "0", "0", "0"])),
            ((0, 3), b(["0", "0", "0", "0", "-a"])),
            ((1, 3), b(["0", "3/4*a", "s/4*a", "s/2*a", "-m"])),
            ((2, 3), b(["0", "s/4*a", "a/4", "a/2", "s*m"])),
            ((3, 4), b(["a", "0", "0", "0", "0"])),
            ((1, 2), b(["2*m", "0", "0", "0", "0"])),
        ],
    )
    .expect("valid table")
}

/// Matrix of `φ̄` in the E-frame (column `j` is `φ̄E_j`).
pub fn expected_e_phi(t: &Arc<SymbolTable>) -> Matrix<Fraction> {
    mat_of(
        t,
        &[
            &["0", "0", "0", "-1", "0"],
            &["0", "0", "0", "0", "-s/2"],
            &["0", "0", "0", "0", "-1/2"],
            &["1", "0", "0", "0", "0"],
            &["0", "s/2", "1/2", "0", "0"],
        ],
    )
}

pub fn expected_e_xi(t: &Arc<SymbolTable>) -> Vector<Fraction> {
    vec_of(t, &["0", "-1/2", "s/2", "0", "0"])
}

/// `Σ F_ijk x_i y_j z_k` with coordinate symbols `x{suffix}` etc. from `table`.
pub fn trilinear_form(
    f: &Tensor3<Fraction>,
    table: &Arc<SymbolTable>,
    suffixes: &[&str],
) -> Result<Fraction, ScalarError> {
    let coord = |p: &str| -> Result<Vec<Fraction>, ScalarError> {
        suffixes.iter().map(|s| Fraction::symbol(table, &format!("{p}{s}"))).collect()
    };
    let (x, y, z) = (coord("x")?, coord("y")?, coord("z")?);
    let mut acc = Fraction::from_int(0).lift(table)?;
    for ([i, j, k], v) in f.nonzero() {
        let term = v.lift(table)?.try_mul(&x[i])?.try_mul(&y[j])?.try_mul(&z[k])?;
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

/// `Σ v_i x_i` with coordinate symbols `x{suffix}` from `table`.
pub fn linear_form(
    v: &Vector<Fraction>,
    table: &Arc<SymbolTable>,
    suffixes: &[&str],
) -> Result<Fraction, ScalarError> {
    let mut acc = Fraction::from_int(0).lift(table)?;
    for (c, s) in v.iter().zip(suffixes) {
        if !c.is_zero() {
            acc = acc.try_add(&c.lift(table)?.try_mul(&Fraction::symbol(table, &format!("x{s}"))?)?)?;
        }
    }
    Ok(acc)
}

/// A class name attached to an example, with whether it is machine-checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLabel {
    pub label: String,
    pub certified: bool,
    pub note: Option<String>,
}

impl ClassLabel {
    fn certified(label: &str) -> Self {
        ClassLabel { label: label.into(), certified: true, note: None }
    }

    fn unverified(label: &str) -> Self {
        ClassLabel {
            label: label.into(),
            certified: false,
            note: Some(format!(
                "class {label}: defining conditions not available here; unverified metadata"
            )),
        }
    }
}

pub fn g_class_label() -> ClassLabel {
    ClassLabel::unverified("F₉")
}

/// Expected decomposition in tangent coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpectedDecomposition {
    pub a: Fraction,
    pub b: Fraction,
    pub xi0: Vector<Fraction>,
    pub xi1: Vector<Fraction>,
    pub xi2: Vector<Fraction>,
    pub eta0: Vector<Fraction>,
    pub eta1: Vector<Fraction>,
    pub eta2: Vector<Fraction>,
    pub phi: Matrix<Fraction>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpectedInduced {
    pub xi: Vector<Fraction>,
    pub eta: Vector<Fraction>,
    pub phi: Matrix<Fraction>,
    /// `(λ, μ)` in the non-orthogonal case.
    pub lambda_mu: Option<(Fraction, Fraction)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpectedGaussWeingarten {
    pub a1: Matrix<Fraction>,
    pub a2: Matrix<Fraction>,
    pub gamma: Vector<Fraction>,
}

/// How the default induced structure of an example is produced.
#[derive(Clone, Debug, PartialEq)]
pub enum Induction {
    NonOrthogonal { k: Fraction },
    Orthogonal { t0: Fraction, t2: Fraction },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExampleBundle {
    pub name: String,
    pub ambient: AmbientSpace<Fraction>,
    pub section: NormalSection<Fraction>,
    pub tangent_names: Vec<String>,
    /// Suffixes of the tangent coordinate symbols, e.g. `["1", "2", "5"]`.
    pub coordinate_suffixes: Vec<String>,
    pub induction: Induction,
    pub decomposition: ExpectedDecomposition,
    pub induced: ExpectedInduced,
    pub gauss_weingarten: Option<ExpectedGaussWeingarten>,
    /// `F` of the induced structure as a polynomial in `x_i, y_i, z_i`
    /// over [`coordinate_table`].
    pub f_closed_form: Fraction,
    pub class_label: ClassLabel,
}

impl ExampleBundle {
    pub fn coordinate_table(&self) -> Arc<SymbolTable> {
        let s: Vec<&str> = self.coordinate_suffixes.iter().map(String::as_str).collect();
        coordinate_table(&s)
    }
}

/// The subgroup with Lie algebra `span{X1, X4, ξ}` and normals `X2`, `X3`.
pub fn example_h3() -> ExampleBundle {
    let t = symbol_table();
    let sec = NormalSection::from_indices(5, 1, 2, &[0, 3, 4]);
    let v = |xs: [&str; 3]| vec_of(&t, &xs);
    let ct = coordinate_table(&["1", "4", "0"]);
    ExampleBundle {
        name: "H3".into(),
        ambient: build_g_in(&t),
        section: sec,
        tangent_names: names(&["X1", "X4", "xi"]),
        coordinate_suffixes: names(&["1", "4", "0"]),
        induction: Induction::Orthogonal { t0: fr(&t, "t0"), t2: fr(&t, "t2") },
        decomposition: ExpectedDecomposition {
            a: fr(&t, "0"),
            b: fr(&t, "0"),
            xi0: v(["0", "0", "1"]),
            xi1: v(["0", "1", "0"]),
            xi2: v(["1", "0", "0"]),
            eta0: v(["0", "0", "1"]),
            eta1: v(["0", "-1", "0"]),
            eta2: v(["1", "0", "0"]),
            phi: Matrix::zeros(3, 3),
        },
        induced: ExpectedInduced {
            xi: v(["-t2", "0", "t0"]),
            eta: v(["-t2", "0", "t0"]),
            // φX = t0(-x4 X1 + x1 X4) + t2(η̄(X) X4 - x4 ξ)
            phi: mat_of(&t, &[&["0", "-t0", "0"], &["t0", "0", "t2"], &["0", "-t2", "0"]]),
            lambda_mu: None,
        },
        gauss_weingarten: None,
        f_closed_form: fr(&ct, "0"),
        class_label: ClassLabel::certified("F₀"),
    }
}

/// The subgroup with Lie algebra `span{E1, E2, E5}` and normals `E3`, `E4`.
pub fn example_h() -> ExampleBundle {
    let t = symbol_table();
    let sec = NormalSection::from_indices(5, 2, 3, &[0, 1, 4]);
    let v = |xs: [&str; 3]| vec_of(&t, &xs);
    let ct = coordinate_table(&["1", "2", "5"]);
    ExampleBundle {
        name: "H".into(),
        ambient: build_e_frame_in(&t),
        section: sec,
        tangent_names: names(&["E1", "E2", "E5"]),
        coordinate_suffixes: names(&["1", "2", "5"]),
        induction: Induction::NonOrthogonal { k: fr(&t, "s/2") },
        decomposition: ExpectedDecomposition {
            a: fr(&t, "s/2"),
            b: fr(&t, "0"),
            xi0: v(["0", "-1/2", "0"]),
            xi1: v(["0", "0", "1/2"]),
            xi2: v(["1", "0", "0"]),
            eta0: v(["0", "-1/2", "0"]),
            eta1: v(["0", "0", "-1/2"]),
            eta2: v(["1", "0", "0"]),
            // φX = -(√3/2) x5 E2 + (√3/2) x2 E5
            phi: mat_of(&t, &[&["0", "0", "0"], &["0", "0", "-s/2"], &["0", "s/2", "0"]]),
        },
        induced: ExpectedInduced {
            xi: v(["1", "0", "0"]),
            eta: v(["1", "0", "0"]),
            phi: mat_of(&t, &[&["0", "0", "0"], &["0", "0", "-1"], &["0", "1", "0"]]),
            lambda_mu: Some((fr(&t, "4*s*(2 - s)/3"), fr(&t, "4*s*(2 - s)/3 + 1"))),
        },
        gauss_weingarten: Some(ExpectedGaussWeingarten {
            // A1 X = -m x2 E1 - m x1 E2
            a1: mat_of(&t, &[&["0", "-m", "0"], &["-m", "0", "0"], &["0", "0", "0"]]),
            // A2 X = -(1/2)((3/2) a x2 + m x5) E2 + (1/2) m x2 E5
            a2: mat_of(&t, &[&["0", "0", "0"], &["0", "-3/4*a", "-m/2"], &["0", "m/2", "0"]]),
            // γ(X) = (√3/2)(a x2 - m x5)
            gamma: v(["0", "s/2*a", "-s/2*m"]),
        }),
        f_closed_form: fr(&ct, "-(s/2)*a*x2*(y1*z2 + y2*z1)"),
        class_label: ClassLabel::unverified("F₄⊕F₈"),
    }
}

/// Subalgebras of the example as `(name, frame, tangent indices, normal
/// indices)`; `b` lives in the E-frame, the others in the X-frame.
pub fn subalgebras() -> Vec<(&'static str, bool, [usize; 3], [usize; 2])> {
    vec![
        ("b1", false, [0, 1, 2], [3, 4]),
        ("b2", false, [0, 2, 3], [1, 4]),
        ("b3", false, [0, 3, 4], [1, 2]),
        ("b", true, [0, 1, 4], [2, 3]),
    ]
}

/// Checks bracket closure of `b1, b2, b3` (X-frame) and `b` (E-frame) and
/// classifies the normal sections `α1 = {X4, ξ}`, `α2 = {X2, ξ}`,
/// `α3 = {X2, X3}` and `α = {E3, E4}`.
pub fn list_subalgebras() -> Report {
    let g = build_g();
    let e = build_e_frame();
    let mut r = Report::new("subalgebras and normal sections");
    for (name, in_e, tan, nor) in subalgebras() {
        let space = if in_e { &e } else { &g };
        let sec = NormalSection::from_indices(5, nor[0], nor[1], &tan);
        let labels = if in_e { &E_NAMES } else { &X_NAMES };
        let closed = restricted_frame(space, &sec, tan.iter().map(|&i| labels[i].to_string()).collect());
        r.push(
            format!("{name} is a subalgebra"),
            closed.is_ok(),
            closed.err().map(|e| e.to_string()),
        );
    }
    type Expectation = (&'static str, bool, [usize; 2], fn(&crate::submanifold::SectionClass) -> bool);
    let expectations: [Expectation; 4] = [
        ("alpha1 = {X4, xi}: xi-section of hybrid type", false, [3, 4], |c| {
            c.xi_section && c.kind == SectionType::Hybrid
        }),
        ("alpha2 = {X2, xi}: xi-section of pure type", false, [1, 4], |c| {
            c.xi_section && c.kind == SectionType::Pure
        }),
        (
            "alpha3 = {X2, X3}: totally real, orthogonal to xi, hybrid",
            false,
            [1, 2],
            |c| c.totally_real && c.xi_orthogonal && c.kind == SectionType::Hybrid && c.rank == 2,
        ),
        (
            "alpha = {E3, E4}: totally real, not orthogonal to xi, hybrid, xi not in alpha",
            true,
            [2, 3],
            |c| {
                c.totally_real
                    && !c.xi_orthogonal
                    && c.kind == SectionType::Hybrid
                    && !c.xi_section
            },
        ),
    ];
    for (name, in_e, [n1, n2], pred) in expectations {
        let space = if in_e { &e } else { &g };
        let sec = NormalSection::from_indices(5, n1, n2, &[]);
        match classify_section(space, &sec) {
            Ok(c) => r.push(name, pred(&c), Some(c.to_string())),
            Err(err) => r.push(name, false, Some(err.to_string())),
        }
    }
    r
}

fn compare<T: PartialEq + std::fmt::Debug>(
    fails: &mut Vec<String>,
    what: &str,
    got: &T,
    want: &T,
) {
    if got != want {
        fails.push(format!("{what}: got {got:?}, expected {want:?}"));
    }
}

/// Runs the full pipeline on both examples and compares with the expected
/// values. `epsilon` and `branch` select the non-orthogonal construction
/// for `H`; the closed-form comparisons for `H` only apply to `ε = 1`,
/// `λ₁`.
pub fn verify_examples(epsilon: i64, branch: Branch) -> Result<Report, SubmanifoldError> {
    let mut r = Report::new("built-in examples");
    let g = build_g();
    let t = symbol_table();
    r.push_failures(
        "G: Jacobi identity",
        check_jacobi(&g.frame).failures.iter().map(|f| format!("{:?}", f.indices)).collect(),
    );
    r.extend_prefixed("G: ", check_acn_axioms(&g));
    if let Some(n) = g_class_label().note {
        r.note(format!("G: {n}"));
    }
    let e = build_e_frame();
    r.push("E-frame: brackets", e.frame == expected_e_brackets(&t), None);
    r.push("E-frame: phi matrix", e.structure.phi == expected_e_phi(&t), None);
    r.push("E-frame: xi coordinates", e.structure.xi == expected_e_xi(&t), None);
    r.push("E-frame: metric is C", e.metric.matrix() == &metric_c(&t), None);
    let tm = e_frame_change(&t);
    r.push("T^T C T = C", &(&tm.transpose() * &metric_c(&t)) * &tm == metric_c(&t), None);
    r.extend(list_subalgebras());

    for bundle in [example_h3(), example_h()] {
        let defaults = epsilon == 1 && branch == Branch::Lambda1;
        verify_bundle(&mut r, &bundle, epsilon, branch, defaults)?;
    }
    Ok(r)
}

fn verify_bundle(
    r: &mut Report,
    bundle: &ExampleBundle,
    epsilon: i64,
    branch: Branch,
    defaults: bool,
) -> Result<(), SubmanifoldError> {
    let p = format!("{}: ", bundle.name);
    let space = &bundle.ambient;
    let dec = decompose(space, &bundle.section)?;
    let want = &bundle.decomposition;
    let mut fails = Vec::new();
    compare(&mut fails, "a", &dec.a, &want.a);
    compare(&mut fails, "b", &dec.b, &want.b);
    compare(&mut fails, "xi0", &dec.xi0, &want.xi0);
    compare(&mut fails, "xi1", &dec.xi1, &want.xi1);
    compare(&mut fails, "xi2", &dec.xi2, &want.xi2);
    compare(&mut fails, "eta0", &dec.eta0, &want.eta0);
    compare(&mut fails, "eta1", &dec.eta1, &want.eta1);
    compare(&mut fails, "eta2", &dec.eta2, &want.eta2);
    compare(&mut fails, "phi", &dec.phi, &want.phi);
    r.push_failures(format!("{p}decomposition matches"), fails);
    r.extend_prefixed(&p, check_decomposition_identities(space, &dec)?);

    let ind = match &bundle.induction {
        Induction::NonOrthogonal { k } => induce_nonorthogonal(&dec, k, branch, epsilon)?,
        Induction::Orthogonal { t0, t2 } => induce_orthogonal(&dec, t0, t2)?,
    };
    let sub = induced_geometry(space, &dec, &ind, bundle.tangent_names.clone())?;
    r.extend_prefixed(&format!("{p}induced "), check_acn_axioms(&sub));
    let orthogonal = matches!(bundle.induction, Induction::Orthogonal { .. });
    if orthogonal || defaults {
        let mut fails = Vec::new();
        compare(&mut fails, "xi", &ind.structure.xi, &bundle.induced.xi);
        compare(&mut fails, "eta", &ind.structure.eta, &bundle.induced.eta);
        compare(&mut fails, "phi", &ind.structure.phi, &bundle.induced.phi);
        if let (InducedParameters::NonOrthogonal { lambda, mu, .. }, Some((wl, wm))) =
            (&ind.parameters, &bundle.induced.lambda_mu)
        {
            compare(&mut fails, "lambda", lambda, wl);
            compare(&mut fails, "mu", mu, wm);
        }
        r.push_failures(format!("{p}induced structure matches"), fails);
    }
    for n in &ind.notes {
        r.note(format!("{p}{n}"));
    }

    let conn = koszul_connection(&space.frame, &space.metric)?;
    let gw = gauss_weingarten(space, &bundle.section, &conn)?;
    r.extend_prefixed(&p, check_gauss_weingarten(space, &bundle.section, &conn, &gw)?);
    if let Some(want) = &bundle.gauss_weingarten {
        let mut fails = Vec::new();
        compare(&mut fails, "A1", &gw.a1, &want.a1);
        r.push_failures(format!("{p}shape operator A_N1 matches"), fails);
        let mut fails = Vec::new();
        compare(&mut fails, "A2", &gw.a2, &want.a2);
        r.push_failures(format!("{p}shape operator A_N2 matches"), fails);
        let mut fails = Vec::new();
        compare(&mut fails, "gamma", &gw.gamma, &want.gamma);
        r.push_failures(format!("{p}normal connection form gamma matches"), fails);
    }

    let sub_conn = koszul_connection(&sub.frame, &sub.metric).map_err(SubmanifoldError::from)?;
    let f_conn = f_tensor_from_connection(&sub_conn, &sub.metric, &sub.structure.phi);
    let f_lie = f_tensor_lie(&sub.frame, &sub.metric, &sub.structure.phi);
    r.push(format!("{p}F by both routes agrees"), f_conn == f_lie, None);
    if orthogonal || defaults {
        let ct = bundle.coordinate_table();
        let suffixes: Vec<&str> = bundle.coordinate_suffixes.iter().map(String::as_str).collect();
        let form = trilinear_form(&f_lie, &ct, &suffixes).map_err(|e| {
            SubmanifoldError::Geometry(GeometryError::Dimension(e.to_string()))
        })?;
        let ok = form == bundle.f_closed_form;
        r.push(
            format!("{p}F matches closed form"),
            ok,
            (!ok).then(|| format!("got {form}, expected {}", bundle.f_closed_form)),
        );
    }
    let label = &bundle.class_label;
    if label.certified {
        r.push(format!("{p}class {} (F = 0)", label.label), is_class_f0(&f_lie), None);
    } else if let Some(n) = &label.note {
        r.note(format!("{p}{n}"));
    }
    Ok(())
}
