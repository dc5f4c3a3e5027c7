use crate::geometry::AmbientSpace;
use crate::linalg::{Matrix, Vector};
use crate::report::Report;
use crate::Field;

use super::section::classify_section;
use super::{NormalSection, SubmanifoldError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionCase {
    /// `(a, b) ≠ (0, 0)`.
    NonOrthogonal,
    /// `a = b = 0`, i.e. `ξ̄` is tangent.
    Orthogonal,
}

/// Splitting of `ξ̄` and `φ̄` along a totally real hybrid normal section:
///
/// ```text
/// ξ̄   = ξ₀ + a N₁ + b N₂
/// φ̄X  = φX + η¹(X) N₁ + η²(X) N₂
/// φ̄N₁ = ξ₁
/// φ̄N₂ = -ξ₂
/// ```
///
/// Vectors are in tangent coordinates; `eta0..eta2` hold the values of the
/// one-forms on the tangent spanning vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<F: Field> {
    pub section: NormalSection<F>,
    /// Restricted metric on the tangent spanning vectors.
    pub gram: Matrix<F>,
    pub a: F,
    pub b: F,
    pub xi0: Vector<F>,
    pub xi1: Vector<F>,
    pub xi2: Vector<F>,
    pub eta0: Vector<F>,
    pub eta1: Vector<F>,
    pub eta2: Vector<F>,
    pub phi: Matrix<F>,
    pub case: DecompositionCase,
}

impl<F: Field> Decomposition<F> {
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// `η¹ = η² = 0`: the tangent space is `φ̄`-invariant.
    pub fn is_degenerate(&self) -> bool {
        self.eta1.is_zero() && self.eta2.is_zero()
    }
}

fn normalization_failures<F: Field>(space: &AmbientSpace<F>, sec: &NormalSection<F>) -> Vec<String> {
    let g = &space.metric;
    let mut out = Vec::new();
    let (n1, n2) = (&sec.n1, &sec.n2);
    let one = F::one();
    for (name, val, want) in [
        ("g(N1,N1)", g.apply(n1, n1), one.clone()),
        ("g(N2,N2)", g.apply(n2, n2), -one),
        ("g(N1,N2)", g.apply(n1, n2), F::zero()),
    ] {
        if val != want {
            out.push(format!("{name} = {val}"));
        }
    }
    out
}

pub fn decompose<F: Field>(
    space: &AmbientSpace<F>,
    sec: &NormalSection<F>,
) -> Result<Decomposition<F>, SubmanifoldError> {
    let class = classify_section(space, sec)?;
    let bad = normalization_failures(space, sec);
    if !bad.is_empty() {
        return Err(SubmanifoldError::NotNormalized(bad.join(", ")));
    }
    if !class.totally_real {
        return Err(SubmanifoldError::NotTotallyReal(
            "some g(N_i, phi N_j) is nonzero".into(),
        ));
    }
    if class.xi_section {
        return Err(SubmanifoldError::XiInSection);
    }
    let g = &space.metric;
    let off: Vec<String> = sec
        .tangent
        .iter()
        .enumerate()
        .filter(|(_, t)| !g.apply(t, &sec.n1).is_zero() || !g.apply(t, &sec.n2).is_zero())
        .map(|(i, _)| format!("t{i}"))
        .collect();
    if !off.is_empty() {
        return Err(SubmanifoldError::TangentNotOrthogonal(off.join(", ")));
    }
    let split = sec.splitter()?;
    let m = sec.tangent_dim();
    let acd = &space.structure;
    let (n1, n2, xi) = (&sec.n1, &sec.n2, &acd.xi);
    let a = g.apply(xi, n1);
    let b = -g.apply(xi, n2);
    let xi0_amb = &(xi - &n1.scale(&a)) - &n2.scale(&b);
    let xi0 = split.split(&xi0_amb).0;
    let xi1 = split.split(&acd.phi.mul_vec(n1)).0;
    let xi2 = -&split.split(&acd.phi.mul_vec(n2)).0;
    let mut phi = Matrix::zeros(m, m);
    let mut eta1 = Vec::with_capacity(m);
    let mut eta2 = Vec::with_capacity(m);
    for (j, t) in sec.tangent.iter().enumerate() {
        let (tan, c1, c2) = split.split(&acd.phi.mul_vec(t));
        for i in 0..m {
            phi[(i, j)] = tan[i].clone();
        }
        eta1.push(c1);
        eta2.push(c2);
    }
    let eta0 = Vector::new(sec.tangent.iter().map(|t| acd.eta.dot(t)).collect());
    let basis = &split.basis;
    let gram = &(&basis.transpose() * g.matrix()) * basis;
    let case = if a.is_zero() && b.is_zero() {
        DecompositionCase::Orthogonal
    } else {
        DecompositionCase::NonOrthogonal
    };
    Ok(Decomposition {
        section: sec.clone(),
        gram,
        a,
        b,
        xi0,
        xi1,
        xi2,
        eta0,
        eta1: Vector::new(eta1),
        eta2: Vector::new(eta2),
        phi,
        case,
    })
}

struct Checker<'a> {
    report: &'a mut Report,
}

impl Checker<'_> {
    fn vec<F: Field>(&mut self, name: &str, lhs: &Vector<F>, rhs: &Vector<F>) {
        let fails = (0..lhs.len())
            .filter(|&i| lhs[i] != rhs[i])
            .map(|i| format!("[{i}]: {} != {}", lhs[i], rhs[i]))
            .collect();
        self.report.push_failures(name, fails);
    }

    fn mat<F: Field>(&mut self, name: &str, lhs: &Matrix<F>, rhs: &Matrix<F>) {
        let fails = lhs
            .differences(rhs)
            .into_iter()
            .map(|(i, j)| format!("({i},{j}): {} != {}", lhs[(i, j)], rhs[(i, j)]))
            .collect();
        self.report.push_failures(name, fails);
    }

    fn scalar<F: Field>(&mut self, name: &str, lhs: F, rhs: F) {
        let ok = lhs == rhs;
        self.report.push(name, ok, (!ok).then(|| format!("{lhs} != {rhs}")));
    }
}

/// Verifies the decomposition identities as exact identities on the
/// tangent spanning vectors:
///
/// * the reconstruction of `ξ̄`, `φ̄X`, `φ̄N₁`, `φ̄N₂` in the ambient frame,
/// * `η^i(X) = g(X, ξ_i)`,
/// * `g(φX,φY) = -g(X,Y) + η⁰η⁰ - η¹η¹ + η²η²`,
/// * `φ²`, `η^i∘φ`, `φξ_i` in terms of `a`, `b`,
/// * the Gram matrix of `ξ₀, ξ₁, ξ₂`.
///
/// With `a = b = 0` the last three groups reduce to the orthogonal case list.
pub fn check_decomposition_identities<F: Field>(
    space: &AmbientSpace<F>,
    dec: &Decomposition<F>,
) -> Result<Report, SubmanifoldError> {
    let title = match dec.case {
        DecompositionCase::NonOrthogonal => "decomposition identities (non-orthogonal case)",
        DecompositionCase::Orthogonal => "decomposition identities (orthogonal case, a = b = 0)",
    };
    let mut report = Report::new(title);
    let mut c = Checker { report: &mut report };
    let sec = &dec.section;
    let split = sec.splitter()?;
    let acd = &space.structure;
    let (a, b) = (&dec.a, &dec.b);
    let m = dec.dim();

    let xi_rec = &(&split.embed(&dec.xi0) + &sec.n1.scale(a)) + &sec.n2.scale(b);
    c.vec("xi = xi0 + a N1 + b N2", &xi_rec, &acd.xi);
    let mut phi_fail = Vec::new();
    for (j, t) in sec.tangent.iter().enumerate() {
        let rec = &(&split.embed(&dec.phi.col(j)) + &sec.n1.scale(&dec.eta1[j]))
            + &sec.n2.scale(&dec.eta2[j]);
        if rec != acd.phi.mul_vec(t) {
            phi_fail.push(format!("t{j}"));
        }
    }
    c.report.push_failures("phi X = phi_tan X + eta1(X) N1 + eta2(X) N2", phi_fail);
    c.vec("phi N1 = xi1", &split.embed(&dec.xi1), &acd.phi.mul_vec(&sec.n1));
    c.vec("phi N2 = -xi2", &-&split.embed(&dec.xi2), &acd.phi.mul_vec(&sec.n2));

    let gram = &dec.gram;
    for (name, eta, xi) in [
        ("eta0(X) = g(X, xi0)", &dec.eta0, &dec.xi0),
        ("eta1(X) = g(X, xi1)", &dec.eta1, &dec.xi1),
        ("eta2(X) = g(X, xi2)", &dec.eta2, &dec.xi2),
    ] {
        c.vec(name, eta, &gram.mul_vec(xi));
    }

    let outer = Matrix::outer;
    let phi = &dec.phi;
    let lhs = &(&phi.transpose() * gram) * phi;
    let rhs = &(&(&outer(&dec.eta0, &dec.eta0) - gram) - &outer(&dec.eta1, &dec.eta1))
        + &outer(&dec.eta2, &dec.eta2);
    c.mat("g(phi X, phi Y) = -g(X,Y) + eta0 eta0 - eta1 eta1 + eta2 eta2", &lhs, &rhs);

    let sq = phi * phi;
    let rhs = &(&(&outer(&dec.xi0, &dec.eta0) - &Matrix::identity(m)) - &outer(&dec.xi1, &dec.eta1))
        + &outer(&dec.xi2, &dec.eta2);
    c.mat("phi^2 X = -X + eta0(X) xi0 - eta1(X) xi1 + eta2(X) xi2", &sq, &rhs);
    c.vec(
        "eta0(phi X) = -a eta1(X) + b eta2(X)",
        &phi.vec_mul(&dec.eta0),
        &(&dec.eta2.scale(b) - &dec.eta1.scale(a)),
    );
    c.vec("eta1(phi X) = a eta0(X)", &phi.vec_mul(&dec.eta1), &dec.eta0.scale(a));
    c.vec("eta2(phi X) = b eta0(X)", &phi.vec_mul(&dec.eta2), &dec.eta0.scale(b));

    c.vec(
        "phi xi0 = -a xi1 + b xi2",
        &phi.mul_vec(&dec.xi0),
        &(&dec.xi2.scale(b) - &dec.xi1.scale(a)),
    );
    c.vec("phi xi1 = a xi0", &phi.mul_vec(&dec.xi1), &dec.xi0.scale(a));
    c.vec("phi xi2 = b xi0", &phi.mul_vec(&dec.xi2), &dec.xi0.scale(b));

    let one = F::one();
    let (a2, b2) = (a.clone() * a.clone(), b.clone() * b.clone());
    let g = |u: &Vector<F>, v: &Vector<F>| gram.form(u, v);
    c.scalar("g(xi0,xi0) = 1 - a^2 + b^2", g(&dec.xi0, &dec.xi0), one.clone() - a2.clone() + b2.clone());
    c.scalar("g(xi1,xi1) = a^2 - 1", g(&dec.xi1, &dec.xi1), a2 - one.clone());
    c.scalar("g(xi2,xi2) = 1 + b^2", g(&dec.xi2, &dec.xi2), one + b2);
    c.scalar("g(xi0,xi1) = 0", g(&dec.xi0, &dec.xi1), F::zero());
    c.scalar("g(xi0,xi2) = 0", g(&dec.xi0, &dec.xi2), F::zero());
    c.scalar("g(xi1,xi2) = ab", g(&dec.xi1, &dec.xi2), a.clone() * b.clone());
    Ok(report)
}
