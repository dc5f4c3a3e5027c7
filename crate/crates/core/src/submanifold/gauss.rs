use crate::geometry::{AmbientSpace, ConnectionTable};
use crate::linalg::{Matrix, Vector};
use crate::report::Report;
use crate::Field;

use super::{NormalSection, SubmanifoldError};

/// Shape operators and normal connection form:
///
/// ```text
/// ∇̄_X N₁ = -A₁X + γ(X) N₂
/// ∇̄_X N₂ = -A₂X + γ(X) N₁
/// ```
///
/// `a1`, `a2` act on tangent coordinates; `gamma` holds `γ` on the tangent
/// spanning vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussWeingartenData<F: Field> {
    pub a1: Matrix<F>,
    pub a2: Matrix<F>,
    pub gamma: Vector<F>,
}

/// Extracts `A₁ = -tan(∇̄N₁)`, `A₂ = -tan(∇̄N₂)` and `γ`, computing `γ` both
/// as `-g(∇̄_X N₁, N₂)` and as `g(∇̄_X N₂, N₁)`; they must agree.
pub fn gauss_weingarten<F: Field>(
    space: &AmbientSpace<F>,
    sec: &NormalSection<F>,
    conn: &ConnectionTable<F>,
) -> Result<GaussWeingartenData<F>, SubmanifoldError> {
    sec.check_shape(space.dim())?;
    let split = sec.splitter()?;
    let m = sec.tangent_dim();
    let g = &space.metric;
    let mut a1 = Matrix::zeros(m, m);
    let mut a2 = Matrix::zeros(m, m);
    let mut gamma = Vec::with_capacity(m);
    let mut mismatched = Vec::new();
    for (j, t) in sec.tangent.iter().enumerate() {
        let d1 = conn.apply(t, &sec.n1);
        let d2 = conn.apply(t, &sec.n2);
        let (tan1, _, _) = split.split(&d1);
        let (tan2, _, _) = split.split(&d2);
        for i in 0..m {
            a1[(i, j)] = -tan1[i].clone();
            a2[(i, j)] = -tan2[i].clone();
        }
        let g1 = -g.apply(&d1, &sec.n2);
        let g2 = g.apply(&d2, &sec.n1);
        if g1 != g2 {
            mismatched.push(j);
        }
        gamma.push(g1);
    }
    if !mismatched.is_empty() {
        return Err(SubmanifoldError::GammaMismatch(mismatched));
    }
    Ok(GaussWeingartenData { a1, a2, gamma: Vector::new(gamma) })
}

/// Checks that the Weingarten formulas reconstruct `∇̄_X N_i` exactly and
/// that the normal part of `∇̄_X Y` is `g(A₁X,Y) N₁ - g(A₂X,Y) N₂`.
pub fn check_gauss_weingarten<F: Field>(
    space: &AmbientSpace<F>,
    sec: &NormalSection<F>,
    conn: &ConnectionTable<F>,
    data: &GaussWeingartenData<F>,
) -> Result<Report, SubmanifoldError> {
    let split = sec.splitter()?;
    let g = &space.metric;
    let m = sec.tangent_dim();
    let basis = &split.basis;
    let gram = &(&basis.transpose() * g.matrix()) * basis;
    let mut report = Report::new("Gauss-Weingarten formulas");
    let mut w1 = Vec::new();
    let mut w2 = Vec::new();
    for (j, t) in sec.tangent.iter().enumerate() {
        let gj = &data.gamma[j];
        let r1 = &(-&split.embed(&data.a1.col(j))) + &sec.n2.scale(gj);
        if r1 != conn.apply(t, &sec.n1) {
            w1.push(format!("t{j}"));
        }
        let r2 = &(-&split.embed(&data.a2.col(j))) + &sec.n1.scale(gj);
        if r2 != conn.apply(t, &sec.n2) {
            w2.push(format!("t{j}"));
        }
    }
    report.push_failures("nabla_X N1 = -A1 X + gamma(X) N2", w1);
    report.push_failures("nabla_X N2 = -A2 X + gamma(X) N1", w2);
    let mut gauss = Vec::new();
    for i in 0..m {
        let a1x = data.a1.col(i);
        let a2x = data.a2.col(i);
        for j in 0..m {
            let (_, c1, c2) = split.split(&conn.apply(&sec.tangent[i], &sec.tangent[j]));
            let ej = Vector::basis(m, j);
            let h1 = gram.form(&a1x, &ej);
            let h2 = -gram.form(&a2x, &ej);
            if c1 != h1 || c2 != h2 {
                gauss.push(format!("(t{i}, t{j})"));
            }
        }
    }
    report.push_failures("normal part of nabla_X Y = g(A1 X, Y) N1 - g(A2 X, Y) N2", gauss);
    Ok(report)
}
