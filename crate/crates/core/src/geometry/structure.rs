use crate::linalg::{Matrix, Vector};
use crate::report::Report;
use crate::Field;

use super::{GeometryError, LieAlgebraFrame};

/// A constant symmetric invertible metric on a frame, with its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct NordenMetric<F: Field> {
    g: Matrix<F>,
    inv: Matrix<F>,
}

impl<F: Field> NordenMetric<F> {
    pub fn new(g: Matrix<F>) -> Result<Self, GeometryError> {
        if !g.is_square() {
            return Err(GeometryError::Dimension(format!(
                "metric is {}x{}",
                g.rows(),
                g.cols()
            )));
        }
        let asym: Vec<_> =
            g.differences(&g.transpose()).into_iter().filter(|(i, j)| i < j).collect();
        if !asym.is_empty() {
            return Err(GeometryError::NonSymmetricMetric(asym));
        }
        let inv = g.inverse().map_err(|_| GeometryError::SingularMetric)?;
        Ok(NordenMetric { g, inv })
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.g
    }

    pub fn inverse(&self) -> &Matrix<F> {
        &self.inv
    }

    /// `g(u, v)`.
    pub fn apply(&self, u: &Vector<F>, v: &Vector<F>) -> F {
        self.g.form(u, v)
    }

    /// The covector `g(v, ·)`.
    pub fn lower(&self, v: &Vector<F>) -> Vector<F> {
        self.g.mul_vec(v)
    }

    /// The vector `w` with `g(w, ·) = c`.
    pub fn raise(&self, c: &Vector<F>) -> Vector<F> {
        self.inv.mul_vec(c)
    }
}

/// `(φ, ξ, η)` on a frame. Column `j` of `phi` is `φ(e_j)` and `eta[i]` is
/// `η(e_i)`. Nothing is validated here, see [`check_acn_axioms`].
#[derive(Clone, Debug, PartialEq)]
pub struct AlmostContactData<F: Field> {
    pub phi: Matrix<F>,
    pub xi: Vector<F>,
    pub eta: Vector<F>,
}

impl<F: Field> AlmostContactData<F> {
    pub fn new(phi: Matrix<F>, xi: Vector<F>, eta: Vector<F>) -> Result<Self, GeometryError> {
        let n = xi.len();
        if phi.rows() != n || phi.cols() != n || eta.len() != n {
            return Err(GeometryError::Dimension(format!(
                "phi is {}x{}, xi has {} and eta has {} entries",
                phi.rows(),
                phi.cols(),
                n,
                eta.len()
            )));
        }
        Ok(AlmostContactData { phi, xi, eta })
    }

    pub fn dim(&self) -> usize {
        self.xi.len()
    }
}

/// A Lie algebra frame with a Norden metric and an almost contact
/// structure.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbientSpace<F: Field> {
    pub frame: LieAlgebraFrame<F>,
    pub metric: NordenMetric<F>,
    pub structure: AlmostContactData<F>,
}

impl<F: Field> AmbientSpace<F> {
    pub fn new(
        frame: LieAlgebraFrame<F>,
        metric: NordenMetric<F>,
        structure: AlmostContactData<F>,
    ) -> Result<Self, GeometryError> {
        let n = frame.dim();
        if metric.dim() != n || structure.dim() != n {
            return Err(GeometryError::Dimension(format!(
                "frame has dimension {n}, metric {}, structure {}",
                metric.dim(),
                structure.dim()
            )));
        }
        if n.is_multiple_of(2) {
            return Err(GeometryError::EvenDimension(n));
        }
        Ok(AmbientSpace { frame, metric, structure })
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }
}

fn entry_failures<F: Field>(lhs: &Matrix<F>, rhs: &Matrix<F>) -> Vec<String> {
    lhs.differences(rhs)
        .into_iter()
        .map(|(i, j)| format!("({i},{j}): {} != {}", lhs[(i, j)], rhs[(i, j)]))
        .collect()
}

fn component_failures<F: Field>(v: &Vector<F>) -> Vec<String> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| format!("[{i}] = {x}"))
        .collect()
}

/// Checks the almost contact and Norden compatibility identities as exact
/// matrix identities:
///
/// * `φ² = -I + ξ ηᵀ`
/// * `η(ξ) = 1`
/// * `φ ξ = 0`
/// * `η ∘ φ = 0`
/// * `φᵀ G φ = -G + η ηᵀ`
pub fn check_acn_axioms<F: Field>(space: &AmbientSpace<F>) -> Report {
    check_structure_axioms(&space.metric, &space.structure)
}

/// [`check_acn_axioms`] on a metric and structure not yet packaged as an
/// [`AmbientSpace`].
pub fn check_structure_axioms<F: Field>(
    metric: &NordenMetric<F>,
    acd: &AlmostContactData<F>,
) -> Report {
    let n = acd.dim();
    let mut r = Report::new("almost contact axioms");
    let phi = &acd.phi;
    let eta_xi = Matrix::outer(&acd.xi, &acd.eta);
    let phi_sq = phi * phi;
    r.push_failures("phi^2 = -I + eta(.) xi", entry_failures(&phi_sq, &(&eta_xi - &Matrix::identity(n))));
    let ex = acd.eta.dot(&acd.xi);
    r.push(
        "eta(xi) = 1",
        ex.is_one(),
        (!ex.is_one()).then(|| format!("eta(xi) = {ex}")),
    );
    r.push_failures("phi xi = 0", component_failures(&phi.mul_vec(&acd.xi)));
    r.push_failures("eta o phi = 0", component_failures(&phi.vec_mul(&acd.eta)));
    let g = metric.matrix();
    let lhs = &(&phi.transpose() * g) * phi;
    let rhs = &Matrix::outer(&acd.eta, &acd.eta) - g;
    r.push_failures(
        "g(phi X, phi Y) = -g(X,Y) + eta(X) eta(Y)",
        entry_failures(&lhs, &rhs),
    );
    r
}

/// `g̃(X,Y) = g(X, φY) + η(X)η(Y)`.
pub fn associated_metric<F: Field>(space: &AmbientSpace<F>) -> Result<NordenMetric<F>, GeometryError> {
    let acd = &space.structure;
    let gt = &(space.metric.matrix() * &acd.phi) + &Matrix::outer(&acd.eta, &acd.eta);
    NordenMetric::new(gt)
}

/// Re-expresses `space` in the frame `e'_i = Σ_k p[k][i] e_k`, i.e. column
/// `i` of `p` holds the coordinates of the new `i`-th basis vector.
pub fn change_basis<F: Field>(
    space: &AmbientSpace<F>,
    p: &Matrix<F>,
    names: Vec<String>,
) -> Result<AmbientSpace<F>, GeometryError> {
    let n = space.dim();
    if p.rows() != n || p.cols() != n || names.len() != n {
        return Err(GeometryError::Dimension(format!(
            "basis change for dimension {n} given as {}x{} with {} names",
            p.rows(),
            p.cols(),
            names.len()
        )));
    }
    let q = p.inverse().map_err(|_| GeometryError::SingularBasisChange)?;
    let cols: Vec<_> = (0..n).map(|i| p.col(i)).collect();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let b = q.mul_vec(&space.frame.bracket(&cols[i], &cols[j]));
            if !b.is_zero() {
                brackets.push(((i, j), b));
            }
        }
    }
    let frame = LieAlgebraFrame::new(names, brackets)?;
    let metric = NordenMetric::new(&(&p.transpose() * space.metric.matrix()) * p)?;
    let acd = &space.structure;
    let structure = AlmostContactData::new(
        &(&q * &acd.phi) * p,
        q.mul_vec(&acd.xi),
        p.vec_mul(&acd.eta),
    )?;
    AmbientSpace::new(frame, metric, structure)
}
