use crate::geometry::AmbientSpace;
use crate::linalg::{sym_rank_and_signature, Matrix, Signature, Vector};
use crate::Field;

use super::SubmanifoldError;

/// Normals `N₁`, `N₂` and tangent spanning vectors, all in ambient
/// coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalSection<F: Field> {
    pub n1: Vector<F>,
    pub n2: Vector<F>,
    pub tangent: Vec<Vector<F>>,
}

impl<F: Field> NormalSection<F> {
    pub fn new(
        n1: Vector<F>,
        n2: Vector<F>,
        tangent: Vec<Vector<F>>,
    ) -> Result<Self, SubmanifoldError> {
        let n = n1.len();
        if n2.len() != n || tangent.iter().any(|t| t.len() != n) {
            return Err(SubmanifoldError::Dimension(
                "normals and tangent vectors have different lengths".into(),
            ));
        }
        Ok(NormalSection { n1, n2, tangent })
    }

    /// Section whose normals and tangent vectors are frame vectors, by index.
    pub fn from_indices(n: usize, n1: usize, n2: usize, tangent: &[usize]) -> Self {
        NormalSection {
            n1: Vector::basis(n, n1),
            n2: Vector::basis(n, n2),
            tangent: tangent.iter().map(|&i| Vector::basis(n, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n1.len()
    }

    pub fn tangent_dim(&self) -> usize {
        self.tangent.len()
    }

    /// `[t_1 .. t_m | N₁ | N₂]`.
    pub fn adapted_basis(&self) -> Result<Matrix<F>, SubmanifoldError> {
        let mut cols = self.tangent.clone();
        cols.push(self.n1.clone());
        cols.push(self.n2.clone());
        Ok(Matrix::from_columns(&cols)?)
    }

    /// Splits ambient vectors into tangent coordinates and the two normal
    /// coefficients.
    pub(crate) fn splitter(&self) -> Result<Splitter<F>, SubmanifoldError> {
        let p = self.adapted_basis()?;
        if !p.is_square() {
            return Err(SubmanifoldError::Dimension(format!(
                "{} tangent vectors in an ambient of dimension {}",
                self.tangent_dim(),
                self.ambient_dim()
            )));
        }
        let inv = p.inverse().map_err(|_| SubmanifoldError::NotComplementary)?;
        Ok(Splitter { m: self.tangent_dim(), inv, basis: Matrix::from_columns(&self.tangent)? })
    }

    pub(crate) fn check_shape(&self, n: usize) -> Result<(), SubmanifoldError> {
        if self.ambient_dim() != n {
            return Err(SubmanifoldError::Dimension(format!(
                "section lives in dimension {}, ambient has {n}",
                self.ambient_dim()
            )));
        }
        Ok(())
    }
}

pub(crate) struct Splitter<F: Field> {
    m: usize,
    inv: Matrix<F>,
    /// Columns are the tangent vectors.
    pub basis: Matrix<F>,
}

impl<F: Field> Splitter<F> {
    pub fn split(&self, v: &Vector<F>) -> (Vector<F>, F, F) {
        let c = self.inv.mul_vec(v).into_inner();
        let n2 = c[self.m + 1].clone();
        let n1 = c[self.m].clone();
        (Vector::new(c[..self.m].to_vec()), n1, n2)
    }

    /// Ambient coordinates of a tangent coordinate vector.
    pub fn embed(&self, x: &Vector<F>) -> Vector<F> {
        self.basis.mul_vec(x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionType {
    /// Definite restricted metric.
    Pure,
    /// Signature (1,1).
    Hybrid,
    /// Degenerate, or a pivot sign depends on free parameters.
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    /// Rank 2.
    NonDegenerate,
    /// Rank 1.
    WeaklyIsotropic,
    /// Rank 0.
    StronglyIsotropic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionClass {
    pub rank: usize,
    pub signature: Signature,
    pub kind: SectionType,
    pub degeneracy: Degeneracy,
    /// `φ̄α ⊆ α`.
    pub holomorphic: bool,
    /// `ξ̄ ∈ α`.
    pub xi_section: bool,
    /// `g(N_i, φ̄N_j) = 0` for all `i, j`.
    pub totally_real: bool,
    /// `g(ξ̄, N₁) = g(ξ̄, N₂) = 0`.
    pub xi_orthogonal: bool,
}

impl std::fmt::Display for SectionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sig = match self.signature {
            Signature::Known { positive, negative } => format!("({positive},{negative})"),
            Signature::Indeterminate => "indeterminate".into(),
        };
        write!(
            f,
            "rank {}, signature {sig}, {:?}, {:?}; holomorphic: {}, xi-section: {}, totally real: {}, orthogonal to xi: {}",
            self.rank,
            self.kind,
            self.degeneracy,
            self.holomorphic,
            self.xi_section,
            self.totally_real,
            self.xi_orthogonal
        )
    }
}

fn in_span<F: Field>(n1: &Vector<F>, n2: &Vector<F>, v: &Vector<F>) -> bool {
    let m = Matrix::from_columns(&[n1.clone(), n2.clone(), v.clone()]).expect("equal lengths");
    m.rank() == 2
}

pub fn classify_section<F: Field>(
    space: &AmbientSpace<F>,
    sec: &NormalSection<F>,
) -> Result<SectionClass, SubmanifoldError> {
    sec.check_shape(space.dim())?;
    let (n1, n2) = (&sec.n1, &sec.n2);
    if Matrix::from_columns(&[n1.clone(), n2.clone()])?.rank() < 2 {
        return Err(SubmanifoldError::DegenerateSection);
    }
    let g = &space.metric;
    let gram = Matrix::from_rows(vec![
        vec![g.apply(n1, n1), g.apply(n1, n2)],
        vec![g.apply(n2, n1), g.apply(n2, n2)],
    ])?;
    let form = sym_rank_and_signature(&gram)?;
    let degeneracy = match form.rank {
        2 => Degeneracy::NonDegenerate,
        1 => Degeneracy::WeaklyIsotropic,
        _ => Degeneracy::StronglyIsotropic,
    };
    let kind = match (form.rank, form.signature) {
        (2, Signature::Known { positive: 1, negative: 1 }) => SectionType::Hybrid,
        (2, Signature::Known { .. }) => SectionType::Pure,
        _ => SectionType::Indeterminate,
    };
    let phi = &space.structure.phi;
    let (p1, p2) = (phi.mul_vec(n1), phi.mul_vec(n2));
    let xi = &space.structure.xi;
    let totally_real = [(n1, &p1), (n2, &p2), (n1, &p2), (n2, &p1)]
        .iter()
        .all(|(u, v)| g.apply(u, v).is_zero());
    Ok(SectionClass {
        rank: form.rank,
        signature: form.signature,
        kind,
        degeneracy,
        holomorphic: in_span(n1, n2, &p1) && in_span(n1, n2, &p2),
        xi_section: in_span(n1, n2, xi),
        totally_real,
        xi_orthogonal: g.apply(xi, n1).is_zero() && g.apply(xi, n2).is_zero(),
    })
}
