//! Codimension-two submanifolds of an almost contact manifold with Norden
//! metric whose normal plane `α = {N₁, N₂}` is spanned by constant vectors.
//!
//! The tangent space is described by explicit spanning vectors in the
//! ambient frame. Tangent-side quantities (`ξ₀`, `ξ₁`, `ξ₂`, the restricted
//! `φ`, the one-forms) are expressed in coordinates of that spanning set;
//! one-forms are stored as their values on the spanning vectors.

mod decompose;
mod gauss;
mod induce;
mod section;

use thiserror::Error;

use crate::geometry::GeometryError;
use crate::linalg::LinalgError;

pub use decompose::{check_decomposition_identities, decompose, Decomposition, DecompositionCase};
pub use gauss::{check_gauss_weingarten, gauss_weingarten, GaussWeingartenData};
pub use induce::{
    induce_nonorthogonal, induce_orthogonal, induce_orthogonal_unchecked, induced_geometry,
    restricted_frame,
    Branch, BranchTag, InducedParameters, InducedStructure,
};
pub use section::{classify_section, Degeneracy, NormalSection, SectionClass, SectionType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubmanifoldError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("normals N1 and N2 are linearly dependent")]
    DegenerateSection,
    #[error("tangent vectors together with N1, N2 do not form a basis")]
    NotComplementary,
    #[error("tangent vectors are not orthogonal to the normals: {0}")]
    TangentNotOrthogonal(String),
    #[error("normal section is not normalized as g(N1,N1) = -g(N2,N2) = 1, g(N1,N2) = 0: {0}")]
    NotNormalized(String),
    #[error("normal section is not totally real: {0}")]
    NotTotallyReal(String),
    #[error("the Reeb vector lies in the normal section")]
    XiInSection,
    #[error("operation requires the {expected} case")]
    WrongCase { expected: &'static str },
    #[error("a = g(xi, N1) vanishes")]
    ZeroA,
    #[error("k^2 = {k_squared} differs from a^2 - b^2 = {expected}")]
    KMismatch { k_squared: String, expected: String },
    #[error("branch {branch} is singular at k = {k}: the denominator k(k{sign}1) vanishes")]
    SingularBranch { branch: &'static str, k: String, sign: char },
    #[error("epsilon must be +1 or -1, got {0}")]
    BadEpsilon(i64),
    #[error("t0^2 + t2^2 = {0}, expected 1")]
    OffCircle(String),
    #[error("the two normal connection forms disagree on tangent vectors {0:?}")]
    GammaMismatch(Vec<usize>),
    #[error("tangent space is not a subalgebra: [t{}, t{}] leaves it", .i + 1, .j + 1)]
    NotSubalgebra { i: usize, j: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
