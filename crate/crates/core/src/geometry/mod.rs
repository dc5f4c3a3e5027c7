//! Left-invariant geometry on a Lie algebra frame: Norden metrics, almost
//! contact structures, the Levi-Civita connection, curvature and the tensor
//! `F(X,Y,Z) = g((∇_X φ)Y, Z)`.
//!
//! Every field has constant coefficients in the frame, so the derivative
//! terms of the Koszul formula vanish and all tensors are frame components.

mod connection;
mod frame;
mod ftensor;
mod structure;

use thiserror::Error;

use crate::linalg::LinalgError;

pub use connection::{curvature, koszul_connection, ConnectionTable, Curvature};
pub use frame::{check_jacobi, JacobiFailure, JacobiReport, LieAlgebraFrame};
pub use ftensor::{f_tensor_from_connection, f_tensor_lie, is_class_f0, pull_back};
pub use structure::{
    associated_metric, change_basis, check_acn_axioms, check_structure_axioms, AlmostContactData,
    AmbientSpace,
    NordenMetric,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("bracket [{i},{j}] is out of range or not ordered i < j (dimension {dim})")]
    BracketIndex { i: usize, j: usize, dim: usize },
    #[error("bracket [{i},{j}] given twice")]
    DuplicateBracket { i: usize, j: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("metric is not symmetric at {0:?}")]
    NonSymmetricMetric(Vec<(usize, usize)>),
    #[error("metric is singular")]
    SingularMetric,
    #[error("basis change matrix is singular")]
    SingularBasisChange,
    #[error("an almost contact manifold must have odd dimension, got {0}")]
    EvenDimension(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
