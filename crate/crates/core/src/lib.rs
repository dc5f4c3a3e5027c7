pub mod catalog;
pub mod field;
pub mod geometry;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod submanifold;

pub use field::Field;
pub use linalg::{LinalgError, Matrix, Tensor3, Tensor4, Vector};
pub use report::{Check, Report};
pub use scalar::{Fraction, Scalar, ScalarError, SymbolTable};

pub type SymMatrix = Matrix<Fraction>;
pub type RatMatrix = Matrix<num_rational::BigRational>;
pub type SymSpace = geometry::AmbientSpace<Fraction>;
