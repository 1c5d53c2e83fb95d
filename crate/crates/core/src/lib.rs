//! Exact generalized inverses of ring elements and dual matrices, and their
//! behaviour under perturbation by elements of the Jacobson radical.
//!
//! The crate is generic over an exact scalar type ([`Scalar`]); the aliases
//! below fix the common instantiations.

pub mod dual;
pub mod finite;
pub mod json;
pub mod matrix;
pub mod perturb;
pub mod ring;
pub mod scalar;

pub use dual::{DualMatrix, DualMatrixRing};
pub use matrix::{Matrix, MatrixError, MatrixRing};
pub use ring::{InverseKind, RingError, RingSpace, VerdictReport};
pub use scalar::{ModInt, Scalar};

/// Arbitrary-precision rational, always normalized.
pub type Rational = num_rational::BigRational;
pub type QMatrix = Matrix<Rational>;
pub type QDualMatrix = DualMatrix<Rational>;
