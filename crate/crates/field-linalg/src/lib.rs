//! Exact scalar fields and the dense linear algebra that every cohomology
//! and barcode computation in the workspace reduces to.
//!
//! Two fields are provided: arbitrary-precision rationals ([`Rational`]) and
//! Gaussian rationals ([`GaussianRational`]). The field is selected through
//! the [`Scalar`] type parameter and fixed per computation. All elimination
//! is deterministic (first-nonzero pivoting), so representative choices in
//! downstream cohomology bases are stable.

pub mod matrix;
pub mod scalar;

pub use matrix::{quotient_basis, solve_in_span, Matrix, Rref, SpanSolution};
pub use scalar::{GaussianRational, Rational, Scalar, ScalarParseError};
