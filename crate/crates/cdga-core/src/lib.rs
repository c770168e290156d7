//! Symbolic core: free graded-commutative differential algebras, morphisms,
//! the interval algebra ∧(t, dt), homotopies between algebra maps, and an
//! expression parser for element input.
//!
//! Everything is exact over a [`field_linalg::Scalar`] field, with canonical
//! (sorted, sign-normalized) term representations so equality of elements is
//! structural equality.

pub mod algebra;
pub mod expr;
pub mod homotopy;
pub mod interval;
pub mod morphism;

pub use algebra::{AlgebraError, Element, FreeCdga, Generator, Homogeneity, Monomial, RawTerm};
pub use expr::{parse_element, parse_interval_element, ExprError};
pub use homotopy::{apply_homotopy, verify_homotopy, Homotopy, HomotopyError};
pub use interval::{idifferential, imul, IElement, ITerm, IntervalError};
pub use morphism::{
    apply_morphism, compose, morphism_from_named, verify_morphism, Morphism, MorphismError,
};
