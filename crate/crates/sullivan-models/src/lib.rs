//! Relative Sullivan models as first-class objects: minimality validation,
//! graded cohomology with a coordinate solver, homology of the
//! indecomposables, and quasi-isomorphism / isomorphism checks.

pub mod cohomology;
pub mod linear;
pub mod model;
pub mod quasi;

pub use cohomology::{
    cohomology, cohomology_full, independent_modulo, CohomologyError, DegreeCohomology,
    GradedCohomology,
};
pub use linear::{linear_part_homology, LinearDegree, LinearHomology};
pub use model::{parse_in, RelativeSullivanModel, ModelError};
pub use quasi::{
    cohomology_matrix, verify_isomorphism_pair, verify_quasi_iso, IsoPairError, QuasiIsoError,
};
