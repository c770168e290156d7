//! The stage filtration of a relative Sullivan model, its stage-wise
//! cohomology as a persistence module over the integers, and the barcode
//! decomposition of that module.

pub mod barcode;
pub mod module;
pub mod theta;

pub use barcode::{barcode, Bar, Barcode};
pub use module::{
    persistence_cohomology, persistence_linear_homology, shift, DegreeModule, PersistenceModule,
};
pub use theta::{build_theta, PersistenceCdga, ThetaError};
