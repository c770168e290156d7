//! Two-sided evidence about the interleaving distance of filtered models:
//! verified certificates give upper bounds, obstruction mechanisms give lower
//! bounds, and the two never contradict each other. A constraint solver and
//! an algebra-map-space analysis power the obstructions; zigzag certificates
//! connect filtered objects to their cohomology stage by stage.

pub mod certificate;
pub mod formality;
pub mod mapspace;
pub mod obstruct;
pub mod solver;

pub use certificate::{verify_certificate, CertificateError, InterleavingCertificate};
pub use formality::{
    verify_h_formality_certificate, FormalityError, StagewisePersistenceCdga, ZigzagArrow,
};
pub use mapspace::{algebra_map_space, MapSpaceVerdict};
pub use obstruct::{
    lower_bound_scan, obstruct, Mechanism, ObstructionEngine, ObstructionVerdict,
    ObstructionWitness, ScanReport,
};
pub use solver::{find_witness, poly_determinant, refute, Poly, System};
