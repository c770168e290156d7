//! Distances between filtered models: exact bottleneck distance of integer
//! barcodes with witnesses, the module-level cohomology interleaving
//! distance, and closed-form upper-bound formulas.

pub mod bottleneck;
pub mod bounds;
pub mod halfvalue;
pub mod report;

pub use bottleneck::{
    bottleneck, bottleneck_brute_force, deletion_cost, match_cost, Interval, Matching,
};
pub use bounds::{bound_basepoint, bound_n, bound_path_fibration, bound_wht, BoundError};
pub use halfvalue::HalfValue;
pub use report::{barcode_distance, clip_intervals, d_cohi_module, DegreeDistance, DistanceReport};
