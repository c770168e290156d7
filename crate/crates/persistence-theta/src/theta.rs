//! The stage filtration: integer-indexed sub-CDGAs of a relative Sullivan
//! model, constant beyond the stabilization index.

use field_linalg::Scalar;
use sullivan_models::{cohomology, GradedCohomology, ModelError, RelativeSullivanModel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ThetaError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Cohomology(#[from] sullivan_models::CohomologyError),
}

/// A relative Sullivan model together with its stage filtration: stage s
/// holds the subalgebra generated by the base and the fiber generators of
/// stage ≤ s. Structure maps are literal inclusions, identities beyond the
/// stabilization index.
#[derive(Debug, Clone)]
pub struct PersistenceCdga<S: Scalar> {
    pub model: RelativeSullivanModel<S>,
    /// Max fiber stage; the filtration is constant from here on.
    pub stabilization: u32,
    /// True when the model passed the minimality check (staging is still
    /// valid by degrees when it did not).
    pub minimal: bool,
}

/// Build the stage filtration. Stage closure (no differential escaping its
/// stage) is a hard error; non-minimality is recorded but not fatal.
pub fn build_theta<S: Scalar>(
    model: RelativeSullivanModel<S>,
) -> Result<PersistenceCdga<S>, ThetaError> {
    model.validate()?;
    let minimal = model.verify_minimality().is_ok();
    let stabilization = model.stabilization_index();
    Ok(PersistenceCdga {
        model,
        stabilization,
        minimal,
    })
}

impl<S: Scalar> PersistenceCdga<S> {
    /// Generator availability at a real-valued filtration time (floors).
    pub fn allowed_at(&self, t: u32) -> Vec<bool> {
        self.model.allowed_at_stage(t.min(self.stabilization))
    }

    /// Cohomology of the stage-t subalgebra through degree `cap`.
    pub fn stage_cohomology(&self, t: u32, cap: usize) -> Result<GradedCohomology<S>, ThetaError> {
        Ok(cohomology(&self.model.algebra, cap, &self.allowed_at(t))?)
    }
}
