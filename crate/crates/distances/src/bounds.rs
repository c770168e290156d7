//! Closed-form upper bounds for interleaving distances of filtered models.
//! These are pure formula evaluators; none of them claims tightness.

use crate::halfvalue::HalfValue;
use cdga_core::FreeCdga;
use field_linalg::Scalar;
use sullivan_models::{cohomology_full, RelativeSullivanModel};

/// Max fiber-generator degree: an upper bound for the homotopy-commutative
/// interleaving distance between the filtered model and the identity model
/// on its base. 0 when the fiber is empty.
pub fn bound_n<S: Scalar>(model: &RelativeSullivanModel<S>) -> u32 {
    model
        .fiber_ids()
        .map(|id| model.algebra.generator(id).degree as u32)
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("basepoint bound requires a contractible total algebra (found H^{0} nontrivial)")]
    NotContractible(usize),
    #[error(transparent)]
    Cohomology(#[from] sullivan_models::CohomologyError),
}

/// N/2 for a basepoint-inclusion model (the total algebra must be
/// contractible: reduced cohomology zero through its cap).
pub fn bound_basepoint<S: Scalar>(
    model: &RelativeSullivanModel<S>,
) -> Result<HalfValue, BoundError> {
    let n = bound_n(model);
    if model.base_count > 0 {
        let cap = model.algebra.cap().saturating_sub(1);
        let h = cohomology_full(&model.algebra, cap)?;
        for (deg, dim) in h.dims().iter().enumerate() {
            let expected = usize::from(deg == 0);
            if *dim != expected {
                return Err(BoundError::NotContractible(deg));
            }
        }
    }
    Ok(HalfValue::from_halves(n))
}

/// Top generator degree of a minimal algebra.
fn top_degree<S: Scalar>(a: &FreeCdga<S>) -> u32 {
    a.generators().iter().map(|g| g.degree as u32).max().unwrap_or(0)
}

/// Upper bound for the interleaving distance of the two product-projection
/// filtrations of Y × Z: the max top generator degree of the two minimal
/// models.
pub fn bound_wht<S: Scalar>(m_y: &FreeCdga<S>, m_z: &FreeCdga<S>) -> u32 {
    top_degree(m_y).max(top_degree(m_z))
}

/// Upper bound for the distance of the two path-fibration filtrations:
/// max(top degree of X − 1, top degree of Y − 1) / 2.
pub fn bound_path_fibration<S: Scalar>(m_x: &FreeCdga<S>, m_y: &FreeCdga<S>) -> HalfValue {
    let tx = top_degree(m_x).saturating_sub(1);
    let ty = top_degree(m_y).saturating_sub(1);
    HalfValue::from_halves(tx.max(ty))
}
