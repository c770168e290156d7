//! Quasi-isomorphism and strict isomorphism checks for verified morphisms.

use crate::cohomology::{cohomology_full, CohomologyError};
use cdga_core::{apply_morphism, compose, Element, FreeCdga, Morphism};
use field_linalg::{Matrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuasiIsoError {
    #[error("H^{degree} is not an isomorphism: source dim {source_dim}, target dim {target_dim}, rank {rank}")]
    NotIsoInDegree {
        degree: usize,
        source_dim: usize,
        target_dim: usize,
        rank: usize,
    },
    #[error("image of a cocycle is not a cocycle in degree {0} (map is not a chain map)")]
    NotChainLevel(usize),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// The matrix of H^n(f) in the chosen representative bases.
pub fn cohomology_matrix<S: Scalar>(
    f: &Morphism<S>,
    target: &FreeCdga<S>,
    source_h: &crate::cohomology::GradedCohomology<S>,
    target_h: &crate::cohomology::GradedCohomology<S>,
    n: usize,
) -> Result<Matrix<S>, QuasiIsoError> {
    let columns: Result<Vec<Vec<S>>, QuasiIsoError> = source_h
        .degree(n)
        .representatives
        .iter()
        .map(|rep| {
            let image = apply_morphism(f, target, rep);
            target_h
                .degree(n)
                .class_coordinates(&image)
                .ok_or(QuasiIsoError::NotChainLevel(n))
        })
        .collect();
    Ok(Matrix::from_columns(
        &columns?,
        target_h.degree(n).dim(),
    ))
}

/// Check H^n(f) is an isomorphism for all n ≤ cap.
pub fn verify_quasi_iso<S: Scalar>(
    f: &Morphism<S>,
    source: &FreeCdga<S>,
    target: &FreeCdga<S>,
    cap: usize,
) -> Result<(), QuasiIsoError> {
    let source_h = cohomology_full(source, cap)?;
    let target_h = cohomology_full(target, cap)?;
    for n in 0..=cap {
        let matrix = cohomology_matrix(f, target, &source_h, &target_h, n)?;
        let rank = matrix.rank();
        let sdim = source_h.degree(n).dim();
        let tdim = target_h.degree(n).dim();
        if sdim != tdim || rank != sdim {
            return Err(QuasiIsoError::NotIsoInDegree {
                degree: n,
                source_dim: sdim,
                target_dim: tdim,
                rank,
            });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IsoPairError {
    #[error("g∘f differs from the identity on `{0}`")]
    ForwardBackward(String),
    #[error("f∘g differs from the identity on `{0}`")]
    BackwardForward(String),
}

/// Check f: A → B and g: B → A compose to the identity exactly, both ways.
pub fn verify_isomorphism_pair<S: Scalar>(
    f: &Morphism<S>,
    g: &Morphism<S>,
    a: &FreeCdga<S>,
    b: &FreeCdga<S>,
) -> Result<(), IsoPairError> {
    let gf = compose(f, g, a);
    for (id, gen) in a.generators().iter().enumerate() {
        if gf.assignment[id] != Element::generator(id) {
            return Err(IsoPairError::ForwardBackward(gen.name.clone()));
        }
    }
    let fg = compose(g, f, b);
    for (id, gen) in b.generators().iter().enumerate() {
        if fg.assignment[id] != Element::generator(id) {
            return Err(IsoPairError::BackwardForward(gen.name.clone()));
        }
    }
    Ok(())
}
