//! Persistence modules over integer stages: dimension sequences with
//! transition matrices, built from stage-wise cohomology (of the full
//! algebra or of the indecomposables).

use crate::theta::{PersistenceCdga, ThetaError};
use field_linalg::{Matrix, Scalar};
use sullivan_models::linear_part_homology;

/// One cohomological degree of a persistence module: dimensions at stages
/// 0..=N and transitions M(s → s+1) for s in 0..N.
#[derive(Debug, Clone)]
pub struct DegreeModule<S: Scalar> {
    pub dims: Vec<usize>,
    pub transitions: Vec<Matrix<S>>,
}

impl<S: Scalar> DegreeModule<S> {
    /// Composite transition M(s → t), s ≤ t.
    pub fn composite(&self, s: usize, t: usize) -> Matrix<S> {
        let mut m = Matrix::identity(self.dims[s]);
        for step in s..t {
            m = self.transitions[step].matmul(&m);
        }
        m
    }
}

/// A persistence module per degree 0..=cap over stages 0..=N.
#[derive(Debug, Clone)]
pub struct PersistenceModule<S: Scalar> {
    pub cap: usize,
    /// Stabilization index N: values and maps are constant from stage N on.
    pub stabilization: u32,
    pub degrees: Vec<DegreeModule<S>>,
    /// Set when the underlying model was truncated; all derived distances
    /// are lower bounds only.
    pub truncated_at: Option<u32>,
}

impl<S: Scalar> PersistenceModule<S> {
    pub fn stages(&self) -> usize {
        self.stabilization as usize + 1
    }
}

/// The stage-wise cohomology persistence module of a filtered model.
pub fn persistence_cohomology<S: Scalar>(
    theta: &PersistenceCdga<S>,
    cap: usize,
) -> Result<PersistenceModule<S>, ThetaError> {
    let n_stages = theta.stabilization as usize + 1;
    let stage_h: Vec<_> = (0..n_stages)
        .map(|s| theta.stage_cohomology(s as u32, cap))
        .collect::<Result<_, _>>()?;
    let mut degrees = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let dims: Vec<usize> = stage_h.iter().map(|h| h.degree(n).dim()).collect();
        let mut transitions = Vec::with_capacity(n_stages.saturating_sub(1));
        for s in 0..n_stages - 1 {
            let columns: Vec<Vec<S>> = stage_h[s]
                .degree(n)
                .representatives
                .iter()
                .map(|rep| {
                    stage_h[s + 1]
                        .degree(n)
                        .class_coordinates(rep)
                        .expect("stage inclusion failed to map a cohomology class")
                })
                .collect();
            transitions.push(Matrix::from_columns(&columns, dims[s + 1]));
        }
        degrees.push(DegreeModule { dims, transitions });
    }
    Ok(PersistenceModule {
        cap,
        stabilization: theta.stabilization,
        degrees,
        truncated_at: theta.model.truncated_at,
    })
}

/// The stage-wise homology of the indecomposables as a persistence module.
pub fn persistence_linear_homology<S: Scalar>(
    theta: &PersistenceCdga<S>,
    cap: usize,
) -> PersistenceModule<S> {
    let n_stages = theta.stabilization as usize + 1;
    let stage_h: Vec<_> = (0..n_stages)
        .map(|s| linear_part_homology(&theta.model, cap, &theta.allowed_at(s as u32)))
        .collect();
    let mut degrees = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let dims: Vec<usize> = stage_h.iter().map(|h| h.degree(n).dim()).collect();
        let mut transitions = Vec::with_capacity(n_stages.saturating_sub(1));
        for s in 0..n_stages - 1 {
            let this = stage_h[s].degree(n);
            let next = stage_h[s + 1].degree(n);
            let columns: Vec<Vec<S>> = this
                .representatives
                .iter()
                .map(|rep| {
                    // Re-express the vector over the next stage's (larger)
                    // generator list, then take class coordinates.
                    let mut v = vec![S::zero(); next.generator_ids.len()];
                    for (c, &id) in rep.iter().zip(&this.generator_ids) {
                        let pos = next
                            .generator_ids
                            .iter()
                            .position(|&x| x == id)
                            .expect("stage generator missing at the next stage");
                        v[pos] = c.clone();
                    }
                    next.class_coordinates(&v)
                        .expect("stage inclusion failed to map a linear homology class")
                })
                .collect();
            transitions.push(Matrix::from_columns(&columns, dims[s + 1]));
        }
        degrees.push(DegreeModule { dims, transitions });
    }
    PersistenceModule {
        cap,
        stabilization: theta.stabilization,
        degrees,
        truncated_at: theta.model.truncated_at,
    }
}

/// The ε-shift of a persistence module on the half-integer grid: the value
/// at stage s becomes the original value at min(s + ⌊ε⌋, N). `eps_halves`
/// counts half-units, so ⌊ε⌋ = eps_halves / 2.
pub fn shift<S: Scalar>(module: &PersistenceModule<S>, eps_halves: u32) -> PersistenceModule<S> {
    let n_stages = module.stages();
    let offset = (eps_halves / 2) as usize;
    let src = |s: usize| (s + offset).min(n_stages - 1);
    let degrees = module
        .degrees
        .iter()
        .map(|d| {
            let dims: Vec<usize> = (0..n_stages).map(|s| d.dims[src(s)]).collect();
            let transitions: Vec<Matrix<S>> = (0..n_stages.saturating_sub(1))
                .map(|s| d.composite(src(s), src(s + 1)))
                .collect();
            DegreeModule { dims, transitions }
        })
        .collect();
    PersistenceModule {
        cap: module.cap,
        stabilization: module.stabilization,
        degrees,
        truncated_at: module.truncated_at,
    }
}
