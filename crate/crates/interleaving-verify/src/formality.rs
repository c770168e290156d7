//! Stage-wise persistence CDGAs with arbitrary structure maps, and zigzag
//! certificates connecting a filtered object to its cohomology: a chain of
//! stage-wise quasi-isomorphisms, natural in the stage direction. A verified
//! zigzag is a proof that the object and its cohomology (with whatever
//! differential-free structure the final object carries) are connected by
//! weak equivalences stage by stage.

use cdga_core::{compose, verify_morphism, FreeCdga, Morphism, MorphismError};
use field_linalg::Scalar;
use sullivan_models::{verify_quasi_iso, QuasiIsoError};

/// A persistence CDGA given by explicit stage algebras and structure maps
/// `maps[s] : stages[s] → stages[s+1]` (not necessarily inclusions).
#[derive(Debug, Clone)]
pub struct StagewisePersistenceCdga<S: Scalar> {
    pub stages: Vec<FreeCdga<S>>,
    pub maps: Vec<Morphism<S>>,
}

/// One arrow of a zigzag between two stage-wise objects; `forward` points
/// from the left object to the right one.
#[derive(Debug, Clone)]
pub struct ZigzagArrow<S: Scalar> {
    pub forward: bool,
    pub maps: Vec<Morphism<S>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormalityError {
    #[error("object {object} has {stages} stages but {maps} structure maps")]
    StageCount {
        object: usize,
        stages: usize,
        maps: usize,
    },
    #[error("objects in the zigzag disagree on the number of stages")]
    StageMismatch,
    #[error("expected {expected} arrows for {objects} objects, got {found}")]
    ArrowCount {
        objects: usize,
        expected: usize,
        found: usize,
    },
    #[error("structure map of object {object} at stage {stage} is invalid: {source}")]
    BadStructureMap {
        object: usize,
        stage: usize,
        source: MorphismError,
    },
    #[error("arrow {arrow} at stage {stage} is not a CDGA morphism: {source}")]
    BadArrowMap {
        arrow: usize,
        stage: usize,
        source: MorphismError,
    },
    #[error("arrow {arrow} at stage {stage} is not a quasi-isomorphism: {source}")]
    NotQuasiIso {
        arrow: usize,
        stage: usize,
        source: QuasiIsoError,
    },
    #[error("arrow {arrow} fails naturality between stages {stage} and {next}", next = stage + 1)]
    NaturalitySquare { arrow: usize, stage: usize },
}

impl<S: Scalar> StagewisePersistenceCdga<S> {
    fn validate(&self, object: usize) -> Result<(), FormalityError> {
        if self.maps.len() + 1 != self.stages.len() {
            return Err(FormalityError::StageCount {
                object,
                stages: self.stages.len(),
                maps: self.maps.len(),
            });
        }
        for (s, map) in self.maps.iter().enumerate() {
            verify_morphism(map, &self.stages[s], &self.stages[s + 1]).map_err(|source| {
                FormalityError::BadStructureMap {
                    object,
                    stage: s,
                    source,
                }
            })?;
        }
        Ok(())
    }
}

/// Verify a zigzag certificate: `arrows[k]` connects `objects[k]` and
/// `objects[k+1]` in the direction of its `forward` flag. Every arrow must
/// be a stage-wise CDGA morphism, a stage-wise quasi-isomorphism through
/// degree `cap`, and natural with respect to the structure maps.
pub fn verify_h_formality_certificate<S: Scalar>(
    objects: &[StagewisePersistenceCdga<S>],
    arrows: &[ZigzagArrow<S>],
    cap: usize,
) -> Result<(), FormalityError> {
    if arrows.len() + 1 != objects.len() {
        return Err(FormalityError::ArrowCount {
            objects: objects.len(),
            expected: objects.len().saturating_sub(1),
            found: arrows.len(),
        });
    }
    for (k, object) in objects.iter().enumerate() {
        object.validate(k)?;
    }
    let n_stages = objects[0].stages.len();
    if objects.iter().any(|o| o.stages.len() != n_stages) {
        return Err(FormalityError::StageMismatch);
    }
    for (k, arrow) in arrows.iter().enumerate() {
        let (src, dst) = if arrow.forward {
            (&objects[k], &objects[k + 1])
        } else {
            (&objects[k + 1], &objects[k])
        };
        if arrow.maps.len() != n_stages {
            return Err(FormalityError::StageMismatch);
        }
        for s in 0..n_stages {
            verify_morphism(&arrow.maps[s], &src.stages[s], &dst.stages[s]).map_err(
                |source| FormalityError::BadArrowMap {
                    arrow: k,
                    stage: s,
                    source,
                },
            )?;
            verify_quasi_iso(&arrow.maps[s], &src.stages[s], &dst.stages[s], cap).map_err(
                |source| FormalityError::NotQuasiIso {
                    arrow: k,
                    stage: s,
                    source,
                },
            )?;
        }
        for s in 0..n_stages - 1 {
            let via_source = compose(&src.maps[s], &arrow.maps[s + 1], &dst.stages[s + 1]);
            let via_target = compose(&arrow.maps[s], &dst.maps[s], &dst.stages[s + 1]);
            if via_source.assignment != via_target.assignment {
                return Err(FormalityError::NaturalitySquare { arrow: k, stage: s });
            }
        }
    }
    Ok(())
}
