//! Relative Sullivan models: a free CDGA split into a base subalgebra and a
//! staged set of fiber generators, with minimality validation.

use cdga_core::{Element, FreeCdga, Monomial};
use field_linalg::Scalar;

/// A relative Sullivan model. Generators with ids `0..base_count` form the
/// base; the rest are fiber generators. Each generator carries a stage:
/// 0 for base generators, and by default the degree for fiber generators
/// (explicit overrides are allowed for pre-staged models).
#[derive(Debug, Clone)]
pub struct RelativeSullivanModel<S: Scalar> {
    pub algebra: FreeCdga<S>,
    pub base_count: usize,
    pub staging: Vec<u32>,
    /// Set when the fiber was cut off at a finite stage of an infinite
    /// model; all distance reports downstream degrade to bounds.
    pub truncated_at: Option<u32>,
}

/// Ways a model can fail validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("d(d(gen)) != 0: {0}")]
    NotADifferential(String),
    #[error("base generator `{name}` has fiber content in its differential")]
    BaseNotClosed { name: String },
    #[error("minimality violated: d({name}) has the linear fiber term `{term}`")]
    LinearFiberTerm { name: String, term: String },
    #[error("minimality violated: same-degree dependency cycle through `{name}`")]
    DependencyCycle { name: String },
    #[error("d({name}) involves stage-{found} generators but `{name}` has stage {stage}")]
    StageEscape { name: String, stage: u32, found: u32 },
}

impl<S: Scalar> RelativeSullivanModel<S> {
    /// Build a model with the default staging (fiber stage = degree).
    pub fn new(algebra: FreeCdga<S>, base_count: usize) -> Self {
        let staging = algebra
            .generators()
            .iter()
            .enumerate()
            .map(|(id, g)| if id < base_count { 0 } else { g.degree as u32 })
            .collect();
        RelativeSullivanModel {
            algebra,
            base_count,
            staging,
            truncated_at: None,
        }
    }

    pub fn is_base(&self, id: usize) -> bool {
        id < self.base_count
    }

    pub fn fiber_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.base_count..self.algebra.generators().len()
    }

    /// Largest fiber stage (0 when the fiber is empty).
    pub fn stabilization_index(&self) -> u32 {
        self.staging.iter().copied().max().unwrap_or(0)
    }

    /// Generators available at an integer stage: the base plus fiber
    /// generators of stage ≤ s.
    pub fn allowed_at_stage(&self, s: u32) -> Vec<bool> {
        self.staging.iter().map(|&st| st <= s).collect()
    }

    /// Check d² = 0, base closure, and stage closure (each generator's
    /// differential stays within its own stage).
    pub fn validate(&self) -> Result<(), ModelError> {
        self.algebra
            .check_d_squared()
            .map_err(|e| ModelError::NotADifferential(e.to_string()))?;
        for id in 0..self.base_count {
            let d = self.algebra.differential_of(id);
            for (_, m) in &d.terms {
                if m.support().any(|g| g >= self.base_count) {
                    return Err(ModelError::BaseNotClosed {
                        name: self.algebra.generator(id).name.clone(),
                    });
                }
            }
        }
        for id in self.fiber_ids() {
            let d = self.algebra.differential_of(id);
            let found = self.algebra.stage_support(d, &self.staging);
            if found > self.staging[id] {
                return Err(ModelError::StageEscape {
                    name: self.algebra.generator(id).name.clone(),
                    stage: self.staging[id],
                    found,
                });
            }
        }
        Ok(())
    }

    /// Minimality: no fiber generator's differential has a linear fiber
    /// term, and the same-degree dependency relation on fiber generators is
    /// acyclic (certifying the existence of a stage filtration).
    pub fn verify_minimality(&self) -> Result<(), ModelError> {
        for id in self.fiber_ids() {
            let d = self.algebra.differential_of(id);
            for (_, m) in &d.terms {
                if let [(g, 1)] = m.factors[..] {
                    if g >= self.base_count {
                        return Err(ModelError::LinearFiberTerm {
                            name: self.algebra.generator(id).name.clone(),
                            term: self.algebra.generator(g).name.clone(),
                        });
                    }
                }
            }
        }
        // Same-degree dependency: w -> w' when w' (of equal degree) occurs
        // in a monomial of d(w). A cycle forbids any filtration.
        let n = self.algebra.generators().len();
        let mut edges: Vec<Vec<usize>> = vec![Vec::new(); n];
        for id in self.fiber_ids() {
            let degree = self.algebra.generator(id).degree;
            let d = self.algebra.differential_of(id);
            for (_, m) in &d.terms {
                for g in m.support() {
                    if g >= self.base_count && self.algebra.generator(g).degree == degree {
                        edges[id].push(g);
                    }
                }
            }
        }
        // Depth-first cycle detection.
        let mut state = vec![0u8; n]; // 0 unseen, 1 on stack, 2 done
        for start in self.fiber_ids() {
            if state[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            state[start] = 1;
            while let Some(&mut (node, ref mut next)) = stack.last_mut() {
                if *next < edges[node].len() {
                    let child = edges[node][*next];
                    *next += 1;
                    match state[child] {
                        0 => {
                            state[child] = 1;
                            stack.push((child, 0));
                        }
                        1 => {
                            return Err(ModelError::DependencyCycle {
                                name: self.algebra.generator(child).name.clone(),
                            })
                        }
                        _ => {}
                    }
                } else {
                    state[node] = 2;
                    stack.pop();
                }
            }
        }
        Ok(())
    }

    /// Linear part of the differential: d₁(g) keeps only the single-
    /// generator terms of d(g).
    pub fn linear_differential(&self, id: usize) -> Vec<(S, usize)> {
        let d = self.algebra.differential_of(id);
        let mut out = Vec::new();
        for (c, m) in &d.terms {
            if let [(g, 1)] = m.factors[..] {
                out.push((c.clone(), g));
            }
        }
        out
    }
}

/// Helper shared by model input code: a monomial that is a single generator.
pub fn single_generator(m: &Monomial) -> Option<usize> {
    match m.factors[..] {
        [(g, 1)] => Some(g),
        _ => None,
    }
}

/// Convenience for building elements of the model's algebra from text.
pub fn parse_in<S: Scalar>(
    model: &RelativeSullivanModel<S>,
    text: &str,
) -> Result<Element<S>, cdga_core::ExprError> {
    cdga_core::parse_element(&model.algebra, text)
}
