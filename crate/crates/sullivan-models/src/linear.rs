//! Homology of the indecomposables: the span of the generators with the
//! linearized differential (single-generator terms of d only).

use crate::cohomology::independent_modulo;
use crate::model::RelativeSullivanModel;
use field_linalg::{solve_in_span, Matrix, Scalar, SpanSolution};

/// Homology of the linear complex in one degree: a list of representative
/// vectors over the degree-n generator basis.
#[derive(Debug, Clone)]
pub struct LinearDegree<S: Scalar> {
    pub degree: usize,
    /// Generator ids of degree n in the allowed subset, in id order.
    pub generator_ids: Vec<usize>,
    pub representatives: Vec<Vec<S>>,
    boundary_vectors: Vec<Vec<S>>,
}

impl<S: Scalar> LinearDegree<S> {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Class coordinates of a cycle vector (over `generator_ids`) in the
    /// representative basis; `None` when the vector is not in the span of
    /// cycles (i.e. not closed, surfaced through span membership).
    pub fn class_coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        let mut span: Vec<Vec<S>> = self.boundary_vectors.clone();
        span.extend(self.representatives.iter().cloned());
        match solve_in_span(&span, v) {
            SpanSolution::Coordinates(coords) => {
                Some(coords[self.boundary_vectors.len()..].to_vec())
            }
            SpanSolution::NotInSpan => None,
        }
    }
}

/// Homology of (V ⊕ W, d₁) in degrees 0..=cap, restricted to the allowed
/// generator subset.
#[derive(Debug, Clone)]
pub struct LinearHomology<S: Scalar> {
    pub cap: usize,
    pub degrees: Vec<LinearDegree<S>>,
}

impl<S: Scalar> LinearHomology<S> {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim()).collect()
    }

    pub fn degree(&self, n: usize) -> &LinearDegree<S> {
        &self.degrees[n]
    }
}

/// Compute the linear-part homology of a model over an allowed generator
/// subset (the subset must be closed under d₁, which stage subsets are).
pub fn linear_part_homology<S: Scalar>(
    model: &RelativeSullivanModel<S>,
    cap: usize,
    allowed: &[bool],
) -> LinearHomology<S> {
    let gens = model.algebra.generators();
    let ids_of_degree = |n: usize| -> Vec<usize> {
        (0..gens.len())
            .filter(|&id| allowed.get(id).copied().unwrap_or(false) && gens[id].degree == n)
            .collect()
    };
    let mut degrees = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let ids = ids_of_degree(n);
        let next_ids = ids_of_degree(n + 1);
        let prev_ids = if n == 0 { Vec::new() } else { ids_of_degree(n - 1) };
        // d₁ from degree n to n+1.
        let d_columns: Vec<Vec<S>> = ids
            .iter()
            .map(|&id| {
                let mut v = vec![S::zero(); next_ids.len()];
                for (c, g) in model.linear_differential(id) {
                    if let Some(pos) = next_ids.iter().position(|&x| x == g) {
                        v[pos] = v[pos].add(&c);
                    }
                }
                v
            })
            .collect();
        let d_matrix = Matrix::from_columns(&d_columns, next_ids.len());
        let kernel = d_matrix.kernel_basis();
        // Boundaries: images of degree n−1 generators.
        let boundary_vectors: Vec<Vec<S>> = prev_ids
            .iter()
            .map(|&id| {
                let mut v = vec![S::zero(); ids.len()];
                for (c, g) in model.linear_differential(id) {
                    if let Some(pos) = ids.iter().position(|&x| x == g) {
                        v[pos] = v[pos].add(&c);
                    }
                }
                v
            })
            .filter(|v| v.iter().any(|c| !c.is_zero()))
            .collect();
        let chosen = independent_modulo(&boundary_vectors, &kernel, ids.len());
        let representatives = chosen.iter().map(|&i| kernel[i].clone()).collect();
        degrees.push(LinearDegree {
            degree: n,
            generator_ids: ids,
            representatives,
            boundary_vectors,
        });
    }
    LinearHomology { cap, degrees }
}
