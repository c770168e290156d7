//! Analysis of the space of graded-algebra maps between two cohomology
//! algebras, restricted to a single degree.
//!
//! The unknowns are the matrix entries of the map on degree-n classes. The
//! constraints are the necessary multiplicative conditions visible from that
//! degree: whenever a product of two degree-n classes vanishes in the source,
//! its image — a quadratic expression in the unknowns against the target's
//! product table — must vanish too. This is a sound subset of the full
//! morphism conditions, so `OnlyTrivial` conclusions are definitive while
//! witnesses only certify that the visible constraints are satisfiable.

use crate::solver::{find_witness, refute, Poly, System};
use cdga_core::FreeCdga;
use field_linalg::Scalar;
use sullivan_models::GradedCohomology;

/// Verdict about degree-n components of algebra maps source → target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapSpaceVerdict {
    /// Every algebra map vanishes on degree n (definitive).
    OnlyTrivial,
    /// Some assignment with a nonzero degree-n component satisfies all
    /// visible constraints.
    ExistsNonzeroWitness,
    /// The engine could not decide either way.
    Inconclusive,
}

const REFUTE_BUDGET: u64 = 200_000;
const WITNESS_BUDGET: u64 = 200_000;

/// Build the visible constraint system and classify the degree-n components
/// of algebra maps `H(source) → H(target)`.
pub fn algebra_map_space<S: Scalar>(
    source_alg: &FreeCdga<S>,
    source_h: &GradedCohomology<S>,
    target_alg: &FreeCdga<S>,
    target_h: &GradedCohomology<S>,
    n: usize,
) -> MapSpaceVerdict {
    let sdim = source_h.degree(n).dim();
    let tdim = target_h.degree(n).dim();
    if sdim == 0 || tdim == 0 {
        return MapSpaceVerdict::OnlyTrivial;
    }
    // Unknown u(i, j): the coefficient of target class j in the image of
    // source class i, both of degree n.
    let unknown = |i: usize, j: usize| i * tdim + j;
    let mut system: System<S> = System::new();
    let product_degree = 2 * n;
    if product_degree <= source_h.cap && product_degree <= target_h.cap {
        for i1 in 0..sdim {
            for i2 in 0..sdim {
                let Some(source_product) =
                    source_h.product_coordinates(source_alg, n, i1, n, i2)
                else {
                    continue;
                };
                if !source_product.iter().all(|c| c.is_zero()) {
                    continue;
                }
                // Image of the product must vanish coordinatewise:
                // Σ_{j,k} u(i1,j)·u(i2,k)·(class of t_j·t_k) = 0.
                let out_dim = target_h.degree(product_degree).dim();
                let mut coords = vec![Poly::zero(); out_dim];
                for j in 0..tdim {
                    for k in 0..tdim {
                        let Some(product) =
                            target_h.product_coordinates(target_alg, n, j, n, k)
                        else {
                            continue;
                        };
                        let factor =
                            Poly::var(unknown(i1, j)).mul(&Poly::var(unknown(i2, k)));
                        for (m, c) in product.iter().enumerate() {
                            coords[m] = coords[m].add(&factor.scale(c));
                        }
                    }
                }
                for coord in coords {
                    if !coord.is_zero() {
                        system.equations.push(coord);
                    }
                }
            }
        }
    }
    // OnlyTrivial iff every single unknown is forced to vanish.
    let all_forced = (0..sdim * tdim).all(|u| {
        let mut with_nonzero = system.clone();
        with_nonzero.nonzeros.push(Poly::var(u));
        refute(&with_nonzero, REFUTE_BUDGET)
    });
    if all_forced {
        return MapSpaceVerdict::OnlyTrivial;
    }
    for u in 0..sdim * tdim {
        let mut with_nonzero = system.clone();
        with_nonzero.nonzeros.push(Poly::var(u));
        if find_witness(&with_nonzero, WITNESS_BUDGET).is_some() {
            return MapSpaceVerdict::ExistsNonzeroWitness;
        }
    }
    MapSpaceVerdict::Inconclusive
}
