//! Graded cohomology of a free CDGA (optionally restricted to a generator
//! subset whose span is a subcomplex), with a coordinate solver and products.

use cdga_core::{Element, FreeCdga, Monomial};
use field_linalg::{solve_in_span, Matrix, Scalar, SpanSolution};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("cohomology through degree {want} needs algebra cap >= {need}, got {have}")]
    CapTooSmall { want: usize, need: usize, have: usize },
}

/// Cohomology in one degree.
#[derive(Debug, Clone)]
pub struct DegreeCohomology<S: Scalar> {
    pub degree: usize,
    /// Monomial basis of the degree-n part of the (restricted) algebra.
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Chosen cocycle representatives forming a basis of H^n.
    pub representatives: Vec<Element<S>>,
    rep_vectors: Vec<Vec<S>>,
    /// A spanning set of the coboundary space im d^{n−1}.
    coboundary_vectors: Vec<Vec<S>>,
}

impl<S: Scalar> DegreeCohomology<S> {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of an element in the monomial basis; `None` when the
    /// element uses monomials outside the restricted algebra.
    pub fn element_vector(&self, e: &Element<S>) -> Option<Vec<S>> {
        let mut v = vec![S::zero(); self.monomials.len()];
        for (c, m) in &e.terms {
            let idx = self.index.get(m)?;
            v[*idx] = c.clone();
        }
        Some(v)
    }

    /// Coordinates of a cocycle's class in the representative basis;
    /// `None` when the element is not a cocycle of this degree (or lies
    /// outside the restricted algebra).
    pub fn class_coordinates(&self, e: &Element<S>) -> Option<Vec<S>> {
        let target = self.element_vector(e)?;
        let mut span: Vec<Vec<S>> = self.coboundary_vectors.clone();
        span.extend(self.rep_vectors.iter().cloned());
        match solve_in_span(&span, &target) {
            SpanSolution::Coordinates(coords) => {
                Some(coords[self.coboundary_vectors.len()..].to_vec())
            }
            SpanSolution::NotInSpan => None,
        }
    }

    /// True when the element's class is zero.
    pub fn is_trivial_class(&self, e: &Element<S>) -> Option<bool> {
        let coords = self.class_coordinates(e)?;
        Some(coords.iter().all(|c| c.is_zero()))
    }
}

/// Cohomology in all degrees 0..=cap.
#[derive(Debug, Clone)]
pub struct GradedCohomology<S: Scalar> {
    pub cap: usize,
    pub degrees: Vec<DegreeCohomology<S>>,
}

impl<S: Scalar> GradedCohomology<S> {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim()).collect()
    }

    pub fn degree(&self, n: usize) -> &DegreeCohomology<S> {
        &self.degrees[n]
    }

    /// Product of two basis classes, as coordinates in degree n1 + n2.
    /// `None` when the product degree exceeds the cap.
    pub fn product_coordinates(
        &self,
        algebra: &FreeCdga<S>,
        n1: usize,
        i: usize,
        n2: usize,
        j: usize,
    ) -> Option<Vec<S>> {
        let n = n1 + n2;
        if n > self.cap {
            return None;
        }
        let product = algebra.multiply(
            &self.degrees[n1].representatives[i],
            &self.degrees[n2].representatives[j],
        );
        self.degrees[n].class_coordinates(&product)
    }
}

/// Indices of `candidates` forming a basis of span(candidates) modulo
/// span(sub), inside an ambient space of the given dimension.
pub fn independent_modulo<S: Scalar>(
    sub: &[Vec<S>],
    candidates: &[Vec<S>],
    ambient_dim: usize,
) -> Vec<usize> {
    let mut columns: Vec<Vec<S>> = sub.to_vec();
    columns.extend(candidates.iter().cloned());
    let matrix = Matrix::from_columns(&columns, ambient_dim);
    matrix
        .rref()
        .pivot_columns
        .iter()
        .filter_map(|&c| c.checked_sub(sub.len()))
        .collect()
}

/// Compute H^0..H^cap of the subalgebra of `algebra` generated by the
/// allowed generators (whose span must be closed under d). Requires the
/// algebra cap to reach cap + 1 so every kernel computation is complete.
pub fn cohomology<S: Scalar>(
    algebra: &FreeCdga<S>,
    cap: usize,
    allowed: &[bool],
) -> Result<GradedCohomology<S>, CohomologyError> {
    if cap + 1 > algebra.cap() {
        return Err(CohomologyError::CapTooSmall {
            want: cap,
            need: cap + 1,
            have: algebra.cap(),
        });
    }
    // Monomial bases for degrees 0..=cap+1.
    let bases: Vec<Vec<Monomial>> = (0..=cap + 1)
        .map(|n| algebra.monomials_of_degree(n, allowed))
        .collect();
    let indexes: Vec<HashMap<Monomial, usize>> = bases
        .iter()
        .map(|b| {
            b.iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect()
        })
        .collect();
    let to_vector = |e: &Element<S>, n: usize| -> Vec<S> {
        let mut v = vec![S::zero(); bases[n].len()];
        for (c, m) in &e.terms {
            let idx = indexes[n]
                .get(m)
                .expect("differential left the restricted subalgebra");
            v[*idx] = c.clone();
        }
        v
    };
    let mut degrees = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        // d^n as a matrix (rows: degree n+1 monomials, cols: degree n).
        let d_columns: Vec<Vec<S>> = bases[n]
            .iter()
            .map(|m| {
                let e = Element::monomial(S::one(), m.clone());
                to_vector(&algebra.apply_differential(&e), n + 1)
            })
            .collect();
        let d_matrix = Matrix::from_columns(&d_columns, bases[n + 1].len());
        let kernel = d_matrix.kernel_basis();
        // Coboundaries: images of the degree n−1 monomials.
        let coboundary_vectors: Vec<Vec<S>> = if n == 0 {
            Vec::new()
        } else {
            bases[n - 1]
                .iter()
                .map(|m| {
                    let e = Element::monomial(S::one(), m.clone());
                    to_vector(&algebra.apply_differential(&e), n)
                })
                .filter(|v| v.iter().any(|c| !c.is_zero()))
                .collect()
        };
        let chosen = independent_modulo(&coboundary_vectors, &kernel, bases[n].len());
        let rep_vectors: Vec<Vec<S>> = chosen.iter().map(|&i| kernel[i].clone()).collect();
        let representatives: Vec<Element<S>> = rep_vectors
            .iter()
            .map(|v| {
                let mut e = Element::zero();
                for (c, m) in v.iter().zip(&bases[n]) {
                    e = e.add(&Element::monomial(c.clone(), m.clone()));
                }
                e
            })
            .collect();
        degrees.push(DegreeCohomology {
            degree: n,
            monomials: bases[n].clone(),
            index: indexes[n].clone(),
            representatives,
            rep_vectors,
            coboundary_vectors,
        });
    }
    Ok(GradedCohomology { cap, degrees })
}

/// Cohomology of the full algebra.
pub fn cohomology_full<S: Scalar>(
    algebra: &FreeCdga<S>,
    cap: usize,
) -> Result<GradedCohomology<S>, CohomologyError> {
    let allowed = vec![true; algebra.generators().len()];
    cohomology(algebra, cap, &allowed)
}
