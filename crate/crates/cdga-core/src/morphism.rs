//! Algebra morphisms between free CDGAs: a value per source generator,
//! multiplicatively extended, with chain-map verification.

use crate::algebra::{AlgebraError, Element, FreeCdga, Homogeneity, RawTerm};
use field_linalg::Scalar;

/// A degree 0 algebra map determined by one target element per source
/// generator (indexed by generator id).
#[derive(Debug, Clone)]
pub struct Morphism<S: Scalar> {
    pub assignment: Vec<Element<S>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorphismError {
    #[error("morphism assigns {given} values for {expected} generators")]
    WrongArity { expected: usize, given: usize },
    #[error("image of `{name}` is not homogeneous of degree {degree}")]
    DegreeMismatch { name: String, degree: usize },
    #[error("chain condition fails on `{name}`: d(f({name})) - f(d({name})) = {residue}")]
    NotChainMap { name: String, residue: String },
    #[error("unknown generator name `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl<S: Scalar> Morphism<S> {
    /// The identity on an algebra.
    pub fn identity(algebra: &FreeCdga<S>) -> Self {
        Morphism {
            assignment: (0..algebra.generators().len())
                .map(Element::generator)
                .collect(),
        }
    }

    /// The zero-on-generators map (constant map onto the unit subalgebra).
    pub fn trivial(source: &FreeCdga<S>) -> Self {
        Morphism {
            assignment: vec![Element::zero(); source.generators().len()],
        }
    }
}

/// Multiplicative extension of a morphism to an arbitrary element.
pub fn apply_morphism<S: Scalar>(
    morphism: &Morphism<S>,
    target: &FreeCdga<S>,
    e: &Element<S>,
) -> Element<S> {
    let mut total = Element::zero();
    for (c, m) in &e.terms {
        let mut product = Element::scalar(c.clone());
        for &(id, exp) in &m.factors {
            let image_pow = target.pow(&morphism.assignment[id], exp);
            product = target.multiply(&product, &image_pow);
            if product.is_zero() {
                break;
            }
        }
        total = total.add(&product);
    }
    total
}

/// Check a morphism preserves degrees and commutes with the differentials,
/// on every generator whose check fits under the target cap.
pub fn verify_morphism<S: Scalar>(
    morphism: &Morphism<S>,
    source: &FreeCdga<S>,
    target: &FreeCdga<S>,
) -> Result<(), MorphismError> {
    let n = source.generators().len();
    if morphism.assignment.len() != n {
        return Err(MorphismError::WrongArity {
            expected: n,
            given: morphism.assignment.len(),
        });
    }
    for (id, gen) in source.generators().iter().enumerate() {
        let image = &morphism.assignment[id];
        match target.degree_of(image) {
            Homogeneity::Zero => {}
            Homogeneity::Degree(d) if d == gen.degree => {}
            _ => {
                return Err(MorphismError::DegreeMismatch {
                    name: gen.name.clone(),
                    degree: gen.degree,
                })
            }
        }
        if gen.degree + 1 > target.cap() {
            continue;
        }
        let lhs = target.apply_differential(image);
        let rhs = apply_morphism(morphism, target, source.differential_of(id));
        let residue = lhs.sub(&rhs);
        if !residue.is_zero() {
            return Err(MorphismError::NotChainMap {
                name: gen.name.clone(),
                residue: target.format_element(&residue),
            });
        }
    }
    Ok(())
}

/// Composite `second ∘ first` (apply `first`, then `second`).
pub fn compose<S: Scalar>(
    first: &Morphism<S>,
    second: &Morphism<S>,
    target_of_second: &FreeCdga<S>,
) -> Morphism<S> {
    Morphism {
        assignment: first
            .assignment
            .iter()
            .map(|e| apply_morphism(second, target_of_second, e))
            .collect(),
    }
}

/// Build a morphism from name-keyed generator images, defaulting unnamed
/// generators to zero.
pub fn morphism_from_named<S: Scalar>(
    source: &FreeCdga<S>,
    images: &[(String, Element<S>)],
) -> Result<Morphism<S>, MorphismError> {
    let mut assignment = vec![Element::zero(); source.generators().len()];
    for (name, value) in images {
        let id = source
            .lookup(name)
            .ok_or_else(|| MorphismError::UnknownName(name.clone()))?;
        assignment[id] = value.clone();
    }
    Ok(Morphism { assignment })
}

/// Convenience: parse-free construction of an element from raw factor data.
pub fn element_from_raw<S: Scalar>(
    algebra: &FreeCdga<S>,
    raw: Vec<RawTerm<S>>,
) -> Result<Element<S>, AlgebraError> {
    algebra.normalize(raw)
}
