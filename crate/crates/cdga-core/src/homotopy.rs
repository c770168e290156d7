//! Algebra homotopies: CDGA maps H : A → B ⊗ ∧(t, dt) whose evaluations at
//! t = 0 and t = 1 recover two given algebra maps A → B.

use crate::algebra::{FreeCdga, Homogeneity};
use crate::interval::{idifferential, imul, IElement, IntervalError};
use crate::morphism::{apply_morphism, Morphism};
use field_linalg::Scalar;

/// One interval-valued image per source generator (indexed by generator id).
#[derive(Debug, Clone)]
pub struct Homotopy<S> {
    pub assignment: Vec<IElement<S>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomotopyError {
    #[error("homotopy assigns {given} values for {expected} generators")]
    WrongArity { expected: usize, given: usize },
    #[error("image of `{name}` is not homogeneous of degree {degree}")]
    DegreeMismatch { name: String, degree: usize },
    #[error("chain condition fails on `{name}`")]
    NotChainMap { name: String },
    #[error("endpoints of the homotopy do not match the two maps (first mismatch on `{name}`)")]
    EndpointMismatch { name: String },
    #[error(transparent)]
    Interval(#[from] IntervalError),
}

impl<S: Scalar> Homotopy<S> {
    /// The constant homotopy at a morphism.
    pub fn constant(morphism: &Morphism<S>) -> Self {
        Homotopy {
            assignment: morphism
                .assignment
                .iter()
                .map(IElement::from_element)
                .collect(),
        }
    }
}

/// Multiplicative extension of a homotopy to an arbitrary element.
pub fn apply_homotopy<S: Scalar>(
    homotopy: &Homotopy<S>,
    target: &FreeCdga<S>,
    e: &crate::algebra::Element<S>,
) -> Result<IElement<S>, IntervalError> {
    let mut total = IElement::zero();
    for (c, m) in &e.terms {
        let mut product = IElement::scalar(c.clone());
        for &(id, exp) in &m.factors {
            for _ in 0..exp {
                product = imul(target, &product, &homotopy.assignment[id])?;
            }
            if product.is_zero() {
                break;
            }
        }
        total = total.add(&product);
    }
    Ok(total)
}

/// Verify a homotopy between `from` and `to`: degree preservation, the chain
/// condition d∘H = H∘d on generators (under the target cap), and endpoint
/// agreement ev₀∘H, ev₁∘H = {from, to} in either order.
pub fn verify_homotopy<S: Scalar>(
    homotopy: &Homotopy<S>,
    source: &FreeCdga<S>,
    target: &FreeCdga<S>,
    from: &Morphism<S>,
    to: &Morphism<S>,
) -> Result<(), HomotopyError> {
    let n = source.generators().len();
    if homotopy.assignment.len() != n {
        return Err(HomotopyError::WrongArity {
            expected: n,
            given: homotopy.assignment.len(),
        });
    }
    for (id, gen) in source.generators().iter().enumerate() {
        let image = &homotopy.assignment[id];
        match crate::interval::idegree(target, image) {
            Homogeneity::Zero => {}
            Homogeneity::Degree(d) if d == gen.degree => {}
            _ => {
                return Err(HomotopyError::DegreeMismatch {
                    name: gen.name.clone(),
                    degree: gen.degree,
                })
            }
        }
        if gen.degree + 1 <= target.cap() {
            let lhs = idifferential(target, image)?;
            let rhs = apply_homotopy(homotopy, target, source.differential_of(id))?;
            if lhs.sub(&rhs) != IElement::zero() {
                return Err(HomotopyError::NotChainMap {
                    name: gen.name.clone(),
                });
            }
        }
    }
    // Endpoint agreement, allowing the two ends in either orientation.
    let matches = |at0: &Morphism<S>, at1: &Morphism<S>| -> Option<String> {
        for (id, gen) in source.generators().iter().enumerate() {
            let image = &homotopy.assignment[id];
            let e0 = image.eval_at_0();
            let e1 = image.eval_at_1();
            let want0 = apply_morphism(at0, target, &crate::algebra::Element::generator(id));
            let want1 = apply_morphism(at1, target, &crate::algebra::Element::generator(id));
            if e0 != want0 || e1 != want1 {
                return Some(gen.name.clone());
            }
        }
        None
    };
    let forward = matches(from, to);
    if forward.is_none() {
        return Ok(());
    }
    let backward = matches(to, from);
    if backward.is_none() {
        return Ok(());
    }
    Err(HomotopyError::EndpointMismatch {
        name: forward.unwrap(),
    })
}
