//! Shared reference models for the integration tests.
#![allow(dead_code)]

use cdga_core::{parse_element, parse_interval_element, FreeCdga, Homotopy, Morphism};
use field_linalg::Scalar;
use persistence_theta::{build_theta, PersistenceCdga};
use sullivan_models::RelativeSullivanModel;

/// Morphism given by named generator images (unnamed generators map to 0);
/// expressions are parsed in the target algebra.
pub fn morphism<S: Scalar>(
    source: &FreeCdga<S>,
    target: &FreeCdga<S>,
    images: &[(&str, &str)],
) -> Morphism<S> {
    let mut m = Morphism::trivial(source);
    for (name, expr) in images {
        let id = source.lookup(name).unwrap();
        m.assignment[id] = parse_element(target, expr).unwrap();
    }
    m
}

/// Homotopy on `algebra` given by named interval-valued images; unnamed
/// generators get the constant identity assignment.
pub fn homotopy<S: Scalar>(algebra: &FreeCdga<S>, images: &[(&str, &str)]) -> Homotopy<S> {
    let mut h = Homotopy::constant(&Morphism::identity(algebra));
    for (name, expr) in images {
        let id = algebra.lookup(name).unwrap();
        h.assignment[id] = parse_interval_element(algebra, expr).unwrap();
    }
    h
}

pub fn d<S: Scalar>(a: &mut FreeCdga<S>, name: &str, expr: &str) {
    let id = a.lookup(name).unwrap();
    let e = parse_element(a, expr).unwrap();
    a.set_differential(id, e).unwrap();
}

/// Base model of the 2-sphere: ∧(x₂, y₃), d(y) = x².
pub fn sphere2<S: Scalar>(a: &mut FreeCdga<S>) {
    a.add_generator("x", 2).unwrap();
    a.add_generator("y", 3).unwrap();
    d(a, "y", "x^2");
}

/// Filtered model of the trivial map S³ → S².
pub fn hopf_trivial<S: Scalar>() -> PersistenceCdga<S> {
    let mut a = FreeCdga::new(8);
    sphere2(&mut a);
    a.add_generator("xb", 1).unwrap();
    a.add_generator("yb", 2).unwrap();
    a.add_generator("yt", 3).unwrap();
    d(&mut a, "xb", "x");
    d(&mut a, "yb", "y - x*xb");
    build_theta(RelativeSullivanModel::new(a, 2)).unwrap()
}

/// Filtered model of the Hopf map S³ → S².
pub fn hopf_map<S: Scalar>() -> PersistenceCdga<S> {
    let mut a = FreeCdga::new(8);
    sphere2(&mut a);
    a.add_generator("xb", 1).unwrap();
    d(&mut a, "xb", "x");
    build_theta(RelativeSullivanModel::new(a, 2)).unwrap()
}

/// Filtered model of the inclusion S² ↪ ℂP²: base ∧(x₂, z₅) with
/// d(z) = x³, fiber v₃, w₄ with d(v) = x², d(w) = x·v − z.
pub fn cp2_inclusion<S: Scalar>() -> PersistenceCdga<S> {
    let mut a = FreeCdga::new(10);
    a.add_generator("x", 2).unwrap();
    a.add_generator("z", 5).unwrap();
    a.add_generator("v", 3).unwrap();
    a.add_generator("w", 4).unwrap();
    d(&mut a, "z", "x^3");
    d(&mut a, "v", "x^2");
    d(&mut a, "w", "x*v - z");
    build_theta(RelativeSullivanModel::new(a, 2)).unwrap()
}

/// Filtered model of the identity of S² (no fiber).
pub fn s2_identity<S: Scalar>() -> PersistenceCdga<S> {
    let mut a = FreeCdga::new(10);
    sphere2(&mut a);
    build_theta(RelativeSullivanModel::new(a, 2)).unwrap()
}

/// Common base of the connected-sum pair: ∧(x₁, x₂, y₁, y₂) with
/// d(y₁) = x₁² + x₂², d(y₂) = x₁x₂.
fn connected_sum_base<S: Scalar>(a: &mut FreeCdga<S>) {
    a.add_generator("x1", 2).unwrap();
    a.add_generator("x2", 2).unwrap();
    a.add_generator("y1", 3).unwrap();
    a.add_generator("y2", 3).unwrap();
    d(a, "y1", "x1^2 + x2^2");
    d(a, "y2", "x1*x2");
}

/// Filtered model of the first self-map of the connected sum.
pub fn connected_sum_f1<S: Scalar>() -> PersistenceCdga<S> {
    let mut a = FreeCdga::new(8);
    connected_sum_base(&mut a);
    a.add_generator("xb1", 1).unwrap();
    a.add_generator("xb2", 1).unwrap();
    a.add_generator("yb1", 2).unwrap();
    d(&mut a, "xb1", "x1");
    d(&mut a, "xb2", "x2");
    d(&mut a, "yb1", "y2 - x1*xb2");
    build_theta(RelativeSullivanModel::new(a, 4)).unwrap()
}

/// Filtered model of the second self-map of the connected sum.
pub fn connected_sum_f2<S: Scalar>() -> PersistenceCdga<S> {
    let mut a = FreeCdga::new(8);
    connected_sum_base(&mut a);
    a.add_generator("xb1", 1).unwrap();
    a.add_generator("xb2", 1).unwrap();
    a.add_generator("yb2", 2).unwrap();
    d(&mut a, "xb1", "x1");
    d(&mut a, "xb2", "x2");
    d(&mut a, "yb2", "y1 - x1*xb1 - x2*xb2");
    build_theta(RelativeSullivanModel::new(a, 4)).unwrap()
}

/// The Hopf-map filtered model's cohomology, presented as a filtered model:
/// the same algebra as the trivial-map model, with every fiber generator
/// placed at stage 1.
pub fn hopf_cohomology_model<S: Scalar>() -> PersistenceCdga<S> {
    let mut a = FreeCdga::new(8);
    sphere2(&mut a);
    a.add_generator("xb", 1).unwrap();
    a.add_generator("yb", 2).unwrap();
    a.add_generator("yt", 3).unwrap();
    d(&mut a, "xb", "x");
    d(&mut a, "yb", "y - x*xb");
    let mut model = RelativeSullivanModel::new(a, 2);
    for id in 2..5 {
        model.staging[id] = 1;
    }
    build_theta(model).unwrap()
}
