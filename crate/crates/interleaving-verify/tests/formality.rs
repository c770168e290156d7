mod common;

use cdga_core::{FreeCdga, Morphism};
use common::d;
use field_linalg::Rational;
use interleaving_verify::{
    verify_h_formality_certificate, FormalityError, StagewisePersistenceCdga, ZigzagArrow,
};

fn free_odd() -> FreeCdga<Rational> {
    let mut a = FreeCdga::new(6);
    a.add_generator("u", 3).unwrap();
    a
}

fn contractible() -> FreeCdga<Rational> {
    let mut a = free_odd();
    a.add_generator("v", 2).unwrap();
    d(&mut a, "v", "u");
    a
}

fn unit_algebra() -> FreeCdga<Rational> {
    FreeCdga::new(6)
}

/// The filtered model of the path fibration over S³ restricted to its first
/// three stages: ∧(u), ∧(u), ∧(u, v) with d(v) = u.
fn path_fibration_object() -> StagewisePersistenceCdga<Rational> {
    let s0 = free_odd();
    let s1 = free_odd();
    let s2 = contractible();
    let include = Morphism::identity(&s0);
    StagewisePersistenceCdga {
        maps: vec![include.clone(), include],
        stages: vec![s0, s1, s2],
    }
}

/// Its stage-wise cohomology: ∧(u) with zero differential twice, then the
/// unit algebra, with the zero map in between.
fn cohomology_object() -> StagewisePersistenceCdga<Rational> {
    let s0 = free_odd();
    let s1 = free_odd();
    let s2 = unit_algebra();
    StagewisePersistenceCdga {
        maps: vec![Morphism::identity(&s0), Morphism::trivial(&s1)],
        stages: vec![s0, s1, s2],
    }
}

#[test]
fn identity_zigzag_on_a_zero_differential_object_verifies() {
    let x = cohomology_object();
    let arrow = ZigzagArrow {
        forward: true,
        maps: x.stages.iter().map(Morphism::identity).collect(),
    };
    verify_h_formality_certificate(&[x.clone(), x], &[arrow], 4).unwrap();
}

#[test]
fn path_fibration_zigzag_to_its_cohomology_verifies() {
    let f = path_fibration_object();
    let h = cohomology_object();
    let arrow = ZigzagArrow {
        forward: true,
        maps: vec![
            Morphism::identity(&f.stages[0]),
            Morphism::identity(&f.stages[1]),
            Morphism::trivial(&f.stages[2]),
        ],
    };
    verify_h_formality_certificate(&[f, h], &[arrow], 4).unwrap();
}

#[test]
fn zigzag_with_a_non_quasi_iso_stage_is_rejected() {
    let f = path_fibration_object();
    let h = cohomology_object();
    // The zero map ∧(u) → ∧(u) at stage 0 is not a quasi-isomorphism.
    let arrow = ZigzagArrow {
        forward: true,
        maps: vec![
            Morphism::trivial(&f.stages[0]),
            Morphism::identity(&f.stages[1]),
            Morphism::trivial(&f.stages[2]),
        ],
    };
    match verify_h_formality_certificate(&[f, h], &[arrow], 4) {
        Err(FormalityError::NotQuasiIso { arrow: 0, stage: 0, .. }) => {}
        other => panic!("expected a quasi-isomorphism failure at stage 0, got {other:?}"),
    }
}
