//! Tests on small reference models: cohomology dimensions, minimality,
//! indecomposables homology, quasi-isomorphism and isomorphism checks.

use cdga_core::{parse_element, Element, FreeCdga, Morphism};
use field_linalg::{Rational, Scalar};
use sullivan_models::{
    cohomology_full, linear_part_homology, verify_isomorphism_pair, verify_quasi_iso,
    RelativeSullivanModel,
};

/// The even-sphere model ∧(x, y), |x| = 2, |y| = 3, d(y) = x².
fn sphere2() -> FreeCdga<Rational> {
    let mut a = FreeCdga::<Rational>::new(10);
    a.add_generator("x", 2).unwrap();
    let y = a.add_generator("y", 3).unwrap();
    let dx2 = parse_element(&a, "x^2").unwrap();
    a.set_differential(y, dx2).unwrap();
    a.check_d_squared().unwrap();
    a
}

#[test]
fn cohomology_of_even_sphere() {
    let a = sphere2();
    let h = cohomology_full(&a, 6).unwrap();
    assert_eq!(h.dims(), vec![1, 0, 1, 0, 0, 0, 0]);
    // The degree-2 class is x and its square is a trivial class.
    let x = parse_element(&a, "x").unwrap();
    let coords = h.degree(2).class_coordinates(&x).unwrap();
    assert_eq!(coords.len(), 1);
    assert!(!coords[0].is_zero());
    let x2 = parse_element(&a, "x^2").unwrap();
    assert_eq!(h.degree(4).dim(), 0);
    assert_eq!(h.degree(4).class_coordinates(&x2).unwrap(), Vec::<Rational>::new());
}

#[test]
fn cohomology_of_path_model_stage() {
    // ∧(x, y, z): |z| = 1, d(z) = x, d(y) = x² — one surviving class x·z − y.
    let mut a = FreeCdga::<Rational>::new(10);
    let _x = a.add_generator("x", 2).unwrap();
    let y = a.add_generator("y", 3).unwrap();
    let z = a.add_generator("z", 1).unwrap();
    let dx2 = parse_element(&a, "x^2").unwrap();
    a.set_differential(y, dx2).unwrap();
    let dx = parse_element(&a, "x").unwrap();
    a.set_differential(z, dx).unwrap();
    a.check_d_squared().unwrap();
    let h = cohomology_full(&a, 6).unwrap();
    // H ≅ the exterior algebra on the class of x·z − y.
    assert_eq!(h.dims(), vec![1, 0, 0, 1, 0, 0, 0]);
    let class = parse_element(&a, "x*z - y").unwrap();
    let coords = h.degree(3).class_coordinates(&class).unwrap();
    assert!(coords.iter().any(|c| !c.is_zero()));
}

#[test]
fn cohomology_of_acyclic_path_model() {
    // Full path-model stage ∧(x, y, z, w), d(z) = x, d(y) = x², d(w) = xz − y.
    let mut a = FreeCdga::<Rational>::new(10);
    let _x = a.add_generator("x", 2).unwrap();
    let y = a.add_generator("y", 3).unwrap();
    let z = a.add_generator("z", 1).unwrap();
    let w = a.add_generator("w", 2).unwrap();
    let e = parse_element(&a, "x^2").unwrap();
    a.set_differential(y, e).unwrap();
    let e = parse_element(&a, "x").unwrap();
    a.set_differential(z, e).unwrap();
    let e = parse_element(&a, "x*z - y").unwrap();
    a.set_differential(w, e).unwrap();
    a.check_d_squared().unwrap();
    let h = cohomology_full(&a, 6).unwrap();
    assert_eq!(h.dims(), vec![1, 0, 0, 0, 0, 0, 0]);
}

/// The Hopf-map relative model: base ∧(x, y), fiber xb(1), yb(2), yt(3).
fn hopf_trivial_model() -> RelativeSullivanModel<Rational> {
    let mut a = FreeCdga::<Rational>::new(10);
    a.add_generator("x", 2).unwrap();
    let y = a.add_generator("y", 3).unwrap();
    let xb = a.add_generator("xb", 1).unwrap();
    let yb = a.add_generator("yb", 2).unwrap();
    let _yt = a.add_generator("yt", 3).unwrap();
    let e = parse_element(&a, "x^2").unwrap();
    a.set_differential(y, e).unwrap();
    let e = parse_element(&a, "x").unwrap();
    a.set_differential(xb, e).unwrap();
    let e = parse_element(&a, "y - x*xb").unwrap();
    a.set_differential(yb, e).unwrap();
    a.check_d_squared().unwrap();
    RelativeSullivanModel::new(a, 2)
}

#[test]
fn minimality_of_hopf_model() {
    let m = hopf_trivial_model();
    m.validate().unwrap();
    m.verify_minimality().unwrap();
}

#[test]
fn linear_fiber_term_is_rejected() {
    // d(w) = w' + x·z has an explicit linear fiber term w'.
    let mut a = FreeCdga::<Rational>::new(10);
    a.add_generator("x", 2).unwrap();
    let z = a.add_generator("z", 2).unwrap();
    let w = a.add_generator("w", 3).unwrap();
    let wp = a.add_generator("wp", 4).unwrap();
    let _ = (z, wp);
    let e = parse_element(&a, "wp + x*z").unwrap();
    a.set_differential(w, e).unwrap();
    let m = RelativeSullivanModel::new(a, 1);
    assert!(matches!(
        m.verify_minimality(),
        Err(sullivan_models::ModelError::LinearFiberTerm { .. })
    ));
}

#[test]
fn same_degree_dependency_cycle_is_rejected() {
    // d(u) = z·v, d(v) = z·u with |u| = |v|: no filtration can order them.
    let mut a = FreeCdga::<Rational>::new(12);
    a.add_generator("z", 1).unwrap();
    let u = a.add_generator("u", 3).unwrap();
    let v = a.add_generator("v", 3).unwrap();
    let e = parse_element(&a, "z*v").unwrap();
    a.set_differential(u, e).unwrap();
    let e = parse_element(&a, "z*u").unwrap();
    a.set_differential(v, e).unwrap();
    a.check_d_squared().unwrap();
    let m = RelativeSullivanModel::new(a, 1);
    assert!(matches!(
        m.verify_minimality(),
        Err(sullivan_models::ModelError::DependencyCycle { .. })
    ));
}

#[test]
fn linear_part_homology_of_hopf_model() {
    let m = hopf_trivial_model();
    let allowed = vec![true; 5];
    let h = linear_part_homology(&m, 5, &allowed);
    // d₁(xb) = x, d₁(yb) = y: everything cancels except yt in degree 3.
    assert_eq!(h.dims(), vec![0, 0, 0, 1, 0, 0]);
    let yt_pos = h
        .degree(3)
        .generator_ids
        .iter()
        .position(|&id| m.algebra.generator(id).name == "yt")
        .unwrap();
    assert!(!h.degree(3).representatives[0][yt_pos].is_zero());
}

#[test]
fn quasi_iso_of_projective_plane_comparison_map() {
    // Source: ∧(x, z, v, w), d(z) = x³, d(v) = x², d(w) = x·v − z.
    let mut src = FreeCdga::<Rational>::new(9);
    src.add_generator("x", 2).unwrap();
    let z = src.add_generator("z", 5).unwrap();
    let v = src.add_generator("v", 3).unwrap();
    let w = src.add_generator("w", 4).unwrap();
    let e = parse_element(&src, "x^3").unwrap();
    src.set_differential(z, e).unwrap();
    let e = parse_element(&src, "x^2").unwrap();
    src.set_differential(v, e).unwrap();
    let e = parse_element(&src, "x*v - z").unwrap();
    src.set_differential(w, e).unwrap();
    src.check_d_squared().unwrap();
    let tgt = sphere2();
    // η: x ↦ x, z ↦ x·y, v ↦ y, w ↦ 0.
    let eta = Morphism {
        assignment: vec![
            parse_element(&tgt, "x").unwrap(),
            parse_element(&tgt, "x*y").unwrap(),
            parse_element(&tgt, "y").unwrap(),
            Element::zero(),
        ],
    };
    cdga_core::verify_morphism(&eta, &src, &tgt).unwrap();
    verify_quasi_iso(&eta, &src, &tgt, 7).unwrap();
    // The zero map is not a quasi-isomorphism (fails in degree 2).
    let zero = Morphism::trivial(&tgt);
    let err = verify_quasi_iso(&zero, &tgt, &tgt, 4).unwrap_err();
    assert!(matches!(
        err,
        sullivan_models::QuasiIsoError::NotIsoInDegree { degree: 2, .. }
    ));
    // The identity is one.
    verify_quasi_iso(&Morphism::identity(&tgt), &tgt, &tgt, 6).unwrap();
}

#[test]
fn circle_bundle_models_are_isomorphic() {
    // ∧(u, y_k), d(y_k) = u²/k² for k = 2 and l = 3 (n = 1).
    let build = |k: i64| {
        let mut a = FreeCdga::<Rational>::new(10);
        a.add_generator("u", 2).unwrap();
        let y = a.add_generator("y", 3).unwrap();
        let d = parse_element(&a, "u^2").unwrap().scale(&Rational::from_ratio(1, k * k));
        a.set_differential(y, d).unwrap();
        a.check_d_squared().unwrap();
        a
    };
    let ak = build(2);
    let al = build(3);
    // f: u ↦ u, y_k ↦ (l²/k²)·y_l and its inverse.
    let f = Morphism {
        assignment: vec![
            parse_element(&al, "u").unwrap(),
            parse_element(&al, "y").unwrap().scale(&Rational::from_ratio(9, 4)),
        ],
    };
    let g = Morphism {
        assignment: vec![
            parse_element(&ak, "u").unwrap(),
            parse_element(&ak, "y").unwrap().scale(&Rational::from_ratio(4, 9)),
        ],
    };
    cdga_core::verify_morphism(&f, &ak, &al).unwrap();
    cdga_core::verify_morphism(&g, &al, &ak).unwrap();
    verify_isomorphism_pair(&f, &g, &ak, &al).unwrap();
    // A non-inverse pair is rejected.
    let bad = Morphism {
        assignment: vec![
            parse_element(&ak, "u").unwrap(),
            parse_element(&ak, "y").unwrap(),
        ],
    };
    assert!(verify_isomorphism_pair(&f, &bad, &ak, &al).is_err());
}

#[test]
fn functoriality_of_cohomology_matrices() {
    // H(g∘f) = H(g)·H(f) on the even-sphere identity and doubling maps.
    let a = sphere2();
    let h = cohomology_full(&a, 6).unwrap();
    let double = Morphism {
        assignment: vec![
            parse_element(&a, "2*x").unwrap(),
            parse_element(&a, "4*y").unwrap(),
        ],
    };
    cdga_core::verify_morphism(&double, &a, &a).unwrap();
    let composite = cdga_core::compose(&double, &double, &a);
    for n in 0..=6 {
        let m1 = sullivan_models::cohomology_matrix(&double, &a, &h, &h, n).unwrap();
        let mc = sullivan_models::cohomology_matrix(&composite, &a, &h, &h, n).unwrap();
        assert_eq!(mc.rank(), m1.matmul(&m1).rank());
        if n == 2 {
            assert_eq!(*mc.get(0, 0), Rational::from_integer(4));
        }
    }
}
