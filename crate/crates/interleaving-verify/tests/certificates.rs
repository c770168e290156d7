mod common;

use common::*;
use field_linalg::{GaussianRational, Rational};
use interleaving_verify::{verify_certificate, CertificateError, InterleavingCertificate};

#[test]
fn hopf_certificate_at_three_verifies() {
    let f = hopf_trivial::<Rational>();
    let g = hopf_map::<Rational>();
    let fa = &f.model.algebra;
    let ga = &g.model.algebra;
    let cert = InterleavingCertificate {
        eps_halves: 6,
        phi: morphism(fa, ga, &[
            ("x", "x"),
            ("xb", "xb"),
            ("y", "x*xb"),
            ("yt", "y - x*xb"),
        ]),
        psi: morphism(ga, fa, &[("y", "yt")]),
        homotopy_f: homotopy(fa, &[
            ("x", "x*t - xb*dt"),
            ("xb", "xb*t"),
            ("y", "y*t^2 + 2*yb*t*dt"),
            ("yb", "yb*t^2"),
        ]),
        homotopy_g: homotopy(ga, &[
            ("x", "x*t - xb*dt"),
            ("xb", "xb*t"),
            ("y", "y - x*xb*(1 - t^2)"),
        ]),
    };
    verify_certificate(&cert, &f, &g).unwrap();
}

#[test]
fn hopf_certificate_fails_below_three() {
    let f = hopf_trivial::<Rational>();
    let g = hopf_map::<Rational>();
    let fa = &f.model.algebra;
    let ga = &g.model.algebra;
    // Same data, claimed at ε = 2: ψ(y) = yt lands at stage 3 > 0 + 2.
    let cert = InterleavingCertificate {
        eps_halves: 4,
        phi: morphism(fa, ga, &[
            ("x", "x"),
            ("xb", "xb"),
            ("y", "x*xb"),
            ("yt", "y - x*xb"),
        ]),
        psi: morphism(ga, fa, &[("y", "yt")]),
        homotopy_f: homotopy(fa, &[
            ("x", "x*t - xb*dt"),
            ("xb", "xb*t"),
            ("y", "y*t^2 + 2*yb*t*dt"),
            ("yb", "yb*t^2"),
        ]),
        homotopy_g: homotopy(ga, &[
            ("x", "x*t - xb*dt"),
            ("xb", "xb*t"),
            ("y", "y - x*xb*(1 - t^2)"),
        ]),
    };
    match verify_certificate(&cert, &f, &g) {
        Err(CertificateError::StageShift { map: "psi", name, .. }) => assert_eq!(name, "y"),
        other => panic!("expected a psi stage-shift failure, got {other:?}"),
    }
}

#[test]
fn hopf_certificate_with_broken_morphism_is_rejected() {
    let f = hopf_trivial::<Rational>();
    let g = hopf_map::<Rational>();
    let fa = &f.model.algebra;
    let ga = &g.model.algebra;
    // φ(y) = 0 breaks the chain condition d(φ(y)) = φ(x²).
    let cert = InterleavingCertificate {
        eps_halves: 6,
        phi: morphism(fa, ga, &[("x", "x"), ("xb", "xb"), ("yt", "y - x*xb")]),
        psi: morphism(ga, fa, &[("y", "yt")]),
        homotopy_f: homotopy(fa, &[]),
        homotopy_g: homotopy(ga, &[]),
    };
    assert!(matches!(
        verify_certificate(&cert, &f, &g),
        Err(CertificateError::PhiInvalid(_))
    ));
}

#[test]
fn hopf_certificate_with_broken_homotopy_is_rejected() {
    let f = hopf_trivial::<Rational>();
    let g = hopf_map::<Rational>();
    let fa = &f.model.algebra;
    let ga = &g.model.algebra;
    // Dropping the dt-term of H_F(y) breaks the chain condition.
    let cert = InterleavingCertificate {
        eps_halves: 6,
        phi: morphism(fa, ga, &[
            ("x", "x"),
            ("xb", "xb"),
            ("y", "x*xb"),
            ("yt", "y - x*xb"),
        ]),
        psi: morphism(ga, fa, &[("y", "yt")]),
        homotopy_f: homotopy(fa, &[
            ("x", "x*t - xb*dt"),
            ("xb", "xb*t"),
            ("y", "y*t^2"),
            ("yb", "yb*t^2"),
        ]),
        homotopy_g: homotopy(ga, &[
            ("x", "x*t - xb*dt"),
            ("xb", "xb*t"),
            ("y", "y - x*xb*(1 - t^2)"),
        ]),
    };
    assert!(matches!(
        verify_certificate(&cert, &f, &g),
        Err(CertificateError::HomotopyFInvalid(_))
    ));
}

fn cp2_certificate(eps_halves: u32) -> InterleavingCertificate<Rational> {
    let f = cp2_inclusion::<Rational>();
    let g = s2_identity::<Rational>();
    let fa = &f.model.algebra;
    let ga = &g.model.algebra;
    InterleavingCertificate {
        eps_halves,
        phi: morphism(fa, ga, &[("x", "x"), ("z", "x*y"), ("v", "y")]),
        psi: morphism(ga, fa, &[("x", "x"), ("y", "v")]),
        homotopy_f: homotopy(fa, &[
            ("z", "z*t + x*v*(1 - t) - w*dt"),
            ("w", "w*t"),
        ]),
        homotopy_g: homotopy(ga, &[]),
    }
}

#[test]
fn cp2_certificate_at_three_verifies() {
    let f = cp2_inclusion::<Rational>();
    let g = s2_identity::<Rational>();
    verify_certificate(&cp2_certificate(6), &f, &g).unwrap();
}

#[test]
fn cp2_certificate_fails_below_three() {
    let f = cp2_inclusion::<Rational>();
    let g = s2_identity::<Rational>();
    // At ε = 2 the map ψ(y) = v lands at stage 3 > 0 + 2.
    match verify_certificate(&cp2_certificate(4), &f, &g) {
        Err(CertificateError::StageShift { map: "psi", name, .. }) => assert_eq!(name, "y"),
        other => panic!("expected a psi stage-shift failure, got {other:?}"),
    }
}

#[test]
fn connected_sum_isomorphism_certificate_over_gaussian_rationals() {
    let f = connected_sum_f1::<GaussianRational>();
    let g = connected_sum_f2::<GaussianRational>();
    let fa = &f.model.algebra;
    let ga = &g.model.algebra;
    let phi = morphism(fa, ga, &[
        ("x1", "x1 + i*x2"),
        ("x2", "i*x1 + x2"),
        ("y1", "4*i*y2"),
        ("y2", "i*y1"),
        ("xb1", "xb1 + i*xb2"),
        ("xb2", "i*xb1 + xb2"),
        ("yb1", "i*yb2 - xb1*xb2"),
    ]);
    let psi = morphism(ga, fa, &[
        ("x1", "1/2*x1 - 1/2*i*x2"),
        ("x2", "1/2*x2 - 1/2*i*x1"),
        ("y1", "0 - i*y2"),
        ("y2", "0 - 1/4*i*y1"),
        ("xb1", "1/2*xb1 - 1/2*i*xb2"),
        ("xb2", "1/2*xb2 - 1/2*i*xb1"),
        ("yb2", "0 - i*yb1 - 1/2*i*xb1*xb2"),
    ]);
    let cert = InterleavingCertificate {
        eps_halves: 0,
        phi,
        psi,
        homotopy_f: homotopy(fa, &[]),
        homotopy_g: homotopy(ga, &[]),
    };
    verify_certificate(&cert, &f, &g).unwrap();
}
