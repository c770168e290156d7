//! Acceptance suite: one check per headline result, printed as a pass/fail
//! line each. Every value here is recomputed from the bundled corpus files.

use distances::{bottleneck, bottleneck_brute_force, d_cohi_module, HalfValue, Interval};
use field_linalg::{GaussianRational, Rational, Scalar};
use interleaving_verify::{obstruct, verify_certificate, Mechanism, ObstructionVerdict};
use model_corpus::corpus::{files, s1_bundle_iso_cert_text, s1_bundle_trivial_cert_text};
use model_corpus::{
    check_pair, field_of, model_files, model_text, pair, parse_certificate, parse_model,
    FieldChoice, Pair,
};
use persistence_theta::{barcode, build_theta, persistence_cohomology};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn load_pair<S: Scalar>(a: &str, b: &str) -> Result<Pair<S>, String> {
    pair(
        parse_model::<S>(model_text(a).unwrap()).map_err(|e| e.to_string())?,
        parse_model::<S>(model_text(b).unwrap()).map_err(|e| e.to_string())?,
    )
}

/// Load a pair, verify its certificate, and cross-check the obstruction
/// scan against it.
fn certified_pair<S: Scalar>(
    a: &str,
    b: &str,
    cert_text: &str,
    eps_max: u32,
) -> Result<(Pair<S>, u32), String> {
    let p = load_pair::<S>(a, b)?;
    let cert =
        parse_certificate::<S>(cert_text, &p.f.model, &p.g.model).map_err(|e| e.to_string())?;
    verify_certificate(&cert, &p.f, &p.g).map_err(|e| e.to_string())?;
    let eps = cert.eps_halves;
    check_pair(&p, eps_max, Some(eps))?;
    Ok((p, eps))
}

fn expect(cond: bool, message: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message.to_string())
    }
}

// -- 1 ----------------------------------------------------------------------

fn criterion_1_hopf() -> Result<String, String> {
    let (p, eps) = certified_pair::<Rational>("hopf_trivial", "hopf_map", files::HOPF_CERT, 8)?;
    expect(eps == 6, "certificate should be at epsilon = 3")?;
    let module = d_cohi_module(&p.f, &p.g, p.cap).map_err(|e| e.to_string())?;
    expect(
        module.value == HalfValue::from_integer(2),
        &format!("module level: expected 2, got {}", module.value),
    )?;
    let scan = check_pair(&p, 8, Some(6))?;
    expect(
        scan.bound == HalfValue::from_integer(3),
        &format!("lower bound: expected 3, got {}", scan.bound),
    )?;
    Ok("module level = 2, full distance = 3".to_string())
}

// -- 2 ----------------------------------------------------------------------

fn criterion_2_cp2() -> Result<String, String> {
    expect(
        files::CP2_CERT.contains("A.z = A.z*t + A.x*A.v*(1 - t) - A.w*dt"),
        "certificate should carry the explicit homotopy on z",
    )?;
    let (p, _) = certified_pair::<Rational>("cp2_inclusion", "s2_identity", files::CP2_CERT, 8)?;
    for h in [4u32, 5] {
        let verdict = obstruct(&p.f, &p.g, h, p.cap).map_err(|e| e.to_string())?;
        let fired = matches!(
            &verdict,
            ObstructionVerdict::Obstructed(ws)
                if ws.iter().any(|w| w.mechanism == Mechanism::NilpotentFactor)
        );
        expect(fired, &format!("NilpotentFactor should fire at {} half-units", h))?;
    }
    let scan = check_pair(&p, 8, Some(6))?;
    expect(
        scan.bound == HalfValue::from_integer(3),
        &format!("lower bound: expected 3, got {}", scan.bound),
    )?;
    Ok("certificate at 3 verified (homotopy included); NilpotentFactor on [2, 3); distance = 3"
        .to_string())
}

// -- 3 ----------------------------------------------------------------------

fn criterion_3_spheres() -> Result<String, String> {
    let (p, _) = certified_pair::<Rational>(
        "even_sphere_trivial_1",
        "s2_identity",
        files::EVEN_SPHERE_1_CERT,
        8,
    )?;
    let even = check_pair(&p, 8, Some(6))?;
    expect(
        even.bound == HalfValue::from_integer(3),
        &format!("even case: expected 3, got {}", even.bound),
    )?;
    let (q, _) = certified_pair::<Rational>(
        "odd_sphere_trivial_1",
        "s3_identity",
        files::ODD_SPHERE_1_CERT,
        8,
    )?;
    let odd = check_pair(&q, 8, Some(6))?;
    expect(
        odd.bound == HalfValue::from_integer(3),
        &format!("odd case: expected 3, got {}", odd.bound),
    )?;
    Ok("even sphere: 4n - 1 = 3; odd sphere: 2n + 1 = 3 (n = 1)".to_string())
}

// -- 4 ----------------------------------------------------------------------

fn criterion_4_path_fibrations() -> Result<String, String> {
    // Closed form: even 2n gives [0,inf)_0 + [0,2n-1)_{2n} + [2n-1,4n-2)_{4n-1};
    // odd 2n-1 gives [0,inf)_0 + [0,2n-2)_{2n-1}.
    let expected = [
        ("path_fibration_even_1", "0 0 inf\n2 0 1\n3 1 2\n"),
        ("path_fibration_even_2", "0 0 inf\n4 0 3\n7 3 6\n"),
        ("path_fibration_odd_1", "0 0 inf\n"),
        ("path_fibration_odd_2", "0 0 inf\n3 0 2\n"),
        ("path_fibration_odd_3", "0 0 inf\n5 0 4\n"),
    ];
    for (name, want) in expected {
        let loaded =
            parse_model::<Rational>(model_text(name).unwrap()).map_err(|e| e.to_string())?;
        let cap = loaded.cap;
        let theta = build_theta(loaded.model).map_err(|e| e.to_string())?;
        let got = barcode(&persistence_cohomology(&theta, cap).map_err(|e| e.to_string())?)
            .serialize();
        expect(got == want, &format!("{name}: expected\n{want}got\n{got}"))?;
    }
    Ok("all five barcodes equal the closed form exactly".to_string())
}

// -- 5 ----------------------------------------------------------------------

fn criterion_5_connected_sum() -> Result<String, String> {
    let p = load_pair::<Rational>("connected_sum_f1", "connected_sum_f2")?;
    let module = d_cohi_module(&p.f, &p.g, p.cap).map_err(|e| e.to_string())?;
    expect(
        module.value == HalfValue::ZERO,
        &format!("over Q the module level should be 0, got {}", module.value),
    )?;
    let scan = check_pair(&p, 2, None)?;
    expect(
        scan.bound >= HalfValue::from_halves(1),
        &format!("over Q the scan should certify >= 1/2, got {}", scan.bound),
    )?;
    let (_, eps) = certified_pair::<GaussianRational>(
        "connected_sum_f1_qi",
        "connected_sum_f2_qi",
        files::CONNECTED_SUM_QI_CERT,
        2,
    )?;
    expect(eps == 0, "over Q(i) the isomorphism certificate is at 0")?;
    Ok(format!(
        "over Q: module level 0 yet certified >= {}; over Q(i): distance 0",
        scan.bound
    ))
}

// -- 6 ----------------------------------------------------------------------

fn criterion_6_s1_bundles() -> Result<String, String> {
    for n in [1u32, 2] {
        for k in 1..=3u32 {
            for l in 1..=3u32 {
                certified_pair::<Rational>(
                    &format!("s1_bundle_{k}_{n}"),
                    &format!("s1_bundle_{l}_{n}"),
                    &s1_bundle_iso_cert_text(k, l, n),
                    4,
                )?;
            }
            let (p, _) = certified_pair::<Rational>(
                &format!("s1_bundle_{k}_{n}"),
                &format!("s1_bundle_0_{n}"),
                &s1_bundle_trivial_cert_text(k, n),
                4,
            )?;
            let scan = check_pair(&p, 4, Some(4))?;
            expect(
                scan.bound == HalfValue::from_integer(2),
                &format!("bundle {k} vs trivial over CP^{n}: expected 2, got {}", scan.bound),
            )?;
        }
    }
    Ok("nonzero Euler numbers: distance 0; against the trivial bundle: distance 2".to_string())
}

// -- 7 ----------------------------------------------------------------------

fn criterion_7_formality_distance() -> Result<String, String> {
    let (p, eps) = certified_pair::<Rational>(
        "hopf_map",
        "hopf_cohomology",
        files::HOPF_COHOMOLOGY_CERT,
        4,
    )?;
    expect(eps == 2, "certificate should be at epsilon = 1")?;
    let scan = check_pair(&p, 4, Some(2))?;
    expect(
        scan.bound == HalfValue::from_integer(1),
        &format!("lower bound: expected 1, got {}", scan.bound),
    )?;
    Ok("distance = 1 between the Hopf model and its all-at-once restaging".to_string())
}

// -- 8 ----------------------------------------------------------------------

/// All certified corpus pairs with their certificates and scan windows; the
/// shared `check_pair` enforces that no lower bound crosses a verified
/// upper bound and nothing is simultaneously obstructed and verified.
fn criterion_8_inequality_chain() -> Result<String, String> {
    let fixed: &[(&str, &str, &str, u32)] = &[
        ("hopf_trivial", "hopf_map", files::HOPF_CERT, 8),
        ("cp2_inclusion", "s2_identity", files::CP2_CERT, 8),
        ("even_sphere_trivial_1", "s2_identity", files::EVEN_SPHERE_1_CERT, 8),
        ("odd_sphere_trivial_1", "s3_identity", files::ODD_SPHERE_1_CERT, 8),
        ("hopf_map", "hopf_cohomology", files::HOPF_COHOMOLOGY_CERT, 4),
        ("wedge_h_7", "wedge_const_7", files::WEDGE_COLLAPSE_CERT, 8),
    ];
    let mut pairs = 0usize;
    for (a, b, cert, eps_max) in fixed {
        certified_pair::<Rational>(a, b, cert, *eps_max)?;
        pairs += 1;
    }
    certified_pair::<GaussianRational>(
        "connected_sum_f1_qi",
        "connected_sum_f2_qi",
        files::CONNECTED_SUM_QI_CERT,
        2,
    )?;
    pairs += 1;
    for n in [1u32, 2] {
        for k in 1..=3u32 {
            for l in 1..=3u32 {
                certified_pair::<Rational>(
                    &format!("s1_bundle_{k}_{n}"),
                    &format!("s1_bundle_{l}_{n}"),
                    &s1_bundle_iso_cert_text(k, l, n),
                    4,
                )?;
                pairs += 1;
            }
            certified_pair::<Rational>(
                &format!("s1_bundle_{k}_{n}"),
                &format!("s1_bundle_0_{n}"),
                &s1_bundle_trivial_cert_text(k, n),
                4,
            )?;
            pairs += 1;
        }
    }
    // Uncertified pairs still get the internal consistency checks.
    check_pair(&load_pair::<Rational>("connected_sum_f1", "connected_sum_f2")?, 2, None)?;
    for t in [3u32, 5, 7] {
        check_pair(
            &load_pair::<Rational>(&format!("wedge_id_{t}"), &format!("wedge_const_{t}"))?,
            8,
            None,
        )?;
        pairs += 1;
    }
    Ok(format!("{} pairs cross-checked, zero violations", pairs + 1))
}

// -- 9 ----------------------------------------------------------------------

fn random_intervals(rng: &mut StdRng) -> Vec<Interval> {
    let count = rng.gen_range(0..=6);
    (0..count)
        .map(|_| {
            let birth = rng.gen_range(0..6u32);
            let death = if rng.gen_bool(0.25) {
                None
            } else {
                Some(birth + rng.gen_range(1..=4u32))
            };
            Interval { birth, death }
        })
        .collect()
}

fn bottleneck_oracle(rng: &mut StdRng) -> Result<(), String> {
    for case in 0..200 {
        let a = random_intervals(rng);
        let b = random_intervals(rng);
        let fast = bottleneck(&a, &b).0;
        let brute = bottleneck_brute_force(&a, &b);
        if fast != brute {
            return Err(format!(
                "case {case}: bottleneck {fast} != brute force {brute} on {a:?} vs {b:?}"
            ));
        }
    }
    Ok(())
}

/// A random homogeneous element of bounded degree.
fn random_element<S: Scalar>(
    algebra: &cdga_core::FreeCdga<S>,
    cap: usize,
    rng: &mut StdRng,
) -> (usize, cdga_core::Element<S>) {
    let all = vec![true; algebra.generators().len()];
    for _ in 0..8 {
        let degree = rng.gen_range(1..=cap.max(1));
        let monomials = algebra.monomials_of_degree(degree, &all);
        if monomials.is_empty() {
            continue;
        }
        let mut e = cdga_core::Element::zero();
        for _ in 0..rng.gen_range(1..=3usize) {
            let m = monomials[rng.gen_range(0..monomials.len())].clone();
            let c = S::from_integer(rng.gen_range(-3..=3));
            e = e.add(&cdga_core::Element::monomial(c, m));
        }
        return (degree, e);
    }
    (0, cdga_core::Element::zero())
}

fn algebra_laws<S: Scalar>(
    algebra: &cdga_core::FreeCdga<S>,
    cap: usize,
    iterations: usize,
    rng: &mut StdRng,
) -> Result<(), String> {
    let sign = |d: usize| {
        if d % 2 == 0 {
            S::from_integer(1)
        } else {
            S::from_integer(-1)
        }
    };
    for _ in 0..iterations {
        let (p, a) = random_element(algebra, cap, rng);
        let (q, b) = random_element(algebra, cap, rng);
        // Graded commutativity: a*b = (-1)^{pq} b*a.
        let ab = algebra.multiply(&a, &b);
        let ba = algebra.multiply(&b, &a).scale(&sign(p * q));
        if !ab.sub(&ba).is_zero() {
            return Err(format!(
                "graded commutativity fails on {} and {}",
                algebra.format_element(&a),
                algebra.format_element(&b)
            ));
        }
        // Leibniz: d(a*b) = d(a)*b + (-1)^p a*d(b).
        let lhs = algebra.apply_differential(&ab);
        let rhs = algebra
            .multiply(&algebra.apply_differential(&a), &b)
            .add(&algebra.multiply(&a, &algebra.apply_differential(&b)).scale(&sign(p)));
        if !lhs.sub(&rhs).is_zero() {
            return Err(format!("Leibniz fails on {}", algebra.format_element(&ab)));
        }
        // d^2 = 0.
        if !algebra
            .apply_differential(&algebra.apply_differential(&a))
            .is_zero()
        {
            return Err(format!("d^2 != 0 on {}", algebra.format_element(&a)));
        }
    }
    Ok(())
}

fn barcode_dimension_consistency<S: Scalar>(name: &str, text: &str) -> Result<(), String> {
    let loaded = parse_model::<S>(text).map_err(|e| format!("{name}: {e}"))?;
    let cap = loaded.cap;
    let theta = build_theta(loaded.model).map_err(|e| format!("{name}: {e}"))?;
    let bc = barcode(&persistence_cohomology(&theta, cap).map_err(|e| format!("{name}: {e}"))?);
    for s in 0..=theta.stabilization {
        let h = theta.stage_cohomology(s, cap).map_err(|e| format!("{name}: {e}"))?;
        for degree in 0..=cap {
            let alive = bc.alive(degree, s);
            let dim = h.degree(degree).dim();
            if alive != dim {
                return Err(format!(
                    "{name}: degree {degree} stage {s}: {alive} bars alive but H has dim {dim}"
                ));
            }
        }
    }
    Ok(())
}

fn criterion_9_oracles() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(0x5eed_cd6a);
    bottleneck_oracle(&mut rng)?;
    let mut algebras = 0usize;
    for (name, text) in model_files() {
        match field_of(text).map_err(|e| e.to_string())? {
            FieldChoice::Rational => {
                let loaded =
                    parse_model::<Rational>(text).map_err(|e| format!("{name}: {e}"))?;
                algebra_laws(&loaded.model.algebra, loaded.cap, 1000, &mut rng)
                    .map_err(|e| format!("{name}: {e}"))?;
                barcode_dimension_consistency::<Rational>(name, text)?;
            }
            FieldChoice::Gaussian => {
                let loaded =
                    parse_model::<GaussianRational>(text).map_err(|e| format!("{name}: {e}"))?;
                algebra_laws(&loaded.model.algebra, loaded.cap, 1000, &mut rng)
                    .map_err(|e| format!("{name}: {e}"))?;
                barcode_dimension_consistency::<GaussianRational>(name, text)?;
            }
        }
        algebras += 1;
    }
    Ok(format!(
        "bottleneck = brute force on 200 instances; algebra laws on 1000 elements and \
         barcode/dimension agreement for all {algebras} corpus models"
    ))
}

// -- 10 ---------------------------------------------------------------------

fn criterion_10_truncation_honesty() -> Result<String, String> {
    let bounds = model_corpus::corpus::wedge_truncation_bounds()?;
    expect(bounds.len() == 3, "three truncation stages expected")?;
    for pair in bounds.windows(2) {
        expect(
            pair[0].1 <= pair[1].1,
            &format!(
                "bound dropped from {} (stage {}) to {} (stage {})",
                pair[0].1, pair[0].0, pair[1].1, pair[1].0
            ),
        )?;
    }
    let rendered: Vec<String> = bounds
        .iter()
        .map(|(t, b)| format!("stage {t}: >= {b}"))
        .collect();
    Ok(format!("lower bounds nondecreasing ({})", rendered.join(", ")))
}

// ---------------------------------------------------------------------------

#[test]
fn acceptance() {
    let criteria: Vec<(&str, fn() -> Result<String, String>)> = vec![
        ("1 Hopf pair distances", criterion_1_hopf),
        ("2 CP^2 inclusion vs identity", criterion_2_cp2),
        ("3 sphere self-maps", criterion_3_spheres),
        ("4 path-fibration barcodes", criterion_4_path_fibrations),
        ("5 connected sum over Q vs Q(i)", criterion_5_connected_sum),
        ("6 circle bundles over CP^n", criterion_6_s1_bundles),
        ("7 distance to the restaged cohomology", criterion_7_formality_distance),
        ("8 inequality chain over the corpus", criterion_8_inequality_chain),
        ("9 oracle suites", criterion_9_oracles),
        ("10 truncation honesty", criterion_10_truncation_honesty),
    ];
    let mut failed = false;
    for (label, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS criterion {label}: {detail}"),
            Err(detail) => {
                failed = true;
                println!("FAIL criterion {label}: {detail}");
            }
        }
    }
    assert!(!failed, "at least one acceptance criterion failed");
}
