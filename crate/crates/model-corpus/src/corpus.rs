//! The bundled example corpus: filtered models with known interleaving
//! distances, each packaged as a runnable entry that recomputes its
//! certificates and obstructions and checks them against the expected
//! values.

use crate::format::{parse_certificate, parse_model, LoadedModel};
use distances::{d_cohi_module, HalfValue};
use field_linalg::{GaussianRational, Rational, Scalar};
use interleaving_verify::{
    lower_bound_scan, obstruct, verify_certificate, InterleavingCertificate, ScanReport,
};
use persistence_theta::{barcode, build_theta, persistence_cohomology, PersistenceCdga};

/// Embedded corpus texts.
pub mod files {
    macro_rules! corpus_file {
        ($name:ident, $file:literal) => {
            pub const $name: &str = include_str!(concat!("../../../corpus/", $file));
        };
    }
    corpus_file!(HOPF_TRIVIAL, "hopf_trivial.model");
    corpus_file!(HOPF_MAP, "hopf_map.model");
    corpus_file!(CP2_INCLUSION, "cp2_inclusion.model");
    corpus_file!(S2_IDENTITY, "s2_identity.model");
    corpus_file!(S3_IDENTITY, "s3_identity.model");
    corpus_file!(SPHERE_S5, "sphere_s5.model");
    corpus_file!(EVEN_SPHERE_TRIVIAL_1, "even_sphere_trivial_1.model");
    corpus_file!(ODD_SPHERE_TRIVIAL_1, "odd_sphere_trivial_1.model");
    corpus_file!(BASEPOINT_S3, "basepoint_s3.model");
    corpus_file!(PATH_FIBRATION_EVEN_1, "path_fibration_even_1.model");
    corpus_file!(PATH_FIBRATION_EVEN_2, "path_fibration_even_2.model");
    corpus_file!(PATH_FIBRATION_ODD_1, "path_fibration_odd_1.model");
    corpus_file!(PATH_FIBRATION_ODD_2, "path_fibration_odd_2.model");
    corpus_file!(PATH_FIBRATION_ODD_3, "path_fibration_odd_3.model");
    corpus_file!(CONNECTED_SUM_F1, "connected_sum_f1.model");
    corpus_file!(CONNECTED_SUM_F2, "connected_sum_f2.model");
    corpus_file!(CONNECTED_SUM_F1_QI, "connected_sum_f1_qi.model");
    corpus_file!(CONNECTED_SUM_F2_QI, "connected_sum_f2_qi.model");
    corpus_file!(CONNECTED_SUM_SPACE, "connected_sum_space.model");
    corpus_file!(S1_BUNDLE_0_1, "s1_bundle_0_1.model");
    corpus_file!(S1_BUNDLE_1_1, "s1_bundle_1_1.model");
    corpus_file!(S1_BUNDLE_2_1, "s1_bundle_2_1.model");
    corpus_file!(S1_BUNDLE_3_1, "s1_bundle_3_1.model");
    corpus_file!(S1_BUNDLE_0_2, "s1_bundle_0_2.model");
    corpus_file!(S1_BUNDLE_1_2, "s1_bundle_1_2.model");
    corpus_file!(S1_BUNDLE_2_2, "s1_bundle_2_2.model");
    corpus_file!(S1_BUNDLE_3_2, "s1_bundle_3_2.model");
    corpus_file!(HOPF_COHOMOLOGY, "hopf_cohomology.model");
    corpus_file!(WEDGE_ID_3, "wedge_id_3.model");
    corpus_file!(WEDGE_ID_5, "wedge_id_5.model");
    corpus_file!(WEDGE_ID_7, "wedge_id_7.model");
    corpus_file!(WEDGE_CONST_3, "wedge_const_3.model");
    corpus_file!(WEDGE_CONST_5, "wedge_const_5.model");
    corpus_file!(WEDGE_CONST_7, "wedge_const_7.model");
    corpus_file!(WEDGE_H_7, "wedge_h_7.model");
    corpus_file!(HOPF_CERT, "hopf.cert");
    corpus_file!(CP2_CERT, "cp2.cert");
    corpus_file!(EVEN_SPHERE_1_CERT, "even_sphere_1.cert");
    corpus_file!(ODD_SPHERE_1_CERT, "odd_sphere_1.cert");
    corpus_file!(CONNECTED_SUM_QI_CERT, "connected_sum_qi.cert");
    corpus_file!(HOPF_COHOMOLOGY_CERT, "hopf_cohomology.cert");
    corpus_file!(WEDGE_COLLAPSE_CERT, "wedge_collapse.cert");
    corpus_file!(S1_BUNDLE_ISO_12_1_CERT, "s1_bundle_iso_12_1.cert");
    corpus_file!(S1_BUNDLE_10_1_CERT, "s1_bundle_10_1.cert");
}

/// Every bundled model file, by name.
pub fn model_files() -> Vec<(&'static str, &'static str)> {
    use files::*;
    vec![
        ("hopf_trivial", HOPF_TRIVIAL),
        ("hopf_map", HOPF_MAP),
        ("cp2_inclusion", CP2_INCLUSION),
        ("s2_identity", S2_IDENTITY),
        ("s3_identity", S3_IDENTITY),
        ("sphere_s5", SPHERE_S5),
        ("even_sphere_trivial_1", EVEN_SPHERE_TRIVIAL_1),
        ("odd_sphere_trivial_1", ODD_SPHERE_TRIVIAL_1),
        ("basepoint_s3", BASEPOINT_S3),
        ("path_fibration_even_1", PATH_FIBRATION_EVEN_1),
        ("path_fibration_even_2", PATH_FIBRATION_EVEN_2),
        ("path_fibration_odd_1", PATH_FIBRATION_ODD_1),
        ("path_fibration_odd_2", PATH_FIBRATION_ODD_2),
        ("path_fibration_odd_3", PATH_FIBRATION_ODD_3),
        ("connected_sum_f1", CONNECTED_SUM_F1),
        ("connected_sum_f2", CONNECTED_SUM_F2),
        ("connected_sum_f1_qi", CONNECTED_SUM_F1_QI),
        ("connected_sum_f2_qi", CONNECTED_SUM_F2_QI),
        ("connected_sum_space", CONNECTED_SUM_SPACE),
        ("s1_bundle_0_1", S1_BUNDLE_0_1),
        ("s1_bundle_1_1", S1_BUNDLE_1_1),
        ("s1_bundle_2_1", S1_BUNDLE_2_1),
        ("s1_bundle_3_1", S1_BUNDLE_3_1),
        ("s1_bundle_0_2", S1_BUNDLE_0_2),
        ("s1_bundle_1_2", S1_BUNDLE_1_2),
        ("s1_bundle_2_2", S1_BUNDLE_2_2),
        ("s1_bundle_3_2", S1_BUNDLE_3_2),
        ("hopf_cohomology", HOPF_COHOMOLOGY),
        ("wedge_id_3", WEDGE_ID_3),
        ("wedge_id_5", WEDGE_ID_5),
        ("wedge_id_7", WEDGE_ID_7),
        ("wedge_const_3", WEDGE_CONST_3),
        ("wedge_const_5", WEDGE_CONST_5),
        ("wedge_const_7", WEDGE_CONST_7),
        ("wedge_h_7", WEDGE_H_7),
    ]
}

/// Every bundled certificate file, by name.
pub fn certificate_files() -> Vec<(&'static str, &'static str)> {
    use files::*;
    vec![
        ("hopf", HOPF_CERT),
        ("cp2", CP2_CERT),
        ("even_sphere_1", EVEN_SPHERE_1_CERT),
        ("odd_sphere_1", ODD_SPHERE_1_CERT),
        ("connected_sum_qi", CONNECTED_SUM_QI_CERT),
        ("hopf_cohomology", HOPF_COHOMOLOGY_CERT),
        ("wedge_collapse", WEDGE_COLLAPSE_CERT),
        ("s1_bundle_iso_12_1", S1_BUNDLE_ISO_12_1_CERT),
        ("s1_bundle_10_1", S1_BUNDLE_10_1_CERT),
    ]
}

pub fn model_text(name: &str) -> Option<&'static str> {
    model_files()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| t)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn load<S: Scalar>(name: &str) -> Result<LoadedModel<S>, String> {
    let text = model_text(name).ok_or_else(|| format!("no corpus model `{name}`"))?;
    parse_model::<S>(text).map_err(err)
}

/// A model pair made comparable: both algebras raised to a shared cap and
/// turned into their stage filtrations.
pub struct Pair<S: Scalar> {
    pub f: PersistenceCdga<S>,
    pub g: PersistenceCdga<S>,
    pub cap: usize,
}

/// Build the stage filtrations of two models at their shared cap.
pub fn pair<S: Scalar>(
    mut a: LoadedModel<S>,
    mut b: LoadedModel<S>,
) -> Result<Pair<S>, String> {
    let cap = a.cap.max(b.cap);
    a.raise_cap(cap);
    b.raise_cap(cap);
    Ok(Pair {
        f: build_theta(a.model).map_err(err)?,
        g: build_theta(b.model).map_err(err)?,
        cap,
    })
}

fn load_pair<S: Scalar>(a: &str, b: &str) -> Result<Pair<S>, String> {
    pair(load::<S>(a)?, load::<S>(b)?)
}

fn parse_cert<S: Scalar>(
    text: &str,
    p: &Pair<S>,
) -> Result<InterleavingCertificate<S>, String> {
    parse_certificate::<S>(text, &p.f.model, &p.g.model).map_err(err)
}

/// Cross-check a pair's evidence: the certified lower bounds must never
/// exceed a verified upper bound, and no obstruction may fire at or above
/// it. Returns the scan report for further inspection.
pub fn check_pair<S: Scalar>(
    p: &Pair<S>,
    eps_max_halves: u32,
    verified_halves: Option<u32>,
) -> Result<ScanReport, String> {
    let scan = lower_bound_scan(&p.f, &p.g, p.cap, eps_max_halves).map_err(err)?;
    let module = d_cohi_module(&p.f, &p.g, p.cap).map_err(err)?;
    if let Some(upper) = verified_halves {
        let upper = HalfValue::from_halves(upper);
        if scan.bound > upper {
            return Err(format!(
                "obstruction bound {} exceeds the verified upper bound {upper}",
                scan.bound
            ));
        }
        if module.value > upper {
            return Err(format!(
                "module-level distance {} exceeds the verified upper bound {upper}",
                module.value
            ));
        }
        for (h, verdict) in &scan.verdicts {
            if verdict.is_obstructed() && HalfValue::from_halves(*h) >= upper {
                return Err(format!(
                    "obstruction fired at {} despite a verified certificate at {upper}",
                    HalfValue::from_halves(*h)
                ));
            }
        }
    }
    if module.value > scan.bound && module.value.is_finite() {
        // The scan subsumes the module-level mechanism, so its bound can
        // only be at least as strong when the grid reaches far enough.
        if let (Some(m), _) = (module.value.halves(), ()) {
            if m <= eps_max_halves + 1 {
                return Err(format!(
                    "scan bound {} is weaker than the module-level distance {}",
                    scan.bound, module.value
                ));
            }
        }
    }
    Ok(scan)
}

fn require(cond: bool, message: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message.to_string())
    }
}

fn expect_value(label: &str, got: HalfValue, want: HalfValue) -> Result<(), String> {
    require(got == want, &format!("{label}: expected {want}, got {got}"))
}

// ---------------------------------------------------------------------------
// Entries
// ---------------------------------------------------------------------------

fn run_hopf() -> Result<String, String> {
    let p = load_pair::<Rational>("hopf_trivial", "hopf_map")?;
    let cert = parse_cert(files::HOPF_CERT, &p)?;
    require(cert.eps_halves == 6, "certificate epsilon should be 3")?;
    verify_certificate(&cert, &p.f, &p.g).map_err(err)?;
    let scan = check_pair(&p, 8, Some(6))?;
    expect_value("obstruction bound", scan.bound, HalfValue::from_halves(6))?;
    let module = d_cohi_module(&p.f, &p.g, p.cap).map_err(err)?;
    expect_value("module-level distance", module.value, HalfValue::from_integer(2))?;
    Ok(format!(
        "distance = 3 (certificate at 3, obstructions up to 3); module level = {}",
        module.value
    ))
}

fn run_cp2() -> Result<String, String> {
    let p = load_pair::<Rational>("cp2_inclusion", "s2_identity")?;
    let cert = parse_cert(files::CP2_CERT, &p)?;
    verify_certificate(&cert, &p.f, &p.g).map_err(err)?;
    let scan = check_pair(&p, 8, Some(6))?;
    expect_value("obstruction bound", scan.bound, HalfValue::from_halves(6))?;
    // The module-level mechanisms go blind in the window [2, 3); only the
    // nilpotency analysis keeps the bound alive there.
    for h in [4u32, 5] {
        let verdict = obstruct(&p.f, &p.g, h, p.cap).map_err(err)?;
        let nilpotent = match &verdict {
            interleaving_verify::ObstructionVerdict::Obstructed(ws) => ws
                .iter()
                .any(|w| w.mechanism == interleaving_verify::Mechanism::NilpotentFactor),
            _ => false,
        };
        require(
            nilpotent,
            &format!("nilpotency obstruction should fire at {}", HalfValue::from_halves(h)),
        )?;
    }
    Ok("distance = 3 (certificate at 3, nilpotency closes the window [2, 3))".to_string())
}

fn run_even_sphere() -> Result<String, String> {
    let p = load_pair::<Rational>("even_sphere_trivial_1", "s2_identity")?;
    let cert = parse_cert(files::EVEN_SPHERE_1_CERT, &p)?;
    verify_certificate(&cert, &p.f, &p.g).map_err(err)?;
    let scan = check_pair(&p, 8, Some(6))?;
    expect_value("obstruction bound", scan.bound, HalfValue::from_halves(6))?;
    Ok("distance = 3 = 4n - 1 for n = 1".to_string())
}

fn run_odd_sphere() -> Result<String, String> {
    let p = load_pair::<Rational>("odd_sphere_trivial_1", "s3_identity")?;
    let cert = parse_cert(files::ODD_SPHERE_1_CERT, &p)?;
    verify_certificate(&cert, &p.f, &p.g).map_err(err)?;
    let scan = check_pair(&p, 8, Some(6))?;
    expect_value("obstruction bound", scan.bound, HalfValue::from_halves(6))?;
    Ok("distance = 3 = 2n + 1 for n = 1".to_string())
}

/// Expected stage-cohomology barcodes of the path fibration models.
pub fn path_fibration_expectations() -> Vec<(&'static str, &'static str)> {
    vec![
        ("path_fibration_even_1", "0 0 inf\n2 0 1\n3 1 2\n"),
        ("path_fibration_even_2", "0 0 inf\n4 0 3\n7 3 6\n"),
        ("path_fibration_odd_1", "0 0 inf\n"),
        ("path_fibration_odd_2", "0 0 inf\n3 0 2\n"),
        ("path_fibration_odd_3", "0 0 inf\n5 0 4\n"),
    ]
}

fn run_path_fibrations() -> Result<String, String> {
    for (name, expected) in path_fibration_expectations() {
        let loaded = load::<Rational>(name)?;
        let cap = loaded.cap;
        let theta = build_theta(loaded.model).map_err(err)?;
        let bc = barcode(&persistence_cohomology(&theta, cap).map_err(err)?);
        let got = bc.serialize();
        require(
            got == expected,
            &format!("{name}: expected barcode\n{expected}got\n{got}"),
        )?;
    }
    Ok("all five loop-space barcodes match the closed form".to_string())
}

fn run_connected_sum() -> Result<String, String> {
    let p = load_pair::<Rational>("connected_sum_f1", "connected_sum_f2")?;
    let module = d_cohi_module(&p.f, &p.g, p.cap).map_err(err)?;
    expect_value("module-level distance", module.value, HalfValue::ZERO)?;
    let verdict = obstruct(&p.f, &p.g, 0, p.cap).map_err(err)?;
    require(verdict.is_obstructed(), "rigidity obstruction should fire at 0 over Q")?;
    let scan = check_pair(&p, 2, None)?;
    expect_value("obstruction bound over Q", scan.bound, HalfValue::from_halves(1))?;

    let q = load_pair::<GaussianRational>("connected_sum_f1_qi", "connected_sum_f2_qi")?;
    let cert = parse_cert(files::CONNECTED_SUM_QI_CERT, &q)?;
    require(cert.eps_halves == 0, "certificate epsilon should be 0")?;
    verify_certificate(&cert, &q.f, &q.g).map_err(err)?;
    let verdict = obstruct(&q.f, &q.g, 0, q.cap).map_err(err)?;
    require(!verdict.is_obstructed(), "no obstruction may fire at 0 over Q(i)")?;
    check_pair(&q, 2, Some(0))?;
    Ok("over Q: module level 0 but certified >= 1/2; over Q(i): isomorphic (distance 0)".to_string())
}

/// The interleaving certificate between two nontrivial circle bundles with
/// Euler numbers `k` and `l` (an exact isomorphism).
pub fn s1_bundle_iso_cert_text(k: u32, l: u32, n: u32) -> String {
    let power = n + 1;
    let kp = k.pow(power);
    let lp = l.pow(power);
    format!(
        "[certificate]\nepsilon = 0\n\n[phi]\nA.u = B.u\nA.y = {lp}/{kp}*B.y\n\n\
         [psi]\nB.u = A.u\nB.y = {kp}/{lp}*A.y\n"
    )
}

/// The 2-interleaving certificate between the Euler-number-`k` bundle and
/// the trivial one.
pub fn s1_bundle_trivial_cert_text(k: u32, n: u32) -> String {
    let kp = k.pow(n + 1);
    format!(
        "[certificate]\nepsilon = 2\n\n[phi]\nA.u = B.x\nA.y = 1/{kp}*B.y\n\n\
         [psi]\nB.u = 0\nB.z = 0\nB.x = A.u\nB.y = {kp}*A.y\n\n\
         [homotopy_G]\nB.u = B.u*t - B.z*dt\nB.z = B.z*t\n"
    )
}

fn run_s1_bundles() -> Result<String, String> {
    for n in [1u32, 2] {
        for k in 1..=3u32 {
            for l in 1..=3u32 {
                let p = load_pair::<Rational>(
                    &format!("s1_bundle_{k}_{n}"),
                    &format!("s1_bundle_{l}_{n}"),
                )?;
                let cert = parse_cert(&s1_bundle_iso_cert_text(k, l, n), &p)?;
                verify_certificate(&cert, &p.f, &p.g).map_err(err)?;
                check_pair(&p, 4, Some(0))?;
            }
            let p = load_pair::<Rational>(
                &format!("s1_bundle_{k}_{n}"),
                &format!("s1_bundle_0_{n}"),
            )?;
            let cert = parse_cert(&s1_bundle_trivial_cert_text(k, n), &p)?;
            verify_certificate(&cert, &p.f, &p.g).map_err(err)?;
            let scan = check_pair(&p, 4, Some(4))?;
            expect_value(
                &format!("obstruction bound for bundle {k} vs trivial over CP^{n}"),
                scan.bound,
                HalfValue::from_integer(2),
            )?;
        }
    }
    Ok("all nontrivial bundles are isomorphic (distance 0); distance 2 to the trivial one"
        .to_string())
}

fn run_hopf_cohomology() -> Result<String, String> {
    let p = load_pair::<Rational>("hopf_map", "hopf_cohomology")?;
    let cert = parse_cert(files::HOPF_COHOMOLOGY_CERT, &p)?;
    require(cert.eps_halves == 2, "certificate epsilon should be 1")?;
    verify_certificate(&cert, &p.f, &p.g).map_err(err)?;
    let scan = check_pair(&p, 4, Some(2))?;
    expect_value("obstruction bound", scan.bound, HalfValue::from_halves(2))?;
    Ok("distance = 1 between the Hopf model and its all-at-once restaging".to_string())
}

fn run_wedge_collapse() -> Result<String, String> {
    let p = load_pair::<Rational>("wedge_h_7", "wedge_const_7")?;
    let cert = parse_cert(files::WEDGE_COLLAPSE_CERT, &p)?;
    verify_certificate(&cert, &p.f, &p.g).map_err(err)?;
    let scan = check_pair(&p, 8, Some(6))?;
    expect_value("obstruction bound", scan.bound, HalfValue::from_halves(6))?;
    Ok("distance = 3 between the collapse map and the constant map".to_string())
}

/// Certified lower bounds for the identity-versus-constant pair of the
/// wedge of two 3-spheres, per truncation stage.
pub fn wedge_truncation_bounds() -> Result<Vec<(u32, HalfValue)>, String> {
    let mut out = Vec::new();
    for t in [3u32, 5, 7] {
        let p = load_pair::<Rational>(&format!("wedge_id_{t}"), &format!("wedge_const_{t}"))?;
        let scan = check_pair(&p, 8, None)?;
        out.push((t, scan.bound));
    }
    Ok(out)
}

fn run_wedge_truncation() -> Result<String, String> {
    let bounds = wedge_truncation_bounds()?;
    for pair in bounds.windows(2) {
        require(
            pair[0].1 <= pair[1].1,
            "deeper truncations must certify at least as much",
        )?;
    }
    let rendered: Vec<String> = bounds
        .iter()
        .map(|(t, b)| format!("stage {t}: >= {b}"))
        .collect();
    Ok(format!(
        "truncation-monotone lower bounds ({})",
        rendered.join(", ")
    ))
}

fn run_global_bounds() -> Result<String, String> {
    let s3 = load::<Rational>("s3_identity")?;
    let s5 = load::<Rational>("sphere_s5")?;
    let wht = distances::bound_wht(&s3.model.algebra, &s5.model.algebra);
    require(wht == 5, &format!("mapping-space bound: expected 5, got {wht}"))?;
    let path = distances::bound_path_fibration(&s3.model.algebra, &s5.model.algebra);
    expect_value("path-fibration bound", path, HalfValue::from_integer(2))?;
    let p = load_pair::<Rational>("path_fibration_odd_2", "path_fibration_odd_3")?;
    let module = d_cohi_module(&p.f, &p.g, p.cap).map_err(err)?;
    require(
        module.value <= path,
        &format!("module distance {} exceeds the bound {path}", module.value),
    )?;
    let basepoint = load::<Rational>("basepoint_s3")?;
    let bp = distances::bound_basepoint(&basepoint.model).map_err(err)?;
    expect_value("basepoint bound", bp, HalfValue::from_integer(1))?;
    Ok(format!(
        "mapping-space bound 5, path-fibration bound {path} (observed {}), basepoint bound {bp}",
        module.value
    ))
}

/// One runnable corpus entry.
pub struct CorpusEntry {
    pub name: &'static str,
    pub run: fn() -> Result<String, String>,
}

/// All corpus entries, in presentation order.
pub fn entries() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry { name: "hopf", run: run_hopf },
        CorpusEntry { name: "cp2", run: run_cp2 },
        CorpusEntry { name: "even_sphere", run: run_even_sphere },
        CorpusEntry { name: "odd_sphere", run: run_odd_sphere },
        CorpusEntry { name: "path_fibrations", run: run_path_fibrations },
        CorpusEntry { name: "connected_sum", run: run_connected_sum },
        CorpusEntry { name: "s1_bundles", run: run_s1_bundles },
        CorpusEntry { name: "hopf_cohomology", run: run_hopf_cohomology },
        CorpusEntry { name: "wedge_collapse", run: run_wedge_collapse },
        CorpusEntry { name: "wedge_truncation", run: run_wedge_truncation },
        CorpusEntry { name: "bounds", run: run_global_bounds },
    ]
}

pub fn entry(name: &str) -> Option<CorpusEntry> {
    entries().into_iter().find(|e| e.name == name)
}
