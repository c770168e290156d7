use field_linalg::{GaussianRational, Rational};
use model_corpus::{
    field_of, model_files, model_text, parse_certificate, parse_model, serialize_model,
    FieldChoice, FormatError,
};

/// Serializing a parsed file is canonical: parsing the output again and
/// re-serializing reproduces it byte for byte.
#[test]
fn every_model_file_round_trips_through_its_canonical_form() {
    for (name, text) in model_files() {
        match field_of(text).unwrap() {
            FieldChoice::Rational => {
                let loaded = parse_model::<Rational>(text)
                    .unwrap_or_else(|e| panic!("{name}: {e}"));
                let canonical = serialize_model(&loaded);
                let reloaded = parse_model::<Rational>(&canonical)
                    .unwrap_or_else(|e| panic!("{name} (canonical): {e}"));
                assert_eq!(canonical, serialize_model(&reloaded), "{name}");
                assert_eq!(loaded.cap, reloaded.cap, "{name}");
            }
            FieldChoice::Gaussian => {
                let loaded = parse_model::<GaussianRational>(text)
                    .unwrap_or_else(|e| panic!("{name}: {e}"));
                let canonical = serialize_model(&loaded);
                let reloaded = parse_model::<GaussianRational>(&canonical)
                    .unwrap_or_else(|e| panic!("{name} (canonical): {e}"));
                assert_eq!(canonical, serialize_model(&reloaded), "{name}");
            }
        }
    }
}

#[test]
fn default_cap_is_top_degree_plus_three() {
    let loaded = parse_model::<Rational>(model_text("hopf_trivial").unwrap()).unwrap();
    assert_eq!(loaded.cap, 6);
    // Two degrees of algebra headroom above the cap.
    assert_eq!(loaded.model.algebra.cap(), 8);
    let explicit = parse_model::<Rational>(model_text("wedge_id_7").unwrap()).unwrap();
    assert_eq!(explicit.cap, 7);
    assert_eq!(explicit.model.truncated_at, Some(7));
}

#[test]
fn field_declarations_are_enforced() {
    let text = model_text("connected_sum_f1_qi").unwrap();
    assert_eq!(field_of(text).unwrap(), FieldChoice::Gaussian);
    match parse_model::<Rational>(text) {
        Err(FormatError::FieldMismatch { .. }) => {}
        other => panic!("expected a field mismatch, got {other:?}"),
    }
}

#[test]
fn staging_overrides_are_read_and_written() {
    let loaded = parse_model::<Rational>(model_text("hopf_cohomology").unwrap()).unwrap();
    let m = &loaded.model;
    for id in m.fiber_ids() {
        assert_eq!(m.staging[id], 1);
    }
    assert!(serialize_model(&loaded).contains("[stages]"));
}

#[test]
fn malformed_files_are_rejected() {
    assert!(matches!(
        parse_model::<Rational>("x 2\n"),
        Err(FormatError::LineOutsideSection(_))
    ));
    assert!(matches!(
        parse_model::<Rational>("[algebra]\nx 2\n"),
        Err(FormatError::MissingSection("relative"))
    ));
    // Fiber generators listed before base ones.
    let shuffled = "[algebra]\nx 2\ny 3\n[differential]\ny = x^2\n\
                    [relative]\nbase = y\nfiber = x\n";
    assert!(matches!(
        parse_model::<Rational>(shuffled),
        Err(FormatError::RelativeOrder)
    ));
    // d does not square to zero.
    let broken = "[algebra]\nx 2\ny 3\nz 4\n[differential]\ny = x^2\nz = y\n\
                  [relative]\nbase = x, y, z\nfiber =\n";
    assert!(matches!(
        parse_model::<Rational>(broken),
        Err(FormatError::Model(_) | FormatError::Algebra(_))
    ));
}

#[test]
fn certificates_reject_misplaced_namespaces() {
    let f = parse_model::<Rational>(model_text("hopf_trivial").unwrap()).unwrap();
    let g = parse_model::<Rational>(model_text("hopf_map").unwrap()).unwrap();
    let bad = "[certificate]\nepsilon = 3\n\n[phi]\nB.x = A.x\n";
    match parse_certificate::<Rational>(bad, &f.model, &g.model) {
        Err(FormatError::WrongPrefix { .. }) => {}
        other => panic!("expected a namespace complaint, got {other:?}"),
    }
    let mixed = "[certificate]\nepsilon = 3\n\n[phi]\nA.y = B.x*A.xb\n";
    match parse_certificate::<Rational>(mixed, &f.model, &g.model) {
        Err(FormatError::WrongPrefix { .. }) => {}
        other => panic!("expected a namespace complaint, got {other:?}"),
    }
    let bad_eps = "[certificate]\nepsilon = inf\n";
    match parse_certificate::<Rational>(bad_eps, &f.model, &g.model) {
        Err(FormatError::BadEpsilon(_)) => {}
        other => panic!("expected an epsilon complaint, got {other:?}"),
    }
}
