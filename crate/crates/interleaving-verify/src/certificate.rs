//! Interleaving certificates: a pair of stage-shifted morphisms between the
//! colimit algebras of two filtered models, plus two homotopies closing the
//! triangles. A verified certificate is a proof of an upper bound for the
//! homotopy-category interleaving distance.

use cdga_core::{
    compose, verify_homotopy, verify_morphism, Homotopy, HomotopyError, Morphism, MorphismError,
};
use field_linalg::Scalar;
use persistence_theta::PersistenceCdga;

/// A certificate for an interleaving at ε (in half-units): φ from the
/// F-colimit to the G-colimit with stage shift ≤ ⌊ε⌋, ψ back, and
/// homotopies H_F : ψ∘φ ≃ id_F and H_G : φ∘ψ ≃ id_G with stage shift ≤ ⌊2ε⌋.
#[derive(Debug, Clone)]
pub struct InterleavingCertificate<S: Scalar> {
    pub eps_halves: u32,
    pub phi: Morphism<S>,
    pub psi: Morphism<S>,
    pub homotopy_f: Homotopy<S>,
    pub homotopy_g: Homotopy<S>,
}

/// Which of the six certificate checks failed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error("phi is not a CDGA morphism: {0}")]
    PhiInvalid(MorphismError),
    #[error("psi is not a CDGA morphism: {0}")]
    PsiInvalid(MorphismError),
    #[error("{map} violates the stage shift on `{name}`: stage {found} > {stage} + {shift}")]
    StageShift {
        map: &'static str,
        name: String,
        stage: u32,
        found: u32,
        shift: u32,
    },
    #[error("homotopy on the F side fails: {0}")]
    HomotopyFInvalid(HomotopyError),
    #[error("homotopy on the G side fails: {0}")]
    HomotopyGInvalid(HomotopyError),
    #[error("homotopy on the {side} side violates the stage shift on `{name}`")]
    HomotopyStageShift { side: &'static str, name: String },
}

fn istage_support<S: Scalar>(staging: &[u32], e: &cdga_core::IElement<S>) -> u32 {
    e.terms
        .iter()
        .flat_map(|t| t.mono.support())
        .map(|id| staging[id])
        .max()
        .unwrap_or(0)
}

/// Run all six checks of a certificate against two filtered models.
pub fn verify_certificate<S: Scalar>(
    cert: &InterleavingCertificate<S>,
    f: &PersistenceCdga<S>,
    g: &PersistenceCdga<S>,
) -> Result<(), CertificateError> {
    let fa = &f.model.algebra;
    let ga = &g.model.algebra;
    let shift1 = cert.eps_halves / 2;
    let shift2 = cert.eps_halves;
    // 1–2: morphism validity.
    verify_morphism(&cert.phi, fa, ga).map_err(CertificateError::PhiInvalid)?;
    verify_morphism(&cert.psi, ga, fa).map_err(CertificateError::PsiInvalid)?;
    // 3: stage-shift bounds for both morphisms.
    for (id, gen) in fa.generators().iter().enumerate() {
        let found = ga.stage_support(&cert.phi.assignment[id], &g.model.staging);
        let stage = f.model.staging[id];
        if found > stage + shift1 {
            return Err(CertificateError::StageShift {
                map: "phi",
                name: gen.name.clone(),
                stage,
                found,
                shift: shift1,
            });
        }
    }
    for (id, gen) in ga.generators().iter().enumerate() {
        let found = fa.stage_support(&cert.psi.assignment[id], &f.model.staging);
        let stage = g.model.staging[id];
        if found > stage + shift1 {
            return Err(CertificateError::StageShift {
                map: "psi",
                name: gen.name.clone(),
                stage,
                found,
                shift: shift1,
            });
        }
    }
    // 4–5: the two homotopies connect the round trips to the identities.
    let psi_phi = compose(&cert.phi, &cert.psi, fa);
    let id_f = Morphism::identity(fa);
    verify_homotopy(&cert.homotopy_f, fa, fa, &psi_phi, &id_f)
        .map_err(CertificateError::HomotopyFInvalid)?;
    let phi_psi = compose(&cert.psi, &cert.phi, ga);
    let id_g = Morphism::identity(ga);
    verify_homotopy(&cert.homotopy_g, ga, ga, &phi_psi, &id_g)
        .map_err(CertificateError::HomotopyGInvalid)?;
    // 6: homotopy stage compatibility.
    for (id, gen) in fa.generators().iter().enumerate() {
        let found = istage_support(&f.model.staging, &cert.homotopy_f.assignment[id]);
        if found > f.model.staging[id] + shift2 {
            return Err(CertificateError::HomotopyStageShift {
                side: "F",
                name: gen.name.clone(),
            });
        }
    }
    for (id, gen) in ga.generators().iter().enumerate() {
        let found = istage_support(&g.model.staging, &cert.homotopy_g.assignment[id]);
        if found > g.model.staging[id] + shift2 {
            return Err(CertificateError::HomotopyStageShift {
                side: "G",
                name: gen.name.clone(),
            });
        }
    }
    Ok(())
}
