//! Certified lower bounds: mechanisms that refute the existence of an
//! interleaving at a given ε between two filtered models.
//!
//! Every mechanism is sound: when it fires, no ε′-interleaving exists for any
//! ε′ in the half-open pattern interval [ε, ε + ½), and by monotonicity the
//! interleaving distance is at least ε + ½.

use crate::mapspace::{algebra_map_space, MapSpaceVerdict};
use crate::solver::{poly_determinant, refute, Poly, System};
use cdga_core::Monomial;
use distances::{barcode_distance, HalfValue};
use field_linalg::{Matrix, Scalar};
use persistence_theta::{
    barcode, persistence_cohomology, persistence_linear_homology, Barcode, PersistenceCdga,
    PersistenceModule, ThetaError,
};
use std::collections::HashMap;
use sullivan_models::GradedCohomology;

/// Which obstruction mechanism fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mechanism {
    /// A cohomology transition would have to factor through zero (or through
    /// a module too small to carry it).
    ZeroFactorH,
    /// The same, at the level of the homology of the indecomposables.
    ZeroFactorHQ,
    /// A factor map would have to be a graded-algebra map that cannot exist
    /// because of nilpotency or rigidity constraints.
    NilpotentFactor,
}

impl std::fmt::Display for Mechanism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Mechanism::ZeroFactorH => "ZeroFactorH",
            Mechanism::ZeroFactorHQ => "ZeroFactorHQ",
            Mechanism::NilpotentFactor => "NilpotentFactor",
        };
        write!(f, "{name}")
    }
}

/// A single fired obstruction with its location.
#[derive(Debug, Clone)]
pub struct ObstructionWitness {
    pub mechanism: Mechanism,
    pub degree: usize,
    pub stage: u32,
    pub description: String,
}

/// Outcome of an obstruction run at one ε pattern. `Obstructed` collects
/// every mechanism that fired.
#[derive(Debug, Clone)]
pub enum ObstructionVerdict {
    Obstructed(Vec<ObstructionWitness>),
    NoObstructionFound,
}

impl ObstructionVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, ObstructionVerdict::Obstructed(_))
    }
}

/// Result of scanning the half-integer ε grid from below.
#[derive(Debug, Clone)]
pub struct ScanReport {
    /// Certified lower bound for the interleaving distance.
    pub bound: HalfValue,
    /// Per-pattern verdicts, indexed by ε in half-units.
    pub verdicts: Vec<(u32, ObstructionVerdict)>,
}

const C2_REFUTE_BUDGET: u64 = 500_000;

/// Precomputed data shared by all ε patterns of one model pair.
pub struct ObstructionEngine<'a, S: Scalar> {
    f: &'a PersistenceCdga<S>,
    g: &'a PersistenceCdga<S>,
    cap: usize,
    h_f: PersistenceModule<S>,
    h_g: PersistenceModule<S>,
    q_f: PersistenceModule<S>,
    q_g: PersistenceModule<S>,
    bc_h_f: Barcode,
    bc_h_g: Barcode,
    bc_q_f: Barcode,
    bc_q_g: Barcode,
    stage_h_f: Vec<GradedCohomology<S>>,
    stage_h_g: Vec<GradedCohomology<S>>,
}

impl<'a, S: Scalar> ObstructionEngine<'a, S> {
    pub fn new(
        f: &'a PersistenceCdga<S>,
        g: &'a PersistenceCdga<S>,
        cap: usize,
    ) -> Result<Self, ThetaError> {
        let h_f = persistence_cohomology(f, cap)?;
        let h_g = persistence_cohomology(g, cap)?;
        let q_f = persistence_linear_homology(f, cap);
        let q_g = persistence_linear_homology(g, cap);
        let bc_h_f = barcode(&h_f);
        let bc_h_g = barcode(&h_g);
        let bc_q_f = barcode(&q_f);
        let bc_q_g = barcode(&q_g);
        let stage_h_f = (0..=f.stabilization)
            .map(|s| f.stage_cohomology(s, cap))
            .collect::<Result<Vec<_>, _>>()?;
        let stage_h_g = (0..=g.stabilization)
            .map(|s| g.stage_cohomology(s, cap))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ObstructionEngine {
            f,
            g,
            cap,
            h_f,
            h_g,
            q_f,
            q_g,
            bc_h_f,
            bc_h_g,
            bc_q_f,
            bc_q_g,
            stage_h_f,
            stage_h_g,
        })
    }

    /// The truncation cutoff shared by the pair, if any.
    fn cutoff(&self) -> Option<u32> {
        match (self.f.model.truncated_at, self.g.model.truncated_at) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(u32::MAX).min(b.unwrap_or(u32::MAX))),
        }
    }

    /// Run every mechanism for the pattern [ε, ε+½) with ε in half-units.
    pub fn check(&self, eps_halves: u32) -> ObstructionVerdict {
        let mut witnesses = Vec::new();
        self.module_level(eps_halves, &mut witnesses);
        self.triangles(eps_halves, &mut witnesses);
        self.nilpotent_triangles(eps_halves, &mut witnesses);
        if eps_halves == 0 {
            self.stage_zero_rigidity(&mut witnesses);
        }
        if witnesses.is_empty() {
            ObstructionVerdict::NoObstructionFound
        } else {
            ObstructionVerdict::Obstructed(witnesses)
        }
    }

    /// Scan ε = 0, ½, 1, … up to `eps_max_halves` and certify the largest
    /// obstructed pattern.
    pub fn scan(&self, eps_max_halves: u32) -> ScanReport {
        let mut verdicts = Vec::new();
        let mut bound = HalfValue::ZERO;
        for h in 0..=eps_max_halves {
            let verdict = self.check(h);
            if verdict.is_obstructed() {
                bound = HalfValue::from_halves(h + 1);
            }
            verdicts.push((h, verdict));
        }
        ScanReport { bound, verdicts }
    }

    /// Module-level check: an ε-interleaving of the filtered models induces
    /// an ε-interleaving of the cohomology (and indecomposable-homology)
    /// persistence modules, so a barcode bottleneck distance above ε is an
    /// obstruction. Truncated inputs are clipped, which only lowers the
    /// distance, so firing remains sound.
    fn module_level(&self, eps_halves: u32, out: &mut Vec<ObstructionWitness>) {
        for (mechanism, a, b) in [
            (Mechanism::ZeroFactorH, &self.bc_h_f, &self.bc_h_g),
            (Mechanism::ZeroFactorHQ, &self.bc_q_f, &self.bc_q_g),
        ] {
            let report = barcode_distance(a, b, self.cap);
            let exceeds = match report.value {
                HalfValue::Infinite => true,
                HalfValue::Finite(v) => v > eps_halves,
            };
            if exceeds {
                let degree = report
                    .per_degree
                    .iter()
                    .max_by_key(|d| d.value)
                    .map_or(0, |d| d.degree);
                out.push(ObstructionWitness {
                    mechanism,
                    degree,
                    stage: 0,
                    description: format!(
                        "barcode interleaving distance {} exceeds {} (sharpest in degree {})",
                        report.value,
                        HalfValue::from_halves(eps_halves),
                        degree
                    ),
                });
            }
        }
    }

    /// Per-triangle check with pinpointed witnesses: the composite
    /// A(i) → A(i+2ε) of an interleaving factors through B(i+ε); if the
    /// composite is nonzero in a degree where B vanishes, no interleaving
    /// exists.
    fn triangles(&self, eps_halves: u32, out: &mut Vec<ObstructionWitness>) {
        let shift1 = eps_halves / 2;
        let shift2 = eps_halves;
        let max_stage = self.h_f.stabilization.max(self.h_g.stabilization);
        let stage_ok = |i: u32| match self.cutoff() {
            Some(t) => i + shift2 <= t,
            None => true,
        };
        for (mechanism, this, other, this_name, other_name) in [
            (Mechanism::ZeroFactorH, &self.h_f, &self.h_g, "first", "second"),
            (Mechanism::ZeroFactorH, &self.h_g, &self.h_f, "second", "first"),
            (Mechanism::ZeroFactorHQ, &self.q_f, &self.q_g, "first", "second"),
            (Mechanism::ZeroFactorHQ, &self.q_g, &self.q_f, "second", "first"),
        ] {
            for i in 0..=max_stage {
                if !stage_ok(i) {
                    continue;
                }
                for n in 0..=self.cap {
                    let from = (i.min(this.stabilization)) as usize;
                    let to = ((i + shift2).min(this.stabilization)) as usize;
                    let composite = this.degrees[n].composite(from, to);
                    let nonzero = (0..composite.rows())
                        .any(|r| (0..composite.cols()).any(|c| !composite.get(r, c).is_zero()));
                    if !nonzero {
                        continue;
                    }
                    let mid = ((i + shift1).min(other.stabilization)) as usize;
                    if other.degrees[n].dims[mid] == 0 {
                        out.push(ObstructionWitness {
                            mechanism,
                            degree: n,
                            stage: i,
                            description: format!(
                                "degree-{n} transition of the {this_name} model from stage {i} \
                                 to {} is nonzero but must factor through the {other_name} \
                                 model at stage {}, which vanishes there",
                                i + shift2,
                                i + shift1
                            ),
                        });
                    }
                }
            }
        }
    }

    /// Nilpotency check: the factor map H(A(i)) → H(B(i+ε)) of an
    /// interleaving is a graded-algebra map; if every such map vanishes in a
    /// degree where the composite H(A(i)) → H(A(i+2ε)) does not, no
    /// interleaving exists.
    fn nilpotent_triangles(&self, eps_halves: u32, out: &mut Vec<ObstructionWitness>) {
        let shift1 = eps_halves / 2;
        let shift2 = eps_halves;
        let max_stage = self.h_f.stabilization.max(self.h_g.stabilization);
        let stage_ok = |i: u32| match self.cutoff() {
            Some(t) => i + shift2 <= t,
            None => true,
        };
        let sides = [
            (
                &self.h_f,
                &self.stage_h_f,
                &self.f.model.algebra,
                &self.stage_h_g,
                &self.g.model.algebra,
                self.g.stabilization,
                "first",
                "second",
            ),
            (
                &self.h_g,
                &self.stage_h_g,
                &self.g.model.algebra,
                &self.stage_h_f,
                &self.f.model.algebra,
                self.f.stabilization,
                "second",
                "first",
            ),
        ];
        for (module, this_h, this_alg, other_h, other_alg, other_stab, this_name, other_name) in
            sides
        {
            for i in 0..=max_stage {
                if !stage_ok(i) {
                    continue;
                }
                let from = (i.min(module.stabilization)) as usize;
                let to = ((i + shift2).min(module.stabilization)) as usize;
                let mid = ((i + shift1).min(other_stab)) as usize;
                for n in 1..=self.cap / 2 {
                    let composite = module.degrees[n].composite(from, to);
                    let nonzero = (0..composite.rows())
                        .any(|r| (0..composite.cols()).any(|c| !composite.get(r, c).is_zero()));
                    if !nonzero {
                        continue;
                    }
                    if other_h[mid].degree(n).dim() == 0 {
                        // The zero-factor mechanism already covers this.
                        continue;
                    }
                    let verdict = algebra_map_space(
                        this_alg,
                        &this_h[from],
                        other_alg,
                        &other_h[mid],
                        n,
                    );
                    if verdict == MapSpaceVerdict::OnlyTrivial {
                        out.push(ObstructionWitness {
                            mechanism: Mechanism::NilpotentFactor,
                            degree: n,
                            stage: i,
                            description: format!(
                                "degree-{n} transition of the {this_name} model from stage {i} \
                                 to {} is nonzero, but every graded-algebra map into the \
                                 {other_name} model's cohomology at stage {} vanishes in \
                                 degree {n}",
                                i + shift2,
                                i + shift1
                            ),
                        });
                    }
                }
            }
        }
    }

    /// Rigidity at ε ∈ [0, ½): the stage-0 components of an interleaving are
    /// then mutually inverse up to homotopy, and between minimal algebras
    /// with generators in degrees ≥ 2 a homotopy equivalence is an
    /// isomorphism. The isomorphism must additionally be compatible with
    /// which indecomposable classes die along each filtration. If the
    /// constraint system for such an isomorphism is refutable, no
    /// interleaving with ε < ½ exists.
    fn stage_zero_rigidity(&self, out: &mut Vec<ObstructionWitness>) {
        if !self.stage_zero_gate(self.f) || !self.stage_zero_gate(self.g) {
            return;
        }
        let forward = self.stage_zero_iso_refuted(self.f, &self.q_f, self.g, &self.q_g);
        let backward = self.stage_zero_iso_refuted(self.g, &self.q_g, self.f, &self.q_f);
        if forward || backward {
            out.push(ObstructionWitness {
                mechanism: Mechanism::NilpotentFactor,
                degree: 0,
                stage: 0,
                description: "no stage-0 isomorphism is compatible with the differentials \
                              and with the indecomposable classes dying along the filtrations"
                    .to_string(),
            });
        }
    }

    /// The rigidity argument needs both stage-0 algebras minimal with all
    /// generators in degrees ≥ 2 (simply connected minimal models).
    fn stage_zero_gate(&self, model: &PersistenceCdga<S>) -> bool {
        let allowed = model.allowed_at(0);
        let gens = model.model.algebra.generators();
        (0..gens.len()).filter(|&id| allowed[id]).all(|id| {
            gens[id].degree >= 2
                && model
                    .model
                    .linear_differential(id)
                    .iter()
                    .all(|(c, _)| c.is_zero())
        })
    }

    /// Build and try to refute the constraint system for an isomorphism
    /// source(0) → target(0) compatible with indecomposable death stages.
    fn stage_zero_iso_refuted(
        &self,
        source: &PersistenceCdga<S>,
        source_q: &PersistenceModule<S>,
        target: &PersistenceCdga<S>,
        target_q: &PersistenceModule<S>,
    ) -> bool {
        let s_alg = &source.model.algebra;
        let t_alg = &target.model.algebra;
        let s_allowed = source.allowed_at(0);
        let t_allowed = target.allowed_at(0);
        let s_gens: Vec<usize> = (0..s_alg.generators().len())
            .filter(|&id| s_allowed[id])
            .collect();
        let t_gens: Vec<usize> = (0..t_alg.generators().len())
            .filter(|&id| t_allowed[id])
            .collect();
        // An isomorphism needs matching generator counts per degree.
        let count = |gens: &[usize], alg: &cdga_core::FreeCdga<S>, n: usize| {
            gens.iter().filter(|&&id| alg.generator(id).degree == n).count()
        };
        let degrees: std::collections::BTreeSet<usize> = s_gens
            .iter()
            .map(|&id| s_alg.generator(id).degree)
            .chain(t_gens.iter().map(|&id| t_alg.generator(id).degree))
            .collect();
        for &n in &degrees {
            if count(&s_gens, s_alg, n) != count(&t_gens, t_alg, n) {
                return true;
            }
        }
        if s_gens.is_empty() {
            return false;
        }
        // Unknowns: one per (source generator, equal-degree target monomial).
        let mut system: System<S> = System::new();
        let mut next_var = 0usize;
        let mut vars: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut images: HashMap<usize, Vec<(usize, Monomial)>> = HashMap::new();
        for &gid in &s_gens {
            let degree = s_alg.generator(gid).degree;
            let monomials = t_alg.monomials_of_degree(degree, &t_allowed);
            let mut image = Vec::new();
            for m in monomials {
                vars.insert((gid, m.clone()), next_var);
                image.push((next_var, m));
                next_var += 1;
            }
            images.insert(gid, image);
        }
        // Polynomial-coefficient elements of the target algebra.
        type PolyElement<S> = HashMap<Monomial, Poly<S>>;
        let add_into = |acc: &mut PolyElement<S>, m: &Monomial, p: &Poly<S>| {
            let entry = acc.entry(m.clone()).or_insert_with(Poly::zero);
            *entry = entry.add(p);
        };
        let mul_elements = |a: &PolyElement<S>, b: &PolyElement<S>| -> PolyElement<S> {
            let mut out = PolyElement::new();
            for (ma, pa) in a {
                for (mb, pb) in b {
                    if let Some((negative, m)) = t_alg.mul_monomials(ma, mb) {
                        let p = pa.mul(pb);
                        let p = if negative { p.neg() } else { p };
                        add_into(&mut out, &m, &p);
                    }
                }
            }
            out.retain(|_, p| !p.is_zero());
            out
        };
        let image_of_gen = |gid: usize| -> PolyElement<S> {
            images[&gid]
                .iter()
                .map(|(var, m)| (m.clone(), Poly::var(*var)))
                .collect()
        };
        // Chain conditions: d(φ(g)) = φ(d(g)) coefficientwise.
        for &gid in &s_gens {
            let mut lhs = PolyElement::new();
            for (var, m) in &images[&gid] {
                let dm = t_alg.apply_differential(&cdga_core::Element::monomial(
                    S::one(),
                    m.clone(),
                ));
                for (c, mono) in &dm.terms {
                    add_into(&mut lhs, mono, &Poly::var(*var).scale(c));
                }
            }
            let mut rhs = PolyElement::new();
            for (c, mono) in &s_alg.differential_of(gid).terms {
                let mut product: PolyElement<S> =
                    [(Monomial::one(), Poly::constant(c.clone()))].into_iter().collect();
                for &(fid, e) in &mono.factors {
                    let factor = image_of_gen(fid);
                    for _ in 0..e {
                        product = mul_elements(&product, &factor);
                    }
                }
                for (m, p) in product {
                    add_into(&mut rhs, &m, &p);
                }
            }
            let monomials: std::collections::HashSet<&Monomial> =
                lhs.keys().chain(rhs.keys()).collect();
            for m in monomials {
                let l = lhs.get(m).cloned().unwrap_or_else(Poly::zero);
                let r = rhs.get(m).cloned().unwrap_or_else(Poly::zero);
                let eq = l.sub(&r);
                if !eq.is_zero() {
                    system.equations.push(eq);
                }
            }
        }
        // Isomorphism conditions: the generator-linear part is invertible in
        // every degree.
        for &n in &degrees {
            let s_deg: Vec<usize> = s_gens
                .iter()
                .copied()
                .filter(|&id| s_alg.generator(id).degree == n)
                .collect();
            let t_deg: Vec<usize> = t_gens
                .iter()
                .copied()
                .filter(|&id| t_alg.generator(id).degree == n)
                .collect();
            if s_deg.is_empty() {
                continue;
            }
            let rows: Vec<Vec<Poly<S>>> = s_deg
                .iter()
                .map(|&sid| {
                    t_deg
                        .iter()
                        .map(|&tid| {
                            let m = Monomial::generator(tid);
                            vars.get(&(sid, m))
                                .map_or_else(Poly::zero, |&v| Poly::var(v))
                        })
                        .collect()
                })
                .collect();
            system.nonzeros.push(poly_determinant(&rows));
        }
        // Death compatibility: an indecomposable class of the source that
        // dies by stage s must map to a class that also dies by stage s in
        // the target.
        let max_stage = source_q.stabilization.max(target_q.stabilization);
        for n in 0..=self.cap {
            let s_deg: Vec<usize> = s_gens
                .iter()
                .copied()
                .filter(|&id| s_alg.generator(id).degree == n)
                .collect();
            if s_deg.is_empty() {
                continue;
            }
            let t_deg: Vec<usize> = t_gens
                .iter()
                .copied()
                .filter(|&id| t_alg.generator(id).degree == n)
                .collect();
            for s in 1..=max_stage {
                let from = 0usize;
                let to = (s.min(source_q.stabilization)) as usize;
                let composite = source_q.degrees[n].composite(from, to);
                for v in composite.kernel_basis() {
                    // Image of the kernel vector under the linear part.
                    let image: Vec<Poly<S>> = t_deg
                        .iter()
                        .map(|&tid| {
                            let m = Monomial::generator(tid);
                            s_deg
                                .iter()
                                .zip(&v)
                                .fold(Poly::zero(), |acc, (&sid, c)| {
                                    match vars.get(&(sid, m.clone())) {
                                        Some(&var) => acc.add(&Poly::var(var).scale(c)),
                                        None => acc,
                                    }
                                })
                        })
                        .collect();
                    // Boundary space of the target's stage-s linear complex.
                    let t_allowed_s = target.allowed_at(s);
                    let t_deg_s: Vec<usize> = (0..t_alg.generators().len())
                        .filter(|&id| {
                            t_allowed_s[id] && t_alg.generator(id).degree == n
                        })
                        .collect();
                    let mut boundaries: Vec<Vec<S>> = Vec::new();
                    for id in (0..t_alg.generators().len()).filter(|&id| {
                        t_allowed_s[id] && n >= 1 && t_alg.generator(id).degree == n - 1
                    }) {
                        let mut row = vec![S::zero(); t_deg_s.len()];
                        for (c, gid) in target.model.linear_differential(id) {
                            if let Some(pos) = t_deg_s.iter().position(|&x| x == gid) {
                                row[pos] = row[pos].add(&c);
                            }
                        }
                        if row.iter().any(|c| !c.is_zero()) {
                            boundaries.push(row);
                        }
                    }
                    let annihilator: Vec<Vec<S>> = if boundaries.is_empty() {
                        (0..t_deg_s.len())
                            .map(|j| {
                                let mut e = vec![S::zero(); t_deg_s.len()];
                                e[j] = S::one();
                                e
                            })
                            .collect()
                    } else {
                        Matrix::from_rows(boundaries).kernel_basis()
                    };
                    // Embed the image (supported on stage-0 generators) into
                    // the stage-s coordinate list and pair with each
                    // annihilator row.
                    for r in annihilator {
                        let mut eq = Poly::zero();
                        for (pos, &tid) in t_deg_s.iter().enumerate() {
                            if let Some(k) = t_deg.iter().position(|&x| x == tid) {
                                eq = eq.add(&image[k].scale(&r[pos]));
                            }
                        }
                        if !eq.is_zero() {
                            system.equations.push(eq);
                        }
                    }
                }
            }
        }
        refute(&system, C2_REFUTE_BUDGET)
    }
}

/// One-shot obstruction run for the pattern [ε, ε+½).
pub fn obstruct<S: Scalar>(
    f: &PersistenceCdga<S>,
    g: &PersistenceCdga<S>,
    eps_halves: u32,
    cap: usize,
) -> Result<ObstructionVerdict, ThetaError> {
    Ok(ObstructionEngine::new(f, g, cap)?.check(eps_halves))
}

/// Scan all patterns up to `eps_max_halves` and certify a lower bound.
pub fn lower_bound_scan<S: Scalar>(
    f: &PersistenceCdga<S>,
    g: &PersistenceCdga<S>,
    cap: usize,
    eps_max_halves: u32,
) -> Result<ScanReport, ThetaError> {
    Ok(ObstructionEngine::new(f, g, cap)?.scan(eps_max_halves))
}
