//! A small refutation engine for polynomial constraint systems over an exact
//! field: equations `p = 0` together with side conditions `q ≠ 0` in scalar
//! unknowns. The engine either refutes the system (no solution exists), finds
//! an explicit witness assignment, or honestly reports that it cannot decide.
//!
//! The refutation rules are deliberately incomplete — no Gröbner bases — but
//! they cover the shapes that arise from graded-algebra map constraints:
//! single-monomial equations, sums of even powers over an ordered field, and
//! linear elimination with a coefficient known to be nonzero.

use field_linalg::Scalar;
use std::collections::{BTreeMap, BTreeSet};

/// A multivariate polynomial: a sum of terms `coeff · ∏ var^exp`, with the
/// variable lists sorted and the term list sorted by variable part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<S> {
    pub terms: Vec<(S, Vec<(usize, u32)>)>,
}

fn merge_poly_terms<S: Scalar>(mut terms: Vec<(S, Vec<(usize, u32)>)>) -> Poly<S> {
    terms.sort_by(|a, b| a.1.cmp(&b.1));
    let mut out: Vec<(S, Vec<(usize, u32)>)> = Vec::new();
    for (c, m) in terms {
        match out.last_mut() {
            Some((lc, lm)) if *lm == m => *lc = lc.add(&c),
            _ => out.push((c, m)),
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    Poly { terms: out }
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(c, Vec::new())],
            }
        }
    }

    pub fn var(v: usize) -> Self {
        Poly {
            terms: vec![(S::one(), vec![(v, 1)])],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(c)` when the polynomial is the constant `c` (possibly zero).
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 if self.terms[0].1.is_empty() => Some(self.terms[0].0.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        merge_poly_terms(terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.neg(), m.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, m)| (t.mul(c), m.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let mut m: BTreeMap<usize, u32> = ma.iter().cloned().collect();
                for &(v, e) in mb {
                    *m.entry(v).or_insert(0) += e;
                }
                terms.push((ca.mul(cb), m.into_iter().collect()));
            }
        }
        merge_poly_terms(terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(S::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn vars(&self) -> BTreeSet<usize> {
        self.terms
            .iter()
            .flat_map(|(_, m)| m.iter().map(|&(v, _)| v))
            .collect()
    }

    /// Substitute `var := value` (a polynomial) everywhere.
    pub fn substitute(&self, var: usize, value: &Poly<S>) -> Self {
        let mut out = Self::zero();
        for (c, m) in &self.terms {
            let mut term = Self::constant(c.clone());
            for &(v, e) in m {
                if v == var {
                    term = term.mul(&value.pow(e));
                } else {
                    term = term.mul(&Poly {
                        terms: vec![(S::one(), vec![(v, e)])],
                    });
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Degree in one variable.
    fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(_, m)| m.iter().find(|&&(v, _)| v == var).map_or(0, |&(_, e)| e))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient polynomials of `var^k` for k = 0..=deg.
    fn coefficients_in(&self, var: usize) -> Vec<Poly<S>> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(); deg + 1];
        for (c, m) in &self.terms {
            let k = m.iter().find(|&&(v, _)| v == var).map_or(0, |&(_, e)| e) as usize;
            let rest: Vec<(usize, u32)> = m.iter().cloned().filter(|&(v, _)| v != var).collect();
            out[k] = out[k].add(&Poly {
                terms: vec![(c.clone(), rest)],
            });
        }
        out
    }

    /// The exact evaluation under a full assignment of its variables;
    /// `None` when some variable is unassigned.
    pub fn eval(&self, assignment: &BTreeMap<usize, S>) -> Option<S> {
        let mut total = S::zero();
        for (c, m) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m {
                let x = assignment.get(&v)?;
                for _ in 0..e {
                    value = value.mul(x);
                }
            }
            total = total.add(&value);
        }
        Some(total)
    }

    /// Substitute every assigned variable by its value.
    pub fn partial_eval(&self, assignment: &BTreeMap<usize, S>) -> Self {
        let mut out = self.clone();
        for (&v, value) in assignment {
            if out.vars().contains(&v) {
                out = out.substitute(v, &Poly::constant(value.clone()));
            }
        }
        out
    }

    /// The greatest common monomial of all terms (empty for a constant or
    /// zero polynomial).
    fn gcd_monomial(&self) -> Vec<(usize, u32)> {
        let mut iter = self.terms.iter();
        let Some((_, first)) = iter.next() else {
            return Vec::new();
        };
        let mut gcd: BTreeMap<usize, u32> = first.iter().cloned().collect();
        for (_, m) in iter {
            let this: BTreeMap<usize, u32> = m.iter().cloned().collect();
            gcd = gcd
                .into_iter()
                .filter_map(|(v, e)| this.get(&v).map(|&e2| (v, e.min(e2))))
                .collect();
        }
        gcd.into_iter().collect()
    }

    /// Divide by a monomial that divides every term.
    fn divide_monomial(&self, m: &[(usize, u32)]) -> Self {
        let divisor: BTreeMap<usize, u32> = m.iter().cloned().collect();
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(c, tm)| {
                    let reduced: Vec<(usize, u32)> = tm
                        .iter()
                        .filter_map(|&(v, e)| {
                            let e = e - divisor.get(&v).copied().unwrap_or(0);
                            (e > 0).then_some((v, e))
                        })
                        .collect();
                    (c.clone(), reduced)
                })
                .collect(),
        }
    }
}

/// A constraint system: every `equations` entry must vanish and every
/// `nonzeros` entry must not.
#[derive(Debug, Clone)]
pub struct System<S> {
    pub equations: Vec<Poly<S>>,
    pub nonzeros: Vec<Poly<S>>,
}

impl<S: Scalar> System<S> {
    pub fn new() -> Self {
        System {
            equations: Vec::new(),
            nonzeros: Vec::new(),
        }
    }

    pub fn vars(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for p in self.equations.iter().chain(&self.nonzeros) {
            out.extend(p.vars());
        }
        out
    }
}

impl<S: Scalar> Default for System<S> {
    fn default() -> Self {
        Self::new()
    }
}

/// Search state: the simplified system plus the set of variables known to be
/// nonzero on the current branch.
#[derive(Debug, Clone)]
struct BranchState<S> {
    equations: Vec<Poly<S>>,
    nonzeros: Vec<Poly<S>>,
    nonzero_vars: BTreeSet<usize>,
    /// Set when a variable known nonzero is forced to zero.
    contradiction: bool,
}

enum StepOutcome {
    Refuted,
    Progress,
    Stuck,
}

impl<S: Scalar> BranchState<S> {
    fn substitute(&mut self, var: usize, value: &Poly<S>) {
        if value.is_zero() && self.nonzero_vars.contains(&var) {
            self.contradiction = true;
        }
        for p in self.equations.iter_mut().chain(self.nonzeros.iter_mut()) {
            *p = p.substitute(var, value);
        }
        self.nonzero_vars.remove(&var);
    }

    /// Eliminate `var` from an equation `A·var + R = 0` whose leading
    /// coefficient `A` is nonzero on this branch, clearing denominators:
    /// every polynomial `Σ pₖ·varᵏ` becomes `Σ pₖ·(−R)ᵏ·A^{K−k}` —
    /// equivalent because `A ≠ 0`.
    fn eliminate_cleared(&mut self, var: usize, a: &Poly<S>, r: &Poly<S>) {
        let minus_r = r.neg();
        let rewrite = |p: &Poly<S>| -> Poly<S> {
            let coeffs = p.coefficients_in(var);
            let top = coeffs.len() as u32 - 1;
            let mut out = Poly::zero();
            for (k, pk) in coeffs.iter().enumerate() {
                let k = k as u32;
                out = out.add(&pk.mul(&minus_r.pow(k)).mul(&a.pow(top - k)));
            }
            out
        };
        for p in self.equations.iter_mut() {
            *p = rewrite(p);
        }
        for p in self.nonzeros.iter_mut() {
            *p = rewrite(p);
        }
        self.nonzero_vars.remove(&var);
    }

    /// One round of simplification; `Refuted` is definitive for the branch.
    fn step(&mut self) -> StepOutcome {
        if self.contradiction {
            return StepOutcome::Refuted;
        }
        // Constant checks, zero removal, nonzero-monomial variable marking.
        let mut progressed = false;
        let mut i = 0;
        while i < self.equations.len() {
            match self.equations[i].as_constant() {
                Some(c) if c.is_zero() => {
                    self.equations.swap_remove(i);
                    progressed = true;
                }
                Some(_) => return StepOutcome::Refuted,
                None => i += 1,
            }
        }
        let mut i = 0;
        while i < self.nonzeros.len() {
            let p = &self.nonzeros[i];
            if p.is_zero() {
                return StepOutcome::Refuted;
            }
            if let Some(_c) = p.as_constant() {
                self.nonzeros.swap_remove(i);
                progressed = true;
                continue;
            }
            if p.terms.len() == 1 {
                // A single-term side condition: every variable in the
                // monomial must be nonzero, and then the condition holds.
                let vars: Vec<usize> = p.terms[0].1.iter().map(|&(v, _)| v).collect();
                self.nonzero_vars.extend(vars);
                self.nonzeros.swap_remove(i);
                progressed = true;
                continue;
            }
            i += 1;
        }
        if progressed {
            return StepOutcome::Progress;
        }
        // Single-monomial equations with exactly one not-known-nonzero
        // variable: that variable must be zero.
        for i in 0..self.equations.len() {
            if self.equations[i].terms.len() != 1 {
                continue;
            }
            let unknown: Vec<usize> = self.equations[i].terms[0]
                .1
                .iter()
                .map(|&(v, _)| v)
                .filter(|v| !self.nonzero_vars.contains(v))
                .collect();
            match unknown.len() {
                0 => return StepOutcome::Refuted,
                1 => {
                    self.equations.swap_remove(i);
                    self.substitute(unknown[0], &Poly::zero());
                    return StepOutcome::Progress;
                }
                _ => {}
            }
        }
        // Even-power definiteness over an ordered field: after removing the
        // common monomial factor, an equation `g·(Σ cᵢ·xᵢ^{2kᵢ}) = 0` with
        // all cᵢ of one sign forces g = 0 or all xᵢ = 0; when every variable
        // of g is known nonzero, all xᵢ must vanish.
        if S::sums_of_squares_definite() {
            for i in 0..self.equations.len() {
                let gcd = self.equations[i].gcd_monomial();
                let core = self.equations[i].divide_monomial(&gcd);
                let definite = core.terms.len() > 1
                    && core.terms.iter().all(|(c, m)| {
                        m.len() == 1 && m[0].1 % 2 == 0 && c.real_sign().is_some()
                    })
                    && core
                        .terms
                        .iter()
                        .map(|(c, _)| c.real_sign())
                        .collect::<BTreeSet<_>>()
                        .len()
                        == 1;
                if definite && gcd.iter().all(|&(v, _)| self.nonzero_vars.contains(&v)) {
                    let vars: Vec<usize> =
                        core.terms.iter().map(|(_, m)| m[0].0).collect();
                    self.equations.swap_remove(i);
                    for v in vars {
                        self.substitute(v, &Poly::zero());
                    }
                    return StepOutcome::Progress;
                }
            }
        }
        // Linear elimination: an equation of degree 1 in some variable whose
        // coefficient is a constant or a monomial in known-nonzero variables.
        for i in 0..self.equations.len() {
            let vars: Vec<usize> = self.equations[i].vars().into_iter().collect();
            for &v in &vars {
                if self.equations[i].degree_in(v) != 1 {
                    continue;
                }
                let coeffs = self.equations[i].coefficients_in(v);
                let a = &coeffs[1];
                let known_nonzero = a.terms.len() == 1
                    && a.terms[0]
                        .1
                        .iter()
                        .all(|&(w, _)| self.nonzero_vars.contains(&w));
                if !known_nonzero {
                    continue;
                }
                let r = coeffs[0].clone();
                let a = a.clone();
                self.equations.swap_remove(i);
                if let Some(c) = a.as_constant() {
                    let inv = c.inverse().expect("constant coefficient is nonzero");
                    self.substitute(v, &r.neg().scale(&inv));
                } else {
                    self.eliminate_cleared(v, &a, &r);
                }
                return StepOutcome::Progress;
            }
        }
        StepOutcome::Stuck
    }

    fn simplify(&mut self) -> bool {
        loop {
            match self.step() {
                StepOutcome::Refuted => return false,
                StepOutcome::Progress => {}
                StepOutcome::Stuck => return true,
            }
        }
    }
}

fn refute_branch<S: Scalar>(mut state: BranchState<S>, budget: &mut u64) -> bool {
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    if !state.simplify() {
        return true;
    }
    if state.equations.is_empty() {
        // Over an infinite field the remaining (nonconstant, nonzero)
        // side conditions are simultaneously satisfiable.
        return false;
    }
    // Case split on a single-monomial equation: some variable in it is zero.
    for eq in &state.equations {
        if eq.terms.len() == 1 {
            let candidates: Vec<usize> = eq.terms[0]
                .1
                .iter()
                .map(|&(v, _)| v)
                .filter(|v| !state.nonzero_vars.contains(v))
                .collect();
            if !candidates.is_empty() {
                return candidates.iter().all(|&v| {
                    let mut branch = state.clone();
                    branch.substitute(v, &Poly::zero());
                    refute_branch(branch, budget)
                });
            }
        }
    }
    // General split: pick the first unmarked variable and branch on
    // `v = 0` versus `v ≠ 0`.
    let var = state
        .equations
        .iter()
        .flat_map(|p| p.vars())
        .find(|v| !state.nonzero_vars.contains(v));
    let Some(var) = var else {
        return false;
    };
    let mut zero_branch = state.clone();
    zero_branch.substitute(var, &Poly::zero());
    if !refute_branch(zero_branch, budget) {
        return false;
    }
    let mut nonzero_branch = state;
    nonzero_branch.nonzero_vars.insert(var);
    refute_branch(nonzero_branch, budget)
}

/// Try to prove the system has no solution. `true` is a definitive
/// refutation; `false` means the engine could not refute it (the system may
/// or may not be solvable).
pub fn refute<S: Scalar>(system: &System<S>, budget: u64) -> bool {
    let state = BranchState {
        equations: system.equations.clone(),
        nonzeros: system.nonzeros.clone(),
        nonzero_vars: BTreeSet::new(),
        contradiction: false,
    };
    let mut budget = budget;
    refute_branch(state, &mut budget)
}

/// Depth-first witness search: assign palette values to variables in order,
/// propagating variables forced by linear equations and pruning on any
/// fully-evaluated violated constraint. Returns a satisfying assignment.
pub fn find_witness<S: Scalar>(system: &System<S>, budget: u64) -> Option<BTreeMap<usize, S>> {
    let vars: Vec<usize> = system.vars().into_iter().collect();
    let mut assignment = BTreeMap::new();
    let mut budget = budget;
    witness_branch(system, &vars, &mut assignment, &mut budget)
}

fn propagate_forced<S: Scalar>(
    system: &System<S>,
    assignment: &mut BTreeMap<usize, S>,
) -> Result<Vec<usize>, ()> {
    let mut forced = Vec::new();
    loop {
        let mut changed = false;
        for eq in &system.equations {
            let reduced = eq.partial_eval(assignment);
            if let Some(c) = reduced.as_constant() {
                if !c.is_zero() {
                    for v in &forced {
                        assignment.remove(v);
                    }
                    return Err(());
                }
                continue;
            }
            let free: BTreeSet<usize> = reduced.vars();
            if free.len() == 1 {
                let v = *free.iter().next().unwrap();
                if reduced.degree_in(v) == 1 {
                    let coeffs = reduced.coefficients_in(v);
                    let a = coeffs[1].as_constant().expect("single free variable");
                    let r = coeffs[0].as_constant().expect("single free variable");
                    let value = r.neg().div(&a);
                    assignment.insert(v, value);
                    forced.push(v);
                    changed = true;
                }
            }
        }
        for nz in &system.nonzeros {
            if let Some(c) = nz.eval(assignment) {
                if c.is_zero() {
                    for v in &forced {
                        assignment.remove(v);
                    }
                    return Err(());
                }
            }
        }
        if !changed {
            return Ok(forced);
        }
    }
}

fn witness_branch<S: Scalar>(
    system: &System<S>,
    vars: &[usize],
    assignment: &mut BTreeMap<usize, S>,
    budget: &mut u64,
) -> Option<BTreeMap<usize, S>> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let forced = match propagate_forced(system, assignment) {
        Ok(forced) => forced,
        Err(()) => return None,
    };
    let next = vars.iter().find(|v| !assignment.contains_key(v)).copied();
    let result = match next {
        None => {
            let good = system
                .equations
                .iter()
                .all(|eq| eq.eval(assignment).is_some_and(|c| c.is_zero()))
                && system
                    .nonzeros
                    .iter()
                    .all(|nz| nz.eval(assignment).is_some_and(|c| !c.is_zero()));
            good.then(|| assignment.clone())
        }
        Some(var) => {
            let mut found = None;
            for value in S::witness_palette() {
                assignment.insert(var, value);
                if let Some(w) = witness_branch(system, vars, assignment, budget) {
                    found = Some(w);
                    break;
                }
                assignment.remove(&var);
            }
            if found.is_some() {
                return found;
            }
            None
        }
    };
    if result.is_none() {
        for v in forced {
            assignment.remove(&v);
        }
    }
    result
}

/// Determinant of a square matrix of polynomials, by cofactor expansion
/// along the first row (sizes here are small).
pub fn poly_determinant<S: Scalar>(rows: &[Vec<Poly<S>>]) -> Poly<S> {
    let n = rows.len();
    if n == 0 {
        return Poly::constant(S::one());
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut det = Poly::zero();
    for j in 0..n {
        let minor: Vec<Vec<Poly<S>>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter_map(|(k, p)| (k != j).then(|| p.clone()))
                    .collect()
            })
            .collect();
        let cofactor = rows[0][j].mul(&poly_determinant(&minor));
        det = if j % 2 == 0 {
            det.add(&cofactor)
        } else {
            det.sub(&cofactor)
        };
    }
    det
}
