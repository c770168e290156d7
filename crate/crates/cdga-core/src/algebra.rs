//! Free graded-commutative algebras on named generators, with canonical
//! (Koszul-sign-normalized) elements and a degree +1 differential.

use field_linalg::Scalar;
use std::collections::HashMap;
use std::fmt;

/// A named generator of a free CDGA. The id is its insertion index; the
/// canonical monomial order is insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// A monomial: exponent list `(generator id, exponent ≥ 1)` sorted by id.
/// Odd generators carry exponent exactly 1 (their square is zero).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub factors: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn generator(id: usize) -> Self {
        Monomial {
            factors: vec![(id, 1)],
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Ids of the generators occurring in this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.factors.iter().map(|&(id, _)| id)
    }
}

/// A canonical element: terms `(coefficient ≠ 0, monomial)` with pairwise
/// distinct monomials, sorted by monomial. The empty list is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<S> {
    pub terms: Vec<(S, Monomial)>,
}

impl<S: Scalar> Element<S> {
    pub fn zero() -> Self {
        Element { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Element {
            terms: vec![(S::one(), Monomial::one())],
        }
    }

    pub fn scalar(c: S) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Element {
                terms: vec![(c, Monomial::one())],
            }
        }
    }

    pub fn generator(id: usize) -> Self {
        Element {
            terms: vec![(S::one(), Monomial::generator(id))],
        }
    }

    pub fn monomial(c: S, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Element { terms: vec![(c, m)] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn neg(&self) -> Self {
        Element {
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
        Element {
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (a.mul(c), m.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        merge_terms(terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms
            .iter()
            .find(|(_, mm)| mm == m)
            .map(|(c, _)| c.clone())
            .unwrap_or_else(S::zero)
    }
}

/// Degree structure of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(usize),
    Mixed,
}

/// Merge like terms of an already-canonically-sorted-or-not term list into
/// canonical form (sorted, deduplicated, zero coefficients dropped).
fn merge_terms<S: Scalar>(mut terms: Vec<(S, Monomial)>) -> Element<S> {
    terms.sort_by(|a, b| a.1.cmp(&b.1));
    let mut out: Vec<(S, Monomial)> = Vec::with_capacity(terms.len());
    for (c, m) in terms {
        match out.last_mut() {
            Some((last_c, last_m)) if *last_m == m => {
                *last_c = last_c.add(&c);
                if last_c.is_zero() {
                    out.pop();
                }
            }
            _ => {
                if !c.is_zero() {
                    out.push((c, m));
                }
            }
        }
    }
    Element { terms: out }
}

/// A raw (unnormalized) term: coefficient and a factor sequence in arbitrary
/// order, possibly with repeated generators.
#[derive(Debug, Clone)]
pub struct RawTerm<S> {
    pub coeff: S,
    pub factors: Vec<(usize, u32)>,
}

/// Validation failures of a free CDGA.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("generator `{0}` duplicated")]
    DuplicateGenerator(String),
    #[error("generator `{name}` has degree {degree}; degrees must be >= 1")]
    BadDegree { name: String, degree: usize },
    #[error("d({name}) is not homogeneous of degree {expected}")]
    DifferentialDegree { name: String, expected: usize },
    #[error("d(d({name})) = {residue} != 0")]
    DSquared { name: String, residue: String },
    #[error("unknown generator id {0}")]
    UnknownGenerator(usize),
}

/// A free CDGA on finitely many named generators with a differential table
/// and a hard degree cap for all validity checks.
#[derive(Debug, Clone)]
pub struct FreeCdga<S: Scalar> {
    generators: Vec<Generator>,
    differential: Vec<Element<S>>,
    by_name: HashMap<String, usize>,
    cap: usize,
}

impl<S: Scalar> FreeCdga<S> {
    pub fn new(cap: usize) -> Self {
        FreeCdga {
            generators: Vec::new(),
            differential: Vec::new(),
            by_name: HashMap::new(),
            cap,
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn set_cap(&mut self, cap: usize) {
        self.cap = cap;
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, id: usize) -> &Generator {
        &self.generators[id]
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn add_generator(&mut self, name: &str, degree: usize) -> Result<usize, AlgebraError> {
        if self.by_name.contains_key(name) {
            return Err(AlgebraError::DuplicateGenerator(name.to_string()));
        }
        if degree == 0 {
            return Err(AlgebraError::BadDegree {
                name: name.to_string(),
                degree,
            });
        }
        let id = self.generators.len();
        self.generators.push(Generator {
            name: name.to_string(),
            degree,
        });
        self.differential.push(Element::zero());
        self.by_name.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn set_differential(&mut self, id: usize, value: Element<S>) -> Result<(), AlgebraError> {
        if id >= self.generators.len() {
            return Err(AlgebraError::UnknownGenerator(id));
        }
        let expected = self.generators[id].degree + 1;
        match self.degree_of(&value) {
            Homogeneity::Zero | Homogeneity::Degree(_) if value.is_zero() => {}
            Homogeneity::Degree(d) if d == expected => {}
            _ => {
                return Err(AlgebraError::DifferentialDegree {
                    name: self.generators[id].name.clone(),
                    expected,
                })
            }
        }
        self.differential[id] = value;
        Ok(())
    }

    pub fn differential_of(&self, id: usize) -> &Element<S> {
        &self.differential[id]
    }

    pub fn mono_degree(&self, m: &Monomial) -> usize {
        m.factors
            .iter()
            .map(|&(id, e)| self.generators[id].degree * e as usize)
            .sum()
    }

    pub fn degree_of(&self, e: &Element<S>) -> Homogeneity {
        let mut degree = None;
        for (_, m) in &e.terms {
            let d = self.mono_degree(m);
            match degree {
                None => degree = Some(d),
                Some(prev) if prev == d => {}
                Some(_) => return Homogeneity::Mixed,
            }
        }
        match degree {
            None => Homogeneity::Zero,
            Some(d) => Homogeneity::Degree(d),
        }
    }

    /// Normalize a raw term list into a canonical element: factors sorted by
    /// generator id with the Koszul sign (−1)^{#odd-odd transpositions},
    /// odd squares annihilated, like terms merged, zeros dropped.
    pub fn normalize(&self, raw: Vec<RawTerm<S>>) -> Result<Element<S>, AlgebraError> {
        let mut terms = Vec::new();
        'term: for term in raw {
            // Expand into a flat sequence of (id, parity-of-this-factor-block).
            let mut factors: Vec<(usize, u32)> = Vec::new();
            for (id, e) in term.factors {
                if id >= self.generators.len() {
                    return Err(AlgebraError::UnknownGenerator(id));
                }
                if e == 0 {
                    continue;
                }
                factors.push((id, e));
            }
            // Insertion sort by id, counting odd-odd transpositions.
            let mut negative = false;
            for i in 1..factors.len() {
                let mut j = i;
                while j > 0 && factors[j - 1].0 > factors[j].0 {
                    let left_parity =
                        self.generators[factors[j - 1].0].degree * factors[j - 1].1 as usize;
                    let right_parity =
                        self.generators[factors[j].0].degree * factors[j].1 as usize;
                    if left_parity % 2 == 1 && right_parity % 2 == 1 {
                        negative = !negative;
                    }
                    factors.swap(j - 1, j);
                    j -= 1;
                }
            }
            // Combine equal ids; odd generators square to zero.
            let mut combined: Vec<(usize, u32)> = Vec::new();
            for (id, e) in factors {
                match combined.last_mut() {
                    Some((last_id, last_e)) if *last_id == id => *last_e += e,
                    _ => combined.push((id, e)),
                }
            }
            for &(id, e) in &combined {
                if self.generators[id].is_odd() && e > 1 {
                    continue 'term;
                }
            }
            let coeff = if negative { term.coeff.neg() } else { term.coeff };
            terms.push((coeff, Monomial { factors: combined }));
        }
        Ok(merge_terms(terms))
    }

    /// Graded-commutative product of two monomials: `None` when an odd
    /// square annihilates the product, otherwise the sign and the canonical
    /// monomial.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
        // Merge the two sorted factor lists, counting how many odd factors of
        // `b` move past odd factors of `a`.
        let mut out: Vec<(usize, u32)> = Vec::new();
        let mut negative = false;
        let mut i = 0;
        let mut j = 0;
        // Number of odd factor symbols remaining in a[i..].
        let odd_suffix: Vec<usize> = {
            let mut suffix = vec![0usize; a.factors.len() + 1];
            for k in (0..a.factors.len()).rev() {
                let (id, e) = a.factors[k];
                let odd = if self.generators[id].is_odd() {
                    e as usize
                } else {
                    0
                };
                suffix[k] = suffix[k + 1] + odd;
            }
            suffix
        };
        while i < a.factors.len() || j < b.factors.len() {
            let take_b = match (a.factors.get(i), b.factors.get(j)) {
                (Some(&(ai, _)), Some(&(bj, _))) => bj < ai,
                (None, Some(_)) => true,
                (Some(_), None) => false,
                (None, None) => break,
            };
            if take_b {
                let (id, e) = b.factors[j];
                if self.generators[id].is_odd() {
                    // This odd factor moves past every remaining odd factor
                    // of `a` (e is 1 for valid monomials).
                    if (odd_suffix[i] * e as usize) % 2 == 1 {
                        negative = !negative;
                    }
                }
                push_factor(&mut out, id, e);
                j += 1;
            } else {
                let (id, e) = a.factors[i];
                // Equal ids combine here; a matching factor of `b` (if next)
                // still has to move past the remaining odd part of `a`
                // beyond position i.
                if j < b.factors.len() && b.factors[j].0 == id {
                    let (_bid, be) = b.factors[j];
                    if self.generators[id].is_odd() {
                        // Odd square: the combined exponent is >= 2.
                        return None;
                    }
                    push_factor(&mut out, id, e + be);
                    j += 1;
                } else {
                    push_factor(&mut out, id, e);
                }
                i += 1;
            }
        }
        for &(id, e) in &out {
            if self.generators[id].is_odd() && e > 1 {
                return None;
            }
        }
        Some((negative, Monomial { factors: out }))
    }

    /// Bilinear graded-commutative product in canonical form.
    pub fn multiply(&self, a: &Element<S>, b: &Element<S>) -> Element<S> {
        let mut terms = Vec::new();
        for (ca, ma) in &a.terms {
            for (cb, mb) in &b.terms {
                if let Some((negative, m)) = self.mul_monomials(ma, mb) {
                    let c = ca.mul(cb);
                    terms.push((if negative { c.neg() } else { c }, m));
                }
            }
        }
        merge_terms(terms)
    }

    pub fn pow(&self, a: &Element<S>, e: u32) -> Element<S> {
        let mut acc = Element::one();
        for _ in 0..e {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    /// Leibniz extension of the differential table to arbitrary elements:
    /// d(ab) = d(a)·b + (−1)^{|a|} a·d(b).
    pub fn apply_differential(&self, e: &Element<S>) -> Element<S> {
        let mut total = Element::zero();
        for (c, m) in &e.terms {
            let mut prefix_degree = 0usize;
            for (pos, &(id, exp)) in m.factors.iter().enumerate() {
                let dg = &self.differential[id];
                if !dg.is_zero() {
                    // m = A · g^exp · B; the contribution is
                    // (−1)^{|A|} exp · A · d(g) · g^{exp−1} · B.
                    let mut rest = Monomial {
                        factors: m.factors.clone(),
                    };
                    if exp == 1 {
                        rest.factors.remove(pos);
                    } else {
                        rest.factors[pos].1 = exp - 1;
                    }
                    let prefix = Monomial {
                        factors: m.factors[..pos].to_vec(),
                    };
                    // A · d(g), with d(g) crossing nothing (it is applied in
                    // place); then multiply by the remaining factors
                    // g^{exp−1}·B together with the prefix removed from rest.
                    // Compute as prefix · d(g) · (rest without prefix).
                    let mut suffix = rest.clone();
                    suffix.factors.drain(..pos.min(suffix.factors.len()));
                    // Rebuild: rest = prefix ∪ suffix, so dropping the first
                    // `pos` factors of rest recovers the suffix, except when
                    // exp > 1 where g^{exp-1} stays at position pos.
                    let prefix_elem = Element::monomial(S::one(), prefix);
                    let suffix_elem = Element::monomial(S::one(), suffix);
                    let mut scalar = c.mul(&S::from_integer(exp as i64));
                    if prefix_degree % 2 == 1 {
                        scalar = scalar.neg();
                    }
                    let product = self.multiply(&self.multiply(&prefix_elem, dg), &suffix_elem);
                    total = total.add(&product.scale(&scalar));
                }
                prefix_degree += self.generators[id].degree * exp as usize;
            }
        }
        total
    }

    /// Verify d∘d = 0 on every generator whose check fits under the cap.
    pub fn check_d_squared(&self) -> Result<(), AlgebraError> {
        for (id, gen) in self.generators.iter().enumerate() {
            if gen.degree + 2 > self.cap {
                continue;
            }
            let dd = self.apply_differential(&self.differential[id]);
            if !dd.is_zero() {
                return Err(AlgebraError::DSquared {
                    name: gen.name.clone(),
                    residue: self.format_element(&dd),
                });
            }
        }
        Ok(())
    }

    /// All monomials of the given degree over the allowed generator subset,
    /// in a deterministic order.
    pub fn monomials_of_degree(&self, degree: usize, allowed: &[bool]) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current: Vec<(usize, u32)> = Vec::new();
        self.enumerate_monomials(0, degree, allowed, &mut current, &mut out);
        out
    }

    fn enumerate_monomials(
        &self,
        next_id: usize,
        remaining: usize,
        allowed: &[bool],
        current: &mut Vec<(usize, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if remaining == 0 {
            out.push(Monomial {
                factors: current.clone(),
            });
            return;
        }
        if next_id >= self.generators.len() {
            return;
        }
        // Skip this generator.
        self.enumerate_monomials(next_id + 1, remaining, allowed, current, out);
        if !allowed.get(next_id).copied().unwrap_or(false) {
            return;
        }
        let gen = &self.generators[next_id];
        let max_exp = if gen.is_odd() {
            1
        } else {
            (remaining / gen.degree) as u32
        };
        for e in 1..=max_exp {
            let used = gen.degree * e as usize;
            if used > remaining {
                break;
            }
            current.push((next_id, e));
            self.enumerate_monomials(next_id + 1, remaining - used, allowed, current, out);
            current.pop();
        }
    }

    /// Maximum fiber stage occurring in an element, given a stage per
    /// generator (0 for base generators).
    pub fn stage_support(&self, e: &Element<S>, staging: &[u32]) -> u32 {
        e.terms
            .iter()
            .flat_map(|(_, m)| m.support())
            .map(|id| staging[id])
            .max()
            .unwrap_or(0)
    }

    pub fn format_element(&self, e: &Element<S>) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (c, m)) in e.terms.iter().enumerate() {
            let coeff_text = c.to_string();
            let (sign, magnitude) = match coeff_text.strip_prefix('-') {
                Some(rest) if !coeff_text.contains('+') => ("-", rest.to_string()),
                _ => ("+", coeff_text),
            };
            if idx == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mono_text = self.format_monomial(m);
            if m.is_one() {
                out.push_str(&magnitude);
            } else if magnitude == "1" {
                out.push_str(&mono_text);
            } else {
                let needs_parens = magnitude.contains('+') || magnitude.contains('-');
                if needs_parens {
                    out.push_str(&format!("({magnitude})*{mono_text}"));
                } else {
                    out.push_str(&format!("{magnitude}*{mono_text}"));
                }
            }
        }
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.factors
            .iter()
            .map(|&(id, e)| {
                if e == 1 {
                    self.generators[id].name.clone()
                } else {
                    format!("{}^{}", self.generators[id].name, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn push_factor(out: &mut Vec<(usize, u32)>, id: usize, e: u32) {
    match out.last_mut() {
        Some((last_id, last_e)) if *last_id == id => *last_e += e,
        _ => out.push((id, e)),
    }
}

impl<S: Scalar> fmt::Debug for Element<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, m)| format!("{c}*{:?}", m.factors))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
