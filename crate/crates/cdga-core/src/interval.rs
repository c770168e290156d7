//! The tensor of a free CDGA with the polynomial interval algebra
//! ∧(t, dt) where |t| = 0, |dt| = 1, d(t) = dt and dt·dt = 0.
//!
//! Elements here are the ambient value space for algebra homotopies: an
//! evaluation at t = 0 and t = 1 recovers plain algebra elements.

use crate::algebra::{Element, FreeCdga, Homogeneity, Monomial};
use field_linalg::Scalar;

/// One term `coeff · mono · t^t_exp · dt^{dt as usize}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ITerm<S> {
    pub coeff: S,
    pub mono: Monomial,
    pub t_exp: u32,
    pub dt: bool,
}

/// A canonical element of A ⊗ ∧(t, dt): terms sorted by (mono, t_exp, dt)
/// with nonzero coefficients and no duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IElement<S> {
    pub terms: Vec<ITerm<S>>,
}

/// Hard ceiling on t-exponents. Homotopy verification only ever needs small
/// powers of t; exceeding the ceiling aborts loudly instead of silently
/// truncating.
pub const T_DEGREE_CAP: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("t-exponent {0} exceeds the supported ceiling {T_DEGREE_CAP}")]
    TDegreeOverflow(u32),
}

fn key<S>(t: &ITerm<S>) -> (Monomial, u32, bool) {
    (t.mono.clone(), t.t_exp, t.dt)
}

fn merge<S: Scalar>(mut terms: Vec<ITerm<S>>) -> IElement<S> {
    terms.sort_by(|a, b| key(a).cmp(&key(b)));
    let mut out: Vec<ITerm<S>> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.mono == t.mono && last.t_exp == t.t_exp && last.dt == t.dt => {
                last.coeff = last.coeff.add(&t.coeff);
                if last.coeff.is_zero() {
                    out.pop();
                }
            }
            _ => {
                if !t.coeff.is_zero() {
                    out.push(t);
                }
            }
        }
    }
    IElement { terms: out }
}

impl<S: Scalar> IElement<S> {
    pub fn zero() -> Self {
        IElement { terms: Vec::new() }
    }

    pub fn one() -> Self {
        IElement {
            terms: vec![ITerm {
                coeff: S::one(),
                mono: Monomial::one(),
                t_exp: 0,
                dt: false,
            }],
        }
    }

    pub fn scalar(c: S) -> Self {
        Self::from_element(&Element::scalar(c))
    }

    pub fn t() -> Self {
        IElement {
            terms: vec![ITerm {
                coeff: S::one(),
                mono: Monomial::one(),
                t_exp: 1,
                dt: false,
            }],
        }
    }

    pub fn dt() -> Self {
        IElement {
            terms: vec![ITerm {
                coeff: S::one(),
                mono: Monomial::one(),
                t_exp: 0,
                dt: true,
            }],
        }
    }

    /// Inclusion A → A ⊗ ∧(t, dt) at constant t-part.
    pub fn from_element(e: &Element<S>) -> Self {
        IElement {
            terms: e
                .terms
                .iter()
                .map(|(c, m)| ITerm {
                    coeff: c.clone(),
                    mono: m.clone(),
                    t_exp: 0,
                    dt: false,
                })
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn neg(&self) -> Self {
        IElement {
            terms: self
                .terms
                .iter()
                .map(|t| ITerm {
                    coeff: t.coeff.neg(),
                    ..t.clone()
                })
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        merge(terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IElement {
            terms: self
                .terms
                .iter()
                .map(|t| ITerm {
                    coeff: t.coeff.mul(c),
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// True when no term involves t or dt (the element lies in A ⊗ 1).
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.t_exp == 0 && !t.dt)
    }

    /// Project a constant element back into A. Panics when not constant.
    pub fn as_element(&self) -> Element<S> {
        assert!(self.is_constant(), "element involves t or dt");
        Element {
            terms: self
                .terms
                .iter()
                .map(|t| (t.coeff.clone(), t.mono.clone()))
                .collect(),
        }
    }

    /// Evaluation at t = 0: kills dt and every positive power of t.
    pub fn eval_at_0(&self) -> Element<S> {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|t| t.t_exp == 0 && !t.dt)
                .map(|t| (t.coeff.clone(), t.mono.clone()))
                .collect(),
        }
    }

    /// Evaluation at t = 1: sets t to 1 and kills dt.
    pub fn eval_at_1(&self) -> Element<S> {
        let mut e = Element::zero();
        for t in &self.terms {
            if !t.dt {
                e = e.add(&Element::monomial(t.coeff.clone(), t.mono.clone()));
            }
        }
        e
    }
}

/// Product in A ⊗ ∧(t, dt). The interval part is central except for dt,
/// which anticommutes with odd algebra factors: moving dt of the left term
/// past the algebra monomial of the right term contributes
/// (−1)^{deg(right monomial)}.
pub fn imul<S: Scalar>(
    algebra: &FreeCdga<S>,
    a: &IElement<S>,
    b: &IElement<S>,
) -> Result<IElement<S>, IntervalError> {
    let mut terms = Vec::new();
    for ta in &a.terms {
        for tb in &b.terms {
            if ta.dt && tb.dt {
                continue;
            }
            let Some((negative_koszul, mono)) = algebra.mul_monomials(&ta.mono, &tb.mono) else {
                continue;
            };
            let t_exp = ta.t_exp + tb.t_exp;
            if t_exp > T_DEGREE_CAP {
                return Err(IntervalError::TDegreeOverflow(t_exp));
            }
            let mut negative = negative_koszul;
            if ta.dt && algebra.mono_degree(&tb.mono) % 2 == 1 {
                negative = !negative;
            }
            let mut coeff = ta.coeff.mul(&tb.coeff);
            if negative {
                coeff = coeff.neg();
            }
            terms.push(ITerm {
                coeff,
                mono,
                t_exp,
                dt: ta.dt || tb.dt,
            });
        }
    }
    Ok(merge(terms))
}

/// The differential on A ⊗ ∧(t, dt): the algebra differential on the A part
/// (signed past nothing — it acts first) plus d(t^j) = j·t^{j−1}·dt on the
/// interval part, crossing the algebra monomial with a Koszul sign.
pub fn idifferential<S: Scalar>(
    algebra: &FreeCdga<S>,
    e: &IElement<S>,
) -> Result<IElement<S>, IntervalError> {
    let mut total = IElement::zero();
    for term in &e.terms {
        // d on the algebra monomial, keeping the interval part fixed.
        let mono_elem = Element::monomial(term.coeff.clone(), term.mono.clone());
        let d_mono = algebra.apply_differential(&mono_elem);
        let interval = IElement {
            terms: vec![ITerm {
                coeff: S::one(),
                mono: Monomial::one(),
                t_exp: term.t_exp,
                dt: term.dt,
            }],
        };
        total = total.add(&imul(algebra, &IElement::from_element(&d_mono), &interval)?);
        // d on t^j, with sign (−1)^{deg(mono)} for dt crossing the monomial.
        if term.t_exp > 0 && !term.dt {
            let mut coeff = term.coeff.mul(&S::from_integer(term.t_exp as i64));
            if algebra.mono_degree(&term.mono) % 2 == 1 {
                coeff = coeff.neg();
            }
            total = total.add(&IElement {
                terms: vec![ITerm {
                    coeff,
                    mono: term.mono.clone(),
                    t_exp: term.t_exp - 1,
                    dt: true,
                }],
            });
        }
    }
    Ok(total)
}

/// Total degree of an interval element (dt counts 1, t counts 0), when
/// homogeneous.
pub fn idegree<S: Scalar>(algebra: &FreeCdga<S>, e: &IElement<S>) -> Homogeneity {
    let mut degree = None;
    for t in &e.terms {
        let d = algebra.mono_degree(&t.mono) + usize::from(t.dt);
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
