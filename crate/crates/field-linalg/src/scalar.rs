//! Exact scalar fields: arbitrary-precision rationals and Gaussian rationals.
//!
//! The field is fixed per computation through the [`Scalar`] type parameter;
//! mixing fields inside one algebra is therefore ruled out at the type level.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::hash::Hash;

/// Error produced when a scalar literal cannot be parsed in the chosen field.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid scalar literal `{literal}` for field {field}: {reason}")]
pub struct ScalarParseError {
    pub literal: String,
    pub field: &'static str,
    pub reason: String,
}

/// An exact field scalar.
///
/// Implementations keep values in canonical form: reduced fractions with a
/// positive denominator (componentwise for the Gaussian rationals), so that
/// equality is structural equality.
pub trait Scalar: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Human-readable field name, used in reports and error messages.
    const FIELD_NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_integer(n: i64) -> Self;
    /// Exact fraction `num/den`. Panics when `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Division; panics on a zero divisor (callers check first).
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse().expect("division by zero scalar"))
    }

    /// The imaginary unit, when the field contains one.
    fn imaginary_unit() -> Option<Self>;

    /// Whether a sum of squares of nonzero elements is necessarily nonzero.
    ///
    /// True over the rationals (positivity), false over the Gaussian
    /// rationals where 1² + i² = 0. Obstruction rules that rely on
    /// definiteness consult this flag and stay silent when it is false.
    fn sums_of_squares_definite() -> bool;

    /// Sign of the value when it is a real rational: `Some(true)` for
    /// positive, `Some(false)` for negative, `None` for zero or a value with
    /// a nonzero imaginary part.
    fn real_sign(&self) -> Option<bool>;

    /// Parse a literal: `p`, `p/q`, and over the Gaussian rationals also
    /// `a/b+c/d*i`, `c/d*i`, `i`, `-i`.
    fn parse(text: &str) -> Result<Self, ScalarParseError>;

    /// Small palette of candidate values used by witness searches in the
    /// constraint solver. Always contains 0, ±1, ±2 and, over the Gaussian
    /// rationals, ±i.
    fn witness_palette() -> Vec<Self>;
}

fn canonical_ratio(num: i64, den: i64) -> BigRational {
    assert!(den != 0, "zero denominator in scalar literal");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn parse_plain_rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty literal".to_string());
    }
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| format!("invalid integer `{num_text}`"))?;
    let den: BigInt = den_text
        .parse()
        .map_err(|_| format!("invalid integer `{den_text}`"))?;
    if den.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok(BigRational::new(num, den))
}

fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// An arbitrary-precision rational number in canonical (reduced) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(pub BigRational);

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.0))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.0))
    }
}

impl Scalar for Rational {
    const FIELD_NAME: &'static str = "Q";

    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational(canonical_ratio(num, den))
    }
    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn imaginary_unit() -> Option<Self> {
        None
    }
    fn sums_of_squares_definite() -> bool {
        true
    }
    fn real_sign(&self) -> Option<bool> {
        if self.0.is_zero() {
            None
        } else {
            Some(self.0.is_positive())
        }
    }
    fn parse(text: &str) -> Result<Self, ScalarParseError> {
        if text.contains('i') {
            return Err(ScalarParseError {
                literal: text.to_string(),
                field: Self::FIELD_NAME,
                reason: "imaginary literal requires field Q(i)".to_string(),
            });
        }
        parse_plain_rational(text)
            .map(Rational)
            .map_err(|reason| ScalarParseError {
                literal: text.to_string(),
                field: Self::FIELD_NAME,
                reason,
            })
    }
    fn witness_palette() -> Vec<Self> {
        [0, 1, -1, 2, -2].iter().map(|&n| Self::from_integer(n)).collect()
    }
}

/// A Gaussian rational `re + im·i`, both components canonical rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    /// Squared modulus `re² + im²`, a plain rational.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", format_rational(&self.im));
        }
        if self.im.is_negative() {
            write!(
                f,
                "{}-{}*i",
                format_rational(&self.re),
                format_rational(&-&self.im)
            )
        } else {
            write!(
                f,
                "{}+{}*i",
                format_rational(&self.re),
                format_rational(&self.im)
            )
        }
    }
}

impl Scalar for GaussianRational {
    const FIELD_NAME: &'static str = "Q(i)";

    fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        GaussianRational::new(BigRational::one(), BigRational::zero())
    }
    fn from_integer(n: i64) -> Self {
        GaussianRational::new(
            BigRational::from_integer(BigInt::from(n)),
            BigRational::zero(),
        )
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(canonical_ratio(num, den), BigRational::zero())
    }
    fn add(&self, other: &Self) -> Self {
        GaussianRational::new(&self.re + &other.re, &self.im + &other.im)
    }
    fn sub(&self, other: &Self) -> Self {
        GaussianRational::new(&self.re - &other.re, &self.im - &other.im)
    }
    fn mul(&self, other: &Self) -> Self {
        GaussianRational::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }
    fn neg(&self) -> Self {
        GaussianRational::new(-&self.re, -&self.im)
    }
    fn inverse(&self) -> Option<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        Some(GaussianRational::new(&self.re / &norm, -&self.im / &norm))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn imaginary_unit() -> Option<Self> {
        Some(GaussianRational::new(BigRational::zero(), BigRational::one()))
    }
    fn sums_of_squares_definite() -> bool {
        false
    }
    fn real_sign(&self) -> Option<bool> {
        if !self.im.is_zero() || self.re.is_zero() {
            None
        } else {
            Some(self.re.is_positive())
        }
    }
    fn parse(text: &str) -> Result<Self, ScalarParseError> {
        let err = |reason: String| ScalarParseError {
            literal: text.to_string(),
            field: Self::FIELD_NAME,
            reason,
        };
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(err("empty literal".to_string()));
        }
        // Split `a/b+c/d*i` into a real and an imaginary summand at the last
        // top-level sign that is not the leading sign.
        let bytes = trimmed.as_bytes();
        let mut split_at = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if b == b'+' || b == b'-' {
                split_at = Some(idx);
            }
        }
        let (real_text, imag_text) = match split_at {
            Some(idx) if trimmed.contains('i') => {
                (&trimmed[..idx], &trimmed[idx..])
            }
            _ => {
                if trimmed.contains('i') {
                    ("0", trimmed)
                } else {
                    (trimmed, "+0*i")
                }
            }
        };
        let re = parse_plain_rational(real_text).map_err(&err)?;
        let imag_body = imag_text.trim();
        let (negate, imag_body) = match imag_body.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, imag_body.strip_prefix('+').unwrap_or(imag_body).trim()),
        };
        let imag_value = if imag_body == "i" {
            BigRational::one()
        } else {
            let coeff = imag_body
                .strip_suffix("*i")
                .or_else(|| imag_body.strip_suffix('i'))
                .ok_or_else(|| err("imaginary part must end in `i`".to_string()))?;
            parse_plain_rational(coeff).map_err(&err)?
        };
        let im = if negate { -imag_value } else { imag_value };
        Ok(GaussianRational::new(re, im))
    }
    fn witness_palette() -> Vec<Self> {
        let i = Self::imaginary_unit().unwrap();
        let mut palette: Vec<Self> = [0, 1, -1, 2, -2]
            .iter()
            .map(|&n| Self::from_integer(n))
            .collect();
        palette.push(i.clone());
        palette.push(i.neg());
        palette
    }
}
