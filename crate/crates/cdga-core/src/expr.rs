//! A small expression language for algebra and interval elements.
//!
//! Grammar (whitespace-insensitive):
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := identifier | number ['/' number] | '(' expr ')'
//! ```
//! Identifiers resolve to generators, `t`, or `dt` through a [`NameResolver`];
//! the identifier `i` denotes the imaginary unit of the scalar field and is
//! rejected over fields that lack one.

use crate::algebra::{Element, FreeCdga};
use crate::interval::{imul, IElement, IntervalError};
use field_linalg::Scalar;

/// What an identifier stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolved {
    Generator(usize),
    T,
    Dt,
}

/// Resolves identifiers to generators or interval variables.
pub trait NameResolver {
    fn resolve(&self, name: &str) -> Option<Resolved>;
}

/// Resolver for plain algebra expressions: generator names only.
pub struct AlgebraNames<'a, S: Scalar>(pub &'a FreeCdga<S>);

impl<S: Scalar> NameResolver for AlgebraNames<'_, S> {
    fn resolve(&self, name: &str) -> Option<Resolved> {
        self.0.lookup(name).map(Resolved::Generator)
    }
}

/// Resolver for interval expressions: generator names plus `t` and `dt`.
pub struct IntervalNames<'a, S: Scalar>(pub &'a FreeCdga<S>);

impl<S: Scalar> NameResolver for IntervalNames<'_, S> {
    fn resolve(&self, name: &str) -> Option<Resolved> {
        match name {
            "t" => Some(Resolved::T),
            "dt" => Some(Resolved::Dt),
            _ => self.0.lookup(name).map(Resolved::Generator),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("unexpected character `{0}` in expression")]
    BadCharacter(char),
    #[error("unexpected end of expression")]
    UnexpectedEnd,
    #[error("unexpected token `{0}`")]
    UnexpectedToken(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("the imaginary unit `i` is not available over {0}")]
    NoImaginaryUnit(&'static str),
    #[error("exponent `{0}` is not a small positive integer")]
    BadExponent(String),
    #[error("division by a non-number is not supported")]
    BadDivision,
    #[error("expression uses t or dt where a plain algebra element is required")]
    NotConstant,
    #[error(transparent)]
    Interval(#[from] IntervalError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Number(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ExprError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            '/' => {
                chars.next();
                tokens.push(Token::Slash);
            }
            '(' => {
                chars.next();
                tokens.push(Token::LParen);
            }
            ')' => {
                chars.next();
                tokens.push(Token::RParen);
            }
            c if c.is_ascii_digit() => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        text.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Number(text));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut text = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' || d == '\'' {
                        text.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(text));
            }
            other => return Err(ExprError::BadCharacter(other)),
        }
    }
    Ok(tokens)
}

struct Parser<'a, S: Scalar, R: NameResolver> {
    tokens: Vec<Token>,
    pos: usize,
    algebra: &'a FreeCdga<S>,
    resolver: &'a R,
}

impl<'a, S: Scalar, R: NameResolver> Parser<'a, S, R> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<IElement<S>, ExprError> {
        let mut negative = false;
        if let Some(Token::Plus | Token::Minus) = self.peek() {
            negative = matches!(self.next(), Some(Token::Minus));
        }
        let mut total = self.term()?;
        if negative {
            total = total.neg();
        }
        while let Some(Token::Plus | Token::Minus) = self.peek() {
            let minus = matches!(self.next(), Some(Token::Minus));
            let term = self.term()?;
            total = if minus {
                total.sub(&term)
            } else {
                total.add(&term)
            };
        }
        Ok(total)
    }

    fn term(&mut self) -> Result<IElement<S>, ExprError> {
        let mut product = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.next();
            let factor = self.factor()?;
            product = imul(self.algebra, &product, &factor)?;
        }
        Ok(product)
    }

    fn factor(&mut self) -> Result<IElement<S>, ExprError> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.next();
            let exp = match self.next() {
                Some(Token::Number(n)) => n
                    .parse::<u32>()
                    .map_err(|_| ExprError::BadExponent(n.clone()))?,
                Some(other) => return Err(ExprError::UnexpectedToken(format!("{other:?}"))),
                None => return Err(ExprError::UnexpectedEnd),
            };
            let mut acc = IElement::one();
            for _ in 0..exp {
                acc = imul(self.algebra, &acc, &base)?;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IElement<S>, ExprError> {
        match self.next() {
            Some(Token::Ident(name)) => {
                if name == "i" {
                    let unit =
                        S::imaginary_unit().ok_or(ExprError::NoImaginaryUnit(S::FIELD_NAME))?;
                    return Ok(IElement::scalar(unit));
                }
                match self.resolver.resolve(&name) {
                    Some(Resolved::Generator(id)) => {
                        Ok(IElement::from_element(&Element::generator(id)))
                    }
                    Some(Resolved::T) => Ok(IElement::t()),
                    Some(Resolved::Dt) => Ok(IElement::dt()),
                    None => Err(ExprError::UnknownName(name)),
                }
            }
            Some(Token::Number(num)) => {
                // Optional `/ denominator` immediately after a number.
                if let Some(Token::Slash) = self.peek() {
                    self.next();
                    match self.next() {
                        Some(Token::Number(den)) => {
                            let n: i64 = num.parse().map_err(|_| ExprError::BadExponent(num))?;
                            let d: i64 =
                                den.parse().map_err(|_| ExprError::BadExponent(den))?;
                            Ok(IElement::scalar(S::from_ratio(n, d)))
                        }
                        _ => Err(ExprError::BadDivision),
                    }
                } else {
                    let n: i64 = num.parse().map_err(|_| ExprError::BadExponent(num))?;
                    Ok(IElement::scalar(S::from_integer(n)))
                }
            }
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    Some(other) => Err(ExprError::UnexpectedToken(format!("{other:?}"))),
                    None => Err(ExprError::UnexpectedEnd),
                }
            }
            Some(other) => Err(ExprError::UnexpectedToken(format!("{other:?}"))),
            None => Err(ExprError::UnexpectedEnd),
        }
    }
}

/// Parse an interval element (may involve `t` and `dt`).
pub fn parse_interval_element<S: Scalar>(
    algebra: &FreeCdga<S>,
    text: &str,
) -> Result<IElement<S>, ExprError> {
    let resolver = IntervalNames(algebra);
    parse_with(algebra, &resolver, text)
}

/// Parse a plain algebra element; `t` and `dt` are rejected.
pub fn parse_element<S: Scalar>(
    algebra: &FreeCdga<S>,
    text: &str,
) -> Result<Element<S>, ExprError> {
    let resolver = AlgebraNames(algebra);
    let value = parse_with(algebra, &resolver, text)?;
    if !value.is_constant() {
        return Err(ExprError::NotConstant);
    }
    Ok(value.as_element())
}

fn parse_with<S: Scalar, R: NameResolver>(
    algebra: &FreeCdga<S>,
    resolver: &R,
    text: &str,
) -> Result<IElement<S>, ExprError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        algebra,
        resolver,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(ExprError::UnexpectedToken(format!(
            "{:?}",
            parser.tokens[parser.pos]
        )));
    }
    Ok(value)
}
