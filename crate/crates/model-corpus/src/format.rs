//! The text format for model files and interleaving-certificate files.
//!
//! A model file has sections, each introduced by a `[name]` header line:
//!
//! ```text
//! [field]        Q or Q(i); defaults to Q
//! [cap]          report cap; defaults to (max generator degree) + 3
//! [algebra]      one `name degree` per line, base generators first
//! [differential] `name = expression` lines (omitted generators get d = 0)
//! [relative]     `base = a, b` and `fiber = c, d` comma lists
//! [stages]       optional `name = stage` overrides for fiber generators
//! [truncated]    optional truncation stage of an infinite model
//! ```
//!
//! Certificate files use `[certificate]` with an `epsilon = …` line plus
//! `[phi]`, `[psi]`, `[homotopy_F]`, `[homotopy_G]` assignment sections.
//! Generator names are namespaced `A.` (first model) and `B.` (second);
//! `t`, `dt`, and the imaginary unit `i` are never prefixed. Omitted
//! generators map to zero in `[phi]`/`[psi]` and to their constant identity
//! path in the homotopies.

use cdga_core::{parse_element, parse_interval_element, FreeCdga, Homotopy, Morphism};
use distances::HalfValue;
use field_linalg::Scalar;
use interleaving_verify::InterleavingCertificate;
use sullivan_models::RelativeSullivanModel;
use std::fmt::Write as _;

/// Which scalar field a file declares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Gaussian,
}

impl FieldChoice {
    pub fn name(self) -> &'static str {
        match self {
            FieldChoice::Rational => "Q",
            FieldChoice::Gaussian => "Q(i)",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line outside any [section]: `{0}`")]
    LineOutsideSection(String),
    #[error("missing required section [{0}]")]
    MissingSection(&'static str),
    #[error("cannot parse line `{line}` in section [{section}]")]
    BadLine { section: String, line: String },
    #[error("unknown field `{0}` (expected Q or Q(i))")]
    BadFieldName(String),
    #[error("file declares field {file} but was loaded over {engine}")]
    FieldMismatch {
        file: &'static str,
        engine: &'static str,
    },
    #[error("[relative] lists must name every generator, base first, in declaration order")]
    RelativeOrder,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("bad epsilon `{0}` (expected a finite half-integer)")]
    BadEpsilon(String),
    #[error("section [{section}]: `{line}` uses the wrong namespace prefix")]
    WrongPrefix { section: String, line: String },
    #[error("algebra error: {0}")]
    Algebra(String),
    #[error("expression error in `{line}`: {message}")]
    Expr { line: String, message: String },
    #[error("model validation failed: {0}")]
    Model(String),
}

/// Sections of a file, in order of appearance.
struct Sections {
    sections: Vec<(String, Vec<String>)>,
}

impl Sections {
    fn split(text: &str) -> Result<Self, FormatError> {
        let mut sections: Vec<(String, Vec<String>)> = Vec::new();
        for raw in text.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                sections.push((name.trim().to_string(), Vec::new()));
            } else {
                match sections.last_mut() {
                    Some((_, lines)) => lines.push(line.to_string()),
                    None => return Err(FormatError::LineOutsideSection(line.to_string())),
                }
            }
        }
        Ok(Sections { sections })
    }

    fn get(&self, name: &str) -> Option<&[String]> {
        self.sections
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, lines)| lines.as_slice())
    }

    fn single(&self, name: &str) -> Option<&str> {
        self.get(name).and_then(|lines| match lines {
            [one] => Some(one.as_str()),
            _ => None,
        })
    }
}

/// Read a file's declared field without committing to a scalar type.
pub fn field_of(text: &str) -> Result<FieldChoice, FormatError> {
    let sections = Sections::split(text)?;
    match sections.single("field") {
        None => Ok(FieldChoice::Rational),
        Some("Q") => Ok(FieldChoice::Rational),
        Some("Q(i)") => Ok(FieldChoice::Gaussian),
        Some(other) => Err(FormatError::BadFieldName(other.to_string())),
    }
}

/// A parsed model together with its report cap. The underlying algebra is
/// built with two degrees of headroom above the cap.
#[derive(Debug, Clone)]
pub struct LoadedModel<S: Scalar> {
    pub model: RelativeSullivanModel<S>,
    pub cap: usize,
}

impl<S: Scalar> LoadedModel<S> {
    /// Raise the algebra's monomial-degree ceiling so computations through
    /// degree `cap` stay exact.
    pub fn raise_cap(&mut self, cap: usize) {
        if cap > self.cap {
            self.cap = cap;
        }
        let needed = self.cap + 2;
        if self.model.algebra.cap() < needed {
            self.model.algebra.set_cap(needed);
        }
    }
}

fn split_eq(section: &str, line: &str) -> Result<(String, String), FormatError> {
    let (lhs, rhs) = line.split_once('=').ok_or_else(|| FormatError::BadLine {
        section: section.to_string(),
        line: line.to_string(),
    })?;
    Ok((lhs.trim().to_string(), rhs.trim().to_string()))
}

fn comma_list(text: &str) -> Vec<String> {
    text.split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Parse a model file over the scalar type `S`, validating d², base closure,
/// staging, and minimality.
pub fn parse_model<S: Scalar>(text: &str) -> Result<LoadedModel<S>, FormatError> {
    let declared = field_of(text)?;
    if declared.name() != S::FIELD_NAME {
        return Err(FormatError::FieldMismatch {
            file: match declared {
                FieldChoice::Rational => "Q",
                FieldChoice::Gaussian => "Q(i)",
            },
            engine: S::FIELD_NAME,
        });
    }
    let sections = Sections::split(text)?;
    let algebra_lines = sections
        .get("algebra")
        .ok_or(FormatError::MissingSection("algebra"))?;
    let mut declared_gens: Vec<(String, usize)> = Vec::new();
    for line in algebra_lines {
        let mut parts = line.split_whitespace();
        let (Some(name), Some(degree), None) = (parts.next(), parts.next(), parts.next())
        else {
            return Err(FormatError::BadLine {
                section: "algebra".to_string(),
                line: line.clone(),
            });
        };
        let degree: usize = degree.parse().map_err(|_| FormatError::BadLine {
            section: "algebra".to_string(),
            line: line.clone(),
        })?;
        declared_gens.push((name.to_string(), degree));
    }
    let max_degree = declared_gens.iter().map(|(_, d)| *d).max().unwrap_or(0);
    let cap = match sections.single("cap") {
        Some(text) => text.parse().map_err(|_| FormatError::BadLine {
            section: "cap".to_string(),
            line: text.to_string(),
        })?,
        None => max_degree + 3,
    };
    let mut algebra = FreeCdga::<S>::new(cap + 2);
    for (name, degree) in &declared_gens {
        algebra
            .add_generator(name, *degree)
            .map_err(|e| FormatError::Algebra(e.to_string()))?;
    }
    if let Some(lines) = sections.get("differential") {
        for line in lines {
            let (name, expr) = split_eq("differential", line)?;
            let id = algebra
                .lookup(&name)
                .ok_or_else(|| FormatError::UnknownGenerator(name.clone()))?;
            let value = parse_element(&algebra, &expr).map_err(|e| FormatError::Expr {
                line: line.clone(),
                message: e.to_string(),
            })?;
            algebra
                .set_differential(id, value)
                .map_err(|e| FormatError::Algebra(e.to_string()))?;
        }
    }
    // The [relative] split must reproduce the declaration order exactly:
    // base ids come first.
    let relative = sections
        .get("relative")
        .ok_or(FormatError::MissingSection("relative"))?;
    let mut base: Option<Vec<String>> = None;
    let mut fiber: Option<Vec<String>> = None;
    for line in relative {
        let (key, value) = split_eq("relative", line)?;
        match key.as_str() {
            "base" => base = Some(comma_list(&value)),
            "fiber" => fiber = Some(comma_list(&value)),
            _ => {
                return Err(FormatError::BadLine {
                    section: "relative".to_string(),
                    line: line.clone(),
                })
            }
        }
    }
    let base = base.ok_or(FormatError::MissingSection("relative"))?;
    let fiber = fiber.unwrap_or_default();
    let listed: Vec<&String> = base.iter().chain(fiber.iter()).collect();
    if listed.len() != declared_gens.len()
        || listed
            .iter()
            .zip(&declared_gens)
            .any(|(name, (declared, _))| name.as_str() != declared)
    {
        return Err(FormatError::RelativeOrder);
    }
    let mut model = RelativeSullivanModel::new(algebra, base.len());
    if let Some(lines) = sections.get("stages") {
        for line in lines {
            let (name, value) = split_eq("stages", line)?;
            let id = model
                .algebra
                .lookup(&name)
                .ok_or_else(|| FormatError::UnknownGenerator(name.clone()))?;
            let stage: u32 = value.parse().map_err(|_| FormatError::BadLine {
                section: "stages".to_string(),
                line: line.clone(),
            })?;
            model.staging[id] = stage;
        }
    }
    if let Some(text) = sections.single("truncated") {
        let stage: u32 = text.parse().map_err(|_| FormatError::BadLine {
            section: "truncated".to_string(),
            line: text.to_string(),
        })?;
        model.truncated_at = Some(stage);
    }
    model.validate().map_err(|e| FormatError::Model(e.to_string()))?;
    model
        .verify_minimality()
        .map_err(|e| FormatError::Model(e.to_string()))?;
    Ok(LoadedModel { model, cap })
}

/// Canonical text form of a model; `parse_model` inverts it.
pub fn serialize_model<S: Scalar>(loaded: &LoadedModel<S>) -> String {
    let model = &loaded.model;
    let a = &model.algebra;
    let mut out = String::new();
    writeln!(out, "[field]\n{}\n", S::FIELD_NAME).unwrap();
    writeln!(out, "[cap]\n{}\n", loaded.cap).unwrap();
    writeln!(out, "[algebra]").unwrap();
    for g in a.generators() {
        writeln!(out, "{} {}", g.name, g.degree).unwrap();
    }
    let with_d: Vec<usize> = (0..a.generators().len())
        .filter(|&id| !a.differential_of(id).is_zero())
        .collect();
    if !with_d.is_empty() {
        writeln!(out, "\n[differential]").unwrap();
        for id in with_d {
            writeln!(
                out,
                "{} = {}",
                a.generator(id).name,
                a.format_element(a.differential_of(id))
            )
            .unwrap();
        }
    }
    let names = |ids: Vec<usize>| -> String {
        ids.iter()
            .map(|&id| a.generator(id).name.clone())
            .collect::<Vec<_>>()
            .join(", ")
    };
    writeln!(out, "\n[relative]").unwrap();
    writeln!(out, "base ={}", prefix_space(&names((0..model.base_count).collect()))).unwrap();
    writeln!(out, "fiber ={}", prefix_space(&names(model.fiber_ids().collect()))).unwrap();
    let overridden: Vec<usize> = model
        .fiber_ids()
        .filter(|&id| model.staging[id] != a.generator(id).degree as u32)
        .collect();
    if !overridden.is_empty() {
        writeln!(out, "\n[stages]").unwrap();
        for id in overridden {
            writeln!(out, "{} = {}", a.generator(id).name, model.staging[id]).unwrap();
        }
    }
    if let Some(t) = model.truncated_at {
        writeln!(out, "\n[truncated]\n{t}").unwrap();
    }
    out
}

fn prefix_space(s: &str) -> String {
    if s.is_empty() {
        String::new()
    } else {
        format!(" {s}")
    }
}

/// Strip the expected namespace prefix from an expression, rejecting any
/// occurrence of the other one.
fn strip_namespace(
    section: &str,
    line: &str,
    expr: &str,
    expected: char,
    forbidden: char,
) -> Result<String, FormatError> {
    if expr.contains(&format!("{forbidden}.")) {
        return Err(FormatError::WrongPrefix {
            section: section.to_string(),
            line: line.to_string(),
        });
    }
    Ok(expr.replace(&format!("{expected}."), ""))
}

/// Parse a certificate file against the pair (`f` = model A, `g` = model B).
pub fn parse_certificate<S: Scalar>(
    text: &str,
    f: &RelativeSullivanModel<S>,
    g: &RelativeSullivanModel<S>,
) -> Result<InterleavingCertificate<S>, FormatError> {
    let sections = Sections::split(text)?;
    let header = sections
        .get("certificate")
        .ok_or(FormatError::MissingSection("certificate"))?;
    let mut eps_halves: Option<u32> = None;
    for line in header {
        let (key, value) = split_eq("certificate", line)?;
        if key == "epsilon" {
            let parsed = HalfValue::parse(&value)
                .and_then(HalfValue::halves)
                .ok_or_else(|| FormatError::BadEpsilon(value.clone()))?;
            eps_halves = Some(parsed);
        }
    }
    let eps_halves = eps_halves.ok_or(FormatError::MissingSection("certificate"))?;

    let read_morphism = |section: &str,
                         source: &FreeCdga<S>,
                         target: &FreeCdga<S>,
                         lhs_ns: char,
                         rhs_ns: char|
     -> Result<Morphism<S>, FormatError> {
        let mut m = Morphism::trivial(source);
        if let Some(lines) = sections.get(section) {
            for line in lines {
                let (lhs, rhs) = split_eq(section, line)?;
                let name = lhs
                    .strip_prefix(&format!("{lhs_ns}."))
                    .ok_or_else(|| FormatError::WrongPrefix {
                        section: section.to_string(),
                        line: line.clone(),
                    })?;
                let id = source
                    .lookup(name)
                    .ok_or_else(|| FormatError::UnknownGenerator(name.to_string()))?;
                let expr = strip_namespace(section, line, &rhs, rhs_ns, lhs_ns)?;
                m.assignment[id] =
                    parse_element(target, &expr).map_err(|e| FormatError::Expr {
                        line: line.clone(),
                        message: e.to_string(),
                    })?;
            }
        }
        Ok(m)
    };
    let read_homotopy = |section: &str,
                         algebra: &FreeCdga<S>,
                         ns: char,
                         other: char|
     -> Result<Homotopy<S>, FormatError> {
        let mut h = Homotopy::constant(&Morphism::identity(algebra));
        if let Some(lines) = sections.get(section) {
            for line in lines {
                let (lhs, rhs) = split_eq(section, line)?;
                let name = lhs
                    .strip_prefix(&format!("{ns}."))
                    .ok_or_else(|| FormatError::WrongPrefix {
                        section: section.to_string(),
                        line: line.clone(),
                    })?;
                let id = algebra
                    .lookup(name)
                    .ok_or_else(|| FormatError::UnknownGenerator(name.to_string()))?;
                let expr = strip_namespace(section, line, &rhs, ns, other)?;
                h.assignment[id] =
                    parse_interval_element(algebra, &expr).map_err(|e| FormatError::Expr {
                        line: line.clone(),
                        message: e.to_string(),
                    })?;
            }
        }
        Ok(h)
    };

    Ok(InterleavingCertificate {
        eps_halves,
        phi: read_morphism("phi", &f.algebra, &g.algebra, 'A', 'B')?,
        psi: read_morphism("psi", &g.algebra, &f.algebra, 'B', 'A')?,
        homotopy_f: read_homotopy("homotopy_F", &f.algebra, 'A', 'B')?,
        homotopy_g: read_homotopy("homotopy_G", &g.algebra, 'B', 'A')?,
    })
}
