//! Problem files.
//!
//! A problem file is TOML with the keys `ring`, `generators`, `degrees`,
//! `valuations` and the tables `[delta]` and `[options]`:
//!
//! ```toml
//! ring = ["x", "y"]
//! generators = ["x^2 + y^2", "x^2 - y^2", "x*y"]
//! degrees = [[2, 0, 0], [2, 1, 0], [2, 0, 1]]
//! valuations = ["weight(1,0)"]
//!
//! [delta]
//! free = 1
//! torsion = [2, 2]
//!
//! [options]
//! max_iter = 1000
//! ```
//!
//! Degrees list the free coordinates first, then the torsion residues. They
//! may be omitted when the grading group is trivial.

use std::ops::Range;
use std::sync::Arc;

use khovanskii::homogenize::Method;
use khovanskii::{DeltaDegree, DeltaGroup, GradedElement, MonomialValuation, PolyRing, Polynomial};
use serde::Deserialize;
use toml::Spanned;

use crate::error::{CliError, Position};
use crate::spec::{parse_valuation, SpecError};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    ring: Spanned<Vec<String>>,
    generators: Spanned<Vec<Spanned<String>>>,
    degrees: Option<Spanned<Vec<Spanned<Vec<i64>>>>>,
    #[serde(default)]
    valuations: Vec<Spanned<String>>,
    #[serde(default)]
    delta: RawDelta,
    #[serde(default)]
    options: RawOptions,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDelta {
    #[serde(default)]
    free: usize,
    #[serde(default)]
    torsion: Vec<u64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    max_iter: Option<usize>,
    max_rounds: Option<usize>,
    method: Option<Spanned<String>>,
    target: Option<Spanned<String>>,
    target_degree: Option<Vec<i64>>,
    sign: Option<Spanned<i8>>,
}

/// Command options stored in a problem file. Command line flags override them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    pub max_iter: Option<usize>,
    pub max_rounds: Option<usize>,
    pub method: Option<Method>,
    pub target: Option<String>,
    pub target_degree: Option<Vec<i64>>,
    pub sign: Option<i8>,
}

#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub ring: Arc<PolyRing>,
    pub generators: Vec<GradedElement>,
    pub group: DeltaGroup,
    pub valuations: Vec<MonomialValuation>,
    pub options: Options,
}

pub fn parse_method(text: &str) -> Option<Method> {
    match text {
        "bayer" => Some(Method::Bayer),
        "saturation" => Some(Method::Saturation),
        _ => None,
    }
}

/// Maps byte offsets into the problem text to 1-based lines and columns.
struct Locator<'a> {
    text: &'a str,
}

impl Locator<'_> {
    fn position(&self, offset: usize) -> Position {
        let offset = offset.min(self.text.len());
        let before = &self.text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
        Position { line, column }
    }

    fn error(&self, offset: usize, message: impl Into<String>) -> CliError {
        CliError::Problem { at: self.position(offset), message: message.into() }
    }

    /// Offset of the character at `column` (1-based) inside a string literal spanning `span`.
    fn inside(&self, span: &Range<usize>, line: usize, column: usize) -> usize {
        let body = &self.text[span.start + 1..span.end.saturating_sub(1).max(span.start + 1)];
        let mut offset = span.start + 1;
        for l in body.split('\n').take(line.saturating_sub(1)) {
            offset += l.len() + 1;
        }
        let rest = &self.text[offset..];
        offset + rest.char_indices().nth(column.saturating_sub(1)).map_or(rest.len(), |(i, _)| i)
    }
}

pub fn parse_problem_file(text: &str) -> Result<ProblemFile, CliError> {
    let loc = Locator { text };
    let raw: RawProblem = toml::from_str(text).map_err(|e| {
        let offset = e.span().map_or(0, |s| s.start);
        loc.error(offset, e.message().trim().to_string())
    })?;

    let ring_span = raw.ring.span();
    let ring = PolyRing::new(raw.ring.into_inner()).map_err(|e| loc.error(ring_span.start, e.to_string()))?;
    let group = DeltaGroup::new(raw.delta.free, raw.delta.torsion).map_err(|e| loc.error(0, e.to_string()))?;

    let gens_span = raw.generators.span();
    let texts = raw.generators.into_inner();
    if texts.is_empty() {
        return Err(loc.error(gens_span.start, "at least one generator is required"));
    }
    let polys = texts.iter().map(|s| parse_expression(&loc, &ring, s)).collect::<Result<Vec<_>, _>>()?;

    let degrees: Vec<DeltaDegree> = match raw.degrees {
        None if group.width() == 0 => vec![group.zero(); polys.len()],
        None => return Err(loc.error(gens_span.start, "`degrees` is required for a nontrivial grading group")),
        Some(list) => {
            let span = list.span();
            let list = list.into_inner();
            if list.len() != polys.len() {
                return Err(loc.error(span.start, format!("{} generators but {} degrees", polys.len(), list.len())));
            }
            list.iter()
                .map(|d| group.degree(d.get_ref()).map_err(|e| loc.error(d.span().start, e.to_string())))
                .collect::<Result<_, _>>()?
        }
    };
    let generators = polys.into_iter().zip(degrees).map(|(p, d)| GradedElement::new(p, d)).collect();

    let valuations = raw
        .valuations
        .iter()
        .map(|s| {
            parse_valuation(s.get_ref(), &ring)
                .map_err(|SpecError { offset, message }| loc.error(s.span().start + 1 + offset, message))
        })
        .collect::<Result<_, _>>()?;

    let o = raw.options;
    let method = match o.method {
        None => None,
        Some(m) => Some(
            parse_method(m.get_ref())
                .ok_or_else(|| loc.error(m.span().start, format!("unknown method `{}`", m.get_ref())))?,
        ),
    };
    let sign = match o.sign {
        Some(s) if *s.get_ref() != 1 && *s.get_ref() != -1 => {
            return Err(loc.error(s.span().start, "sign must be 1 or -1"));
        }
        s => s.map(Spanned::into_inner),
    };
    if let Some(t) = &o.target {
        parse_expression(&loc, &ring, t)?;
    }
    let options = Options {
        max_iter: o.max_iter,
        max_rounds: o.max_rounds,
        method,
        target: o.target.map(Spanned::into_inner),
        target_degree: o.target_degree,
        sign,
    };
    Ok(ProblemFile { ring, generators, group, valuations, options })
}

fn parse_expression(loc: &Locator<'_>, ring: &Arc<PolyRing>, s: &Spanned<String>) -> Result<Polynomial, CliError> {
    khovanskii::parse::parse_polynomial(ring, s.get_ref()).map_err(|e| {
        let offset = loc.inside(&s.span(), e.line, e.column);
        loc.error(offset, e.message)
    })
}
