//! Line-oriented description of a Frobenius superalgebra.
//!
//! ```text
//! frobnil-algebra v1
//! name = clifford_odd
//! trace_parity = odd
//! trace_degree = 0        # optional; requires a degree on every basis line
//! unit = 1                # optional; defaults to the first basis label
//!
//! [basis]
//! 1 even 0                # label, parity, optional degree
//! c odd 0
//!
//! [trace]
//! c = 1                   # unlisted labels have trace 0
//!
//! [mult]
//! c * c = 1               # unlisted products are 0, except those with the unit
//! ```
//!
//! Labels are identifiers or natural numbers. Right-hand sides are sums of
//! `coeff*label` terms with rational coefficients `p/q`; `0` is the empty sum.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;

use super::TextError;
use crate::frobenius::{validate, AlgElement, AlgebraData, FrobeniusSuperalgebra, Grading};
use crate::linear::{parse_scalar, Element, Parity, Scalar};
use crate::Error;

pub const HEADER: &str = "frobnil-algebra v1";

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Basis,
    Trace,
    Mult,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, TextError> {
    Err(TextError::Config { line, msg: msg.into() })
}

fn valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_digit() => s.bytes().all(|b| b.is_ascii_digit()),
        Some(c) if c.is_ascii_alphabetic() || c == '_' => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        _ => false,
    }
}

fn parse_parity(s: &str, line: usize) -> Result<Parity, TextError> {
    match s {
        "even" | "0" => Ok(Parity::Even),
        "odd" | "1" => Ok(Parity::Odd),
        _ => err(line, format!("parity must be `even` or `odd`, got `{s}`")),
    }
}

fn parse_coeff(s: &str, line: usize) -> Result<Scalar, TextError> {
    parse_scalar(s).map_or_else(|| err(line, format!("bad rational `{s}`")), Ok)
}

fn lookup(labels: &[String], s: &str, line: usize) -> Result<usize, TextError> {
    labels
        .iter()
        .position(|l| l == s)
        .map_or_else(|| err(line, format!("undeclared label `{s}`")), Ok)
}

/// `2*a - 1/2*b + c`.
fn parse_combination(text: &str, labels: &[String], line: usize) -> Result<AlgElement, TextError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return err(line, "empty right-hand side");
    }
    let mut out = Element::zero();
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    for term in terms {
        let (negative, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        let (coeff, label) = match body.split_once('*') {
            Some((c, l)) => (parse_coeff(c, line)?, l),
            None => (Scalar::from_integer(1.into()), body),
        };
        let coeff = if negative { -coeff } else { coeff };
        if label == "0" && !labels.iter().any(|l| l == "0") {
            continue;
        }
        out.add_term(lookup(labels, label, line)?, coeff);
    }
    Ok(out)
}

/// Parses and validates a config; failed axioms come back as
/// [`TextError::Validation`] carrying the full report.
pub fn parse_config(src: &str) -> Result<FrobeniusSuperalgebra, TextError> {
    let mut section = Section::Header;
    let mut seen_header = false;
    let mut header: BTreeMap<String, (String, usize)> = BTreeMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut parities = Vec::new();
    let mut degrees: Vec<Option<i64>> = Vec::new();
    let mut trace_lines = Vec::new();
    let mut mult_lines = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap().trim();
        if text.is_empty() {
            continue;
        }
        if !seen_header {
            if text != HEADER {
                return err(line, format!("expected header `{HEADER}`"));
            }
            seen_header = true;
            continue;
        }
        match text {
            "[basis]" => section = Section::Basis,
            "[trace]" => section = Section::Trace,
            "[mult]" => section = Section::Mult,
            _ if text.starts_with('[') => return err(line, format!("unknown section `{text}`")),
            _ => match section {
                Section::Header => {
                    let Some((k, v)) = text.split_once('=') else {
                        return err(line, "expected `key = value`");
                    };
                    let k = k.trim().to_string();
                    if !matches!(k.as_str(), "name" | "trace_parity" | "trace_degree" | "unit") {
                        return err(line, format!("unknown key `{k}`"));
                    }
                    if header.insert(k.clone(), (v.trim().to_string(), line)).is_some() {
                        return err(line, format!("duplicate key `{k}`"));
                    }
                }
                Section::Basis => {
                    let fields: Vec<&str> = text.split_whitespace().collect();
                    if !(2..=3).contains(&fields.len()) {
                        return err(line, "expected `label parity [degree]`");
                    }
                    if !valid_label(fields[0]) {
                        return err(line, format!("invalid label `{}`", fields[0]));
                    }
                    if labels.iter().any(|l| l == fields[0]) {
                        return err(line, format!("duplicate label `{}`", fields[0]));
                    }
                    labels.push(fields[0].to_string());
                    parities.push(parse_parity(fields[1], line)?);
                    degrees.push(match fields.get(2) {
                        Some(d) => Some(d.parse().map_or_else(|_| err(line, format!("bad degree `{d}`")), Ok)?),
                        None => None,
                    });
                }
                Section::Trace => trace_lines.push((text.to_string(), line)),
                Section::Mult => mult_lines.push((text.to_string(), line)),
            },
        }
    }
    if !seen_header {
        return err(1, format!("expected header `{HEADER}`"));
    }
    if labels.is_empty() {
        return err(0, "no basis declared");
    }
    let dim = labels.len();
    let name = header.get("name").map_or_else(|| "custom".to_string(), |(v, _)| v.clone());
    let trace_parity = match header.get("trace_parity") {
        Some((v, line)) => parse_parity(v, *line)?,
        None => return err(0, "missing `trace_parity`"),
    };
    let unit = match header.get("unit") {
        Some((v, line)) => lookup(&labels, v, *line)?,
        None => 0,
    };
    let grading = match header.get("trace_degree") {
        Some((v, line)) => {
            let trace_degree = v.parse().map_or_else(|_| err(*line, format!("bad degree `{v}`")), Ok)?;
            let degrees = degrees
                .iter()
                .map(|d| d.map_or_else(|| err(*line, "trace_degree requires a degree on every basis line"), Ok))
                .collect::<Result<Vec<i64>, _>>()?;
            Some(Grading { degrees, trace_degree })
        }
        None => None,
    };

    let mut trace = vec![Scalar::zero(); dim];
    let mut traced = vec![false; dim];
    for (text, line) in &trace_lines {
        let Some((l, v)) = text.split_once('=') else {
            return err(*line, "expected `label = value`");
        };
        let b = lookup(&labels, l.trim(), *line)?;
        if std::mem::replace(&mut traced[b], true) {
            return err(*line, format!("duplicate trace of `{}`", l.trim()));
        }
        trace[b] = parse_coeff(v, *line)?;
    }

    let mut mult: Vec<Vec<Option<AlgElement>>> = vec![vec![None; dim]; dim];
    for (text, line) in &mult_lines {
        let Some((lhs, rhs)) = text.split_once('=') else {
            return err(*line, "expected `a * b = combination`");
        };
        let Some((a, b)) = lhs.split_once('*') else {
            return err(*line, "expected `a * b` on the left");
        };
        let (a, b) = (lookup(&labels, a.trim(), *line)?, lookup(&labels, b.trim(), *line)?);
        if mult[a][b].is_some() {
            return err(*line, format!("duplicate product `{}`", lhs.trim()));
        }
        mult[a][b] = Some(parse_combination(rhs, &labels, *line)?);
    }
    let mult = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| match mult[i][j].take() {
                    Some(e) => e,
                    None if i == unit => Element::basis(j),
                    None if j == unit => Element::basis(i),
                    None => Element::zero(),
                })
                .collect()
        })
        .collect();

    let data = AlgebraData {
        name,
        labels,
        parities,
        unit,
        mult,
        trace,
        trace_parity,
        grading,
    };
    let report = validate(&data);
    if !report.usable() {
        return Err(Error::ValidationFailed(Box::new(report)).into());
    }
    Ok(FrobeniusSuperalgebra::new(data)?)
}

pub fn load_config(path: impl AsRef<Path>) -> Result<FrobeniusSuperalgebra, TextError> {
    let path = path.as_ref();
    let src = std::fs::read_to_string(path).map_err(|e| TextError::Io(format!("{}: {e}", path.display())))?;
    parse_config(&src)
}
