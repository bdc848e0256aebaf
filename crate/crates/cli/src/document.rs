//! The line-oriented text format shared by every subcommand.
//!
//! ```text
//! # comment
//! kind: kcategory
//! scalar: int
//! points: v w
//! hom: v v 0
//! hom: v w 3
//! hom: w v 4
//! hom: w w 0
//! ```
//!
//! Header keys come first, once each. Matrix kinds (`kcategory`, `lconvex`,
//! `constraints`) need every ordered pair exactly once; point kinds
//! (`points`, `generators`) list one `point:` line per vector.

use std::fmt;
use std::str::FromStr;

use kbar_core::{ExtScalar, PointVector, Real, Scalar, ScalarKind, SquareMatrix};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    KCategory,
    LConvex,
    Constraints,
    Points,
    Generators,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::KCategory => "kcategory",
            Kind::LConvex => "lconvex",
            Kind::Constraints => "constraints",
            Kind::Points => "points",
            Kind::Generators => "generators",
        }
    }

    /// Header key carrying the labels.
    pub fn label_key(self) -> &'static str {
        match self {
            Kind::KCategory => "points",
            _ => "index",
        }
    }

    /// Keyword of the body lines.
    pub fn entry_key(self) -> &'static str {
        match self {
            Kind::KCategory => "hom",
            Kind::LConvex | Kind::Constraints => "d",
            Kind::Points | Kind::Generators => "point",
        }
    }

    pub fn is_matrix(self) -> bool {
        matches!(self, Kind::KCategory | Kind::LConvex | Kind::Constraints)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "kcategory" => Kind::KCategory,
            "lconvex" => Kind::LConvex,
            "constraints" => Kind::Constraints,
            "points" => Kind::Points,
            "generators" => Kind::Generators,
            _ => return Err(format!("unknown kind `{s}`")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body<K> {
    Matrix(SquareMatrix<ExtScalar<K>>),
    Points(Vec<PointVector<K>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document<K> {
    pub kind: Kind,
    pub labels: Vec<String>,
    pub body: Body<K>,
}

impl<K: Scalar> Document<K> {
    pub fn matrix(kind: Kind, labels: Vec<String>, m: SquareMatrix<ExtScalar<K>>) -> Self {
        debug_assert!(kind.is_matrix());
        Document {
            kind,
            labels,
            body: Body::Matrix(m),
        }
    }

    pub fn points(kind: Kind, labels: Vec<String>, points: Vec<PointVector<K>>) -> Self {
        debug_assert!(!kind.is_matrix());
        Document {
            kind,
            labels,
            body: Body::Points(points),
        }
    }

    /// Canonical text: header in fixed order, then entries in label order.
    pub fn emit(&self) -> String {
        let mut out = format!(
            "kind: {}\nscalar: {}\n{}: {}\n",
            self.kind,
            K::KIND,
            self.kind.label_key(),
            self.labels.join(" ")
        );
        let key = self.kind.entry_key();
        match &self.body {
            Body::Matrix(m) => {
                for (i, a) in self.labels.iter().enumerate() {
                    for (j, b) in self.labels.iter().enumerate() {
                        out.push_str(&format!("{key}: {a} {b} {}\n", m[(i, j)]));
                    }
                }
            }
            Body::Points(ps) => {
                for p in ps {
                    let coords: Vec<String> = p.coords().iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!("{key}: {}\n", coords.join(" ")));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyDocument {
    Int(Document<i64>),
    Real(Document<Real>),
}

impl AnyDocument {
    pub fn kind(&self) -> Kind {
        match self {
            AnyDocument::Int(d) => d.kind,
            AnyDocument::Real(d) => d.kind,
        }
    }

    pub fn scalar(&self) -> ScalarKind {
        match self {
            AnyDocument::Int(_) => ScalarKind::Integer,
            AnyDocument::Real(_) => ScalarKind::Real,
        }
    }

    pub fn emit(&self) -> String {
        match self {
            AnyDocument::Int(d) => d.emit(),
            AnyDocument::Real(d) => d.emit(),
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Header {
    kind: Option<(Kind, usize)>,
    scalar: Option<ScalarKind>,
    labels: Option<(String, Vec<String>, usize)>,
}

/// Parses a document. Line numbers in errors are 1-based.
pub fn parse(text: &str) -> Result<AnyDocument, ParseError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();

    let mut header = Header {
        kind: None,
        scalar: None,
        labels: None,
    };
    let mut body_start = lines.len();
    for (pos, &(no, line)) in lines.iter().enumerate() {
        let Some((key, value)) = line.split_once(':') else {
            return err(no, format!("expected `key: value`, found `{line}`"));
        };
        let value = value.trim();
        match key.trim() {
            "kind" => {
                if header.kind.is_some() {
                    return err(no, "repeated key `kind`");
                }
                let kind = value.parse::<Kind>().or_else(|e| err(no, e))?;
                header.kind = Some((kind, no));
            }
            "scalar" => {
                if header.scalar.is_some() {
                    return err(no, "repeated key `scalar`");
                }
                header.scalar = Some(match value {
                    "int" => ScalarKind::Integer,
                    "real" => ScalarKind::Real,
                    _ => return err(no, format!("unknown scalar `{value}`, expected int or real")),
                });
            }
            k @ ("points" | "index") => {
                if header.labels.is_some() {
                    return err(no, format!("repeated label list `{k}`"));
                }
                let labels: Vec<String> = value.split_whitespace().map(String::from).collect();
                for l in &labels {
                    if !is_identifier(l) {
                        return err(no, format!("label `{l}` is not an ASCII identifier"));
                    }
                }
                for (i, l) in labels.iter().enumerate() {
                    if labels[..i].contains(l) {
                        return err(no, format!("duplicate label `{l}`"));
                    }
                }
                header.labels = Some((k.to_string(), labels, no));
            }
            "hom" | "d" | "point" => {
                body_start = pos;
                break;
            }
            other => return err(no, format!("unknown key `{other}`")),
        }
    }

    let first_body = lines.get(body_start).map_or(lines.last().map_or(1, |l| l.0), |l| l.0);
    let Some((kind, _)) = header.kind else {
        return err(first_body, "missing `kind:` header");
    };
    let Some(scalar) = header.scalar else {
        return err(first_body, "missing `scalar:` header");
    };
    let Some((label_key, labels, label_line)) = header.labels else {
        return err(first_body, format!("missing `{}:` header", kind.label_key()));
    };
    if label_key != kind.label_key() {
        return err(
            label_line,
            format!("{kind} documents list labels under `{}:`, not `{label_key}:`", kind.label_key()),
        );
    }
    if labels.is_empty() {
        return err(label_line, "no labels given");
    }

    let body = &lines[body_start..];
    Ok(match scalar {
        ScalarKind::Integer => AnyDocument::Int(parse_body(kind, labels, body)?),
        ScalarKind::Real => AnyDocument::Real(parse_body(kind, labels, body)?),
    })
}

fn parse_value<K: Scalar>(no: usize, text: &str) -> Result<ExtScalar<K>, ParseError> {
    text.parse::<ExtScalar<K>>()
        .or_else(|_| err(no, format!("`{text}` is not a valid {} scalar", K::KIND)))
}

fn parse_body<K: Scalar>(kind: Kind, labels: Vec<String>, body: &[(usize, &str)]) -> Result<Document<K>, ParseError> {
    let key = kind.entry_key();
    let n = labels.len();
    let mut cells: Vec<Option<ExtScalar<K>>> = vec![None; n * n];
    let mut points = Vec::new();
    let position = |no: usize, l: &str| -> Result<usize, ParseError> {
        match labels.iter().position(|x| x == l) {
            Some(i) => Ok(i),
            None => err(no, format!("label `{l}` is not declared")),
        }
    };
    for &(no, line) in body {
        let Some((k, rest)) = line.split_once(':') else {
            return err(no, format!("expected `{key}: …`, found `{line}`"));
        };
        let k = k.trim();
        if k != key {
            if matches!(k, "kind" | "scalar" | "points" | "index") {
                return err(no, format!("header key `{k}` after the body started"));
            }
            return err(no, format!("unexpected `{k}:` in a {kind} document, expected `{key}:`"));
        }
        let fields: Vec<&str> = rest.split_whitespace().collect();
        if kind.is_matrix() {
            let [a, b, v] = fields[..] else {
                return err(no, format!("expected `{key}: LABEL LABEL VALUE`, found {} fields", fields.len()));
            };
            let (i, j) = (position(no, a)?, position(no, b)?);
            let value = parse_value::<K>(no, v)?;
            if cells[i * n + j].replace(value).is_some() {
                return err(no, format!("duplicate entry for pair ({a}, {b})"));
            }
        } else {
            if fields.len() != n {
                return err(no, format!("expected {n} coordinates, found {}", fields.len()));
            }
            let coords = fields
                .iter()
                .map(|f| parse_value::<K>(no, f))
                .collect::<Result<Vec<_>, _>>()?;
            points.push(PointVector::new(coords));
        }
    }
    if !kind.is_matrix() {
        return Ok(Document::points(kind, labels, points));
    }
    let end = body.last().map_or(0, |l| l.0);
    let mut missing = Vec::new();
    for (idx, c) in cells.iter().enumerate() {
        if c.is_none() {
            missing.push(format!("({}, {})", labels[idx / n], labels[idx % n]));
        }
    }
    if !missing.is_empty() {
        return err(end.max(1), format!("missing entries for {}", missing.join(", ")));
    }
    let m = SquareMatrix::from_fn(n, |i, j| cells[i * n + j].unwrap());
    Ok(Document::matrix(kind, labels, m))
}
