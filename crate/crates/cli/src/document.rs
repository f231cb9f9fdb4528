//! JSON operator documents.
//!
//! ```json
//! {
//!   "space": {"type": "lp", "p": 2},
//!   "operator": {"kind": "banded", "lower": 1, "upper": 1, "diagonals": [
//!     {"offset": 1, "values": {"period": ["1"]}},
//!     {"offset": -1, "values": {"period": ["1"]}}
//!   ]},
//!   "analysis": {"window": 1000}
//! }
//! ```
//!
//! Rationals are strings (`"3"`, `"-1/2"`), sequences are
//! `{"prefix": [...], "period": [...]}` or `{"named": "quasiAnalyticSqrt"}`.
//! Unknown fields are rejected.

use std::fmt;

use conekit::{ExactSpec, ModularPermutation, NamedSequence, OperatorSpec, Rational, WeightSequence};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid value at {path}: {message}")]
    Validation { path: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub space: SpaceDoc,
    pub operator: OperatorDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub analysis: Option<AnalysisDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    #[serde(rename = "type")]
    pub kind: String,
    pub p: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase", try_from = "RawOperator")]
pub enum OperatorDoc {
    Banded { lower: usize, upper: usize, diagonals: Vec<DiagonalDoc> },
    #[serde(rename_all = "camelCase")]
    WeightedPermutation { permutation: PermutationDoc, weights: SequenceDoc },
    Sum { terms: Vec<OperatorDoc> },
}

/// Flat form read from JSON, so unknown fields are reported where they
/// occur rather than at the end of the object.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    kind: String,
    lower: Option<usize>,
    upper: Option<usize>,
    diagonals: Option<Vec<DiagonalDoc>>,
    permutation: Option<PermutationDoc>,
    weights: Option<SequenceDoc>,
    terms: Option<Vec<OperatorDoc>>,
}

impl TryFrom<RawOperator> for OperatorDoc {
    type Error = String;

    fn try_from(raw: RawOperator) -> Result<Self, String> {
        let present = [
            ("lower", raw.lower.is_some()),
            ("upper", raw.upper.is_some()),
            ("diagonals", raw.diagonals.is_some()),
            ("permutation", raw.permutation.is_some()),
            ("weights", raw.weights.is_some()),
            ("terms", raw.terms.is_some()),
        ];
        let allowed: &[&str] = match raw.kind.as_str() {
            "banded" => &["lower", "upper", "diagonals"],
            "weightedPermutation" => &["permutation", "weights"],
            "sum" => &["terms"],
            other => {
                return Err(format!(
                    "unknown operator kind `{other}`, expected one of `banded`, `weightedPermutation`, `sum`"
                ))
            }
        };
        if let Some((field, _)) = present.iter().find(|(f, set)| *set && !allowed.contains(f)) {
            return Err(format!("field `{field}` does not apply to kind `{}`", raw.kind));
        }
        if let Some(field) = allowed.iter().find(|f| !present.iter().any(|(g, set)| g == *f && *set)) {
            return Err(format!("missing field `{field}` for kind `{}`", raw.kind));
        }
        Ok(match raw.kind.as_str() {
            "banded" => OperatorDoc::Banded {
                lower: raw.lower.unwrap_or_default(),
                upper: raw.upper.unwrap_or_default(),
                diagonals: raw.diagonals.unwrap_or_default(),
            },
            "weightedPermutation" => OperatorDoc::WeightedPermutation {
                permutation: raw.permutation.expect("checked above"),
                weights: raw.weights.unwrap_or_default(),
            },
            _ => OperatorDoc::Sum { terms: raw.terms.unwrap_or_default() },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagonalDoc {
    pub offset: i64,
    pub values: SequenceDoc,
}

/// Eventually periodic (`prefix`, `period`) or `named`; exactly one form.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequenceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prefix: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
}

/// `n -> head[n-1]` for `n <= head.len()`, then `n -> n + offsets[n mod modulus]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermutationDoc {
    #[serde(default)]
    pub head: Vec<usize>,
    pub modulus: usize,
    pub offsets: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct AnalysisDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_power: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sections: Option<SectionsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectral: Option<SpectralDoc>,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideals: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreducibility: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectral: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct SpectralDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub start: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
}

/// A validated document.
#[derive(Clone, Debug, PartialEq)]
pub struct Parsed {
    pub p: f64,
    pub spec: ExactSpec,
    pub analysis: AnalysisDoc,
}

#[derive(Clone, Debug, Default)]
struct Path(Vec<String>);

impl Path {
    fn field(&self, name: &str) -> Path {
        let mut p = self.0.clone();
        p.push(format!(".{name}"));
        Path(p)
    }

    fn index(&self, i: usize) -> Path {
        let mut p = self.0.clone();
        p.push(format!("[{i}]"));
        Path(p)
    }

    fn error(&self, message: impl Into<String>) -> DocumentError {
        DocumentError::Validation { path: self.to_string(), message: message.into() }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("$")?;
        self.0.iter().try_for_each(|s| f.write_str(s))
    }
}

/// Parses and validates a document.
pub fn parse(bytes: &[u8]) -> Result<Parsed, DocumentError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let before = &bytes[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        DocumentError::Parse { line, column, message: "invalid UTF-8".into() }
    })?;
    let doc: Document = serde_json::from_str(text).map_err(|e| DocumentError::Parse {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    validate(&doc)
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}

pub fn validate(doc: &Document) -> Result<Parsed, DocumentError> {
    let root = Path::default();
    let space = root.field("space");
    if doc.space.kind != "lp" {
        return Err(space.field("type").error(format!("unsupported space {:?}, expected \"lp\"", doc.space.kind)));
    }
    if !(doc.space.p >= 1.0 && doc.space.p.is_finite()) {
        return Err(space.field("p").error("p must be a finite number >= 1"));
    }
    let spec = operator(&doc.operator, &root.field("operator"))?;
    let analysis = doc.analysis.clone().unwrap_or_default();
    let at = root.field("analysis");
    if analysis.window.is_some_and(|w| w < 2) {
        return Err(at.field("window").error("window must be at least 2"));
    }
    if analysis.edge_budget == Some(0) {
        return Err(at.field("edgeBudget").error("edgeBudget must be positive"));
    }
    if analysis.max_power == Some(0) {
        return Err(at.field("maxPower").error("maxPower must be positive"));
    }
    if let Some(s) = &analysis.spectral {
        let at = at.field("spectral");
        if s.start == Some(0) {
            return Err(at.field("start").error("indices start at 1"));
        }
        if s.max_n == Some(0) {
            return Err(at.field("maxN").error("maxN must be positive"));
        }
        if s.epsilon.is_some_and(|e| !(e > 0.0 && e.is_finite())) {
            return Err(at.field("epsilon").error("epsilon must be positive"));
        }
    }
    Ok(Parsed { p: doc.space.p, spec, analysis })
}

fn operator(doc: &OperatorDoc, at: &Path) -> Result<ExactSpec, DocumentError> {
    match doc {
        OperatorDoc::Banded { lower, upper, diagonals } => {
            let mut seen = std::collections::BTreeSet::new();
            let mut parsed = Vec::new();
            for (i, d) in diagonals.iter().enumerate() {
                let here = at.field("diagonals").index(i);
                if !seen.insert(d.offset) {
                    return Err(here.field("offset").error(format!("offset {} listed twice", d.offset)));
                }
                if d.offset > *lower as i64 || d.offset < -(*upper as i64) {
                    return Err(here.field("offset").error(format!("offset {} outside the band", d.offset)));
                }
                parsed.push((d.offset, sequence(&d.values, &here.field("values"))?));
            }
            OperatorSpec::banded(*lower, *upper, parsed).map_err(|e| at.error(e.to_string()))
        }
        OperatorDoc::WeightedPermutation { permutation, weights } => {
            let perm = ModularPermutation::new(permutation.head.clone(), permutation.modulus, permutation.offsets.clone())
                .map_err(|e| at.field("permutation").error(e.to_string()))?;
            let w = sequence(weights, &at.field("weights"))?;
            OperatorSpec::weighted_permutation(perm, w).map_err(|e| at.field("weights").error(e.to_string()))
        }
        OperatorDoc::Sum { terms } => {
            let parsed = terms
                .iter()
                .enumerate()
                .map(|(i, t)| operator(t, &at.field("terms").index(i)))
                .collect::<Result<Vec<_>, _>>()?;
            OperatorSpec::sum(parsed).map_err(|e| at.field("terms").error(e.to_string()))
        }
    }
}

fn sequence(doc: &SequenceDoc, at: &Path) -> Result<WeightSequence<Rational>, DocumentError> {
    if let Some(name) = &doc.named {
        if doc.prefix.is_some() || doc.period.is_some() {
            return Err(at.error("a named sequence takes no prefix or period"));
        }
        return NamedSequence::from_name(name)
            .map(WeightSequence::from)
            .ok_or_else(|| at.field("named").error(format!("unknown sequence {name:?}")));
    }
    let Some(period) = &doc.period else {
        return Err(at.error("missing \"period\" (or \"named\")"));
    };
    let values = |list: &[String], field: &str| -> Result<Vec<Rational>, DocumentError> {
        list.iter().enumerate().map(|(i, s)| entry(s, &at.field(field).index(i))).collect()
    };
    let prefix = values(doc.prefix.as_deref().unwrap_or_default(), "prefix")?;
    let period = values(period, "period")?;
    if period.is_empty() {
        return Err(at.field("period").error("period must be nonempty"));
    }
    WeightSequence::periodic(prefix, period).map_err(|e| at.error(e.to_string()))
}

fn entry(text: &str, at: &Path) -> Result<Rational, DocumentError> {
    let value = parse_rational(text).ok_or_else(|| at.error(format!("malformed rational {text:?}")))?;
    if value.is_negative() {
        return Err(at.error(format!("negative entry {text}")));
    }
    Ok(value)
}

/// `"n"` or `"n/d"` with `d != 0`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim().parse().ok()?, d.trim().parse().ok()?),
        None => (text.trim().parse().ok()?, 1.into()),
    };
    let den: num_bigint::BigInt = den;
    (!den.is_zero()).then(|| Rational::new(num, den))
}

pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Document form of an operator.
pub fn operator_doc(spec: &ExactSpec) -> OperatorDoc {
    match spec {
        OperatorSpec::Banded(b) => OperatorDoc::Banded {
            lower: b.lower(),
            upper: b.upper(),
            diagonals: b.diagonals().iter().map(|(&offset, seq)| DiagonalDoc { offset, values: sequence_doc(seq) }).collect(),
        },
        OperatorSpec::WeightedPermutation(w) => {
            let map = w.permutation().as_map();
            OperatorDoc::WeightedPermutation {
                permutation: PermutationDoc {
                    head: map.head().to_vec(),
                    modulus: map.modulus(),
                    offsets: map.offsets().to_vec(),
                },
                weights: sequence_doc(&w.weight_sequence()),
            }
        }
        OperatorSpec::Sum(terms) => OperatorDoc::Sum { terms: terms.iter().map(operator_doc).collect() },
    }
}

pub fn sequence_doc(seq: &WeightSequence<Rational>) -> SequenceDoc {
    match seq {
        WeightSequence::Named(named) => SequenceDoc { named: Some(named.name().into()), ..SequenceDoc::default() },
        WeightSequence::Periodic(p) => SequenceDoc {
            prefix: (!p.prefix().is_empty()).then(|| p.prefix().iter().map(format_rational).collect()),
            period: Some(p.period().iter().map(format_rational).collect()),
            named: None,
        },
    }
}

/// Document for a validated operator and options.
pub fn to_document(parsed: &Parsed) -> Document {
    let analysis = (parsed.analysis != AnalysisDoc::default()).then(|| parsed.analysis.clone());
    Document { space: SpaceDoc { kind: "lp".into(), p: parsed.p }, operator: operator_doc(&parsed.spec), analysis }
}

/// Pretty JSON with a trailing newline.
pub fn serialize(parsed: &Parsed) -> String {
    let mut out = serde_json::to_string_pretty(&to_document(parsed)).expect("documents serialize");
    out.push('\n');
    out
}
