#![allow(dead_code)]

use std::path::PathBuf;

use conekit::{ExactSpec, NamedSequence, OperatorSpec, WeightSequence};
use conekit_cli::document::{self, AnalysisDoc, Document, SectionsDoc, SpaceDoc, SpectralDoc};
use conekit_testkit as kit;
use rand::Rng;
use serde_json::Value;

pub const BUNDLED: [&str; 5] = ["example-one", "shift", "two-chain", "quasi-analytic-shift", "zero-link-tridiagonal"];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn bundled(name: &str) -> Vec<u8> {
    std::fs::read(crate_dir().join("documents").join(format!("{name}.json"))).unwrap()
}

pub fn schema() -> Value {
    serde_json::from_slice(&std::fs::read(crate_dir().join("schema/report.schema.json")).unwrap()).unwrap()
}

/// Structured operator, now and then a weighted shift with named weights.
pub fn operator(rng: &mut impl Rng) -> ExactSpec {
    if rng.random_bool(0.15) {
        let named = if rng.random_bool(0.5) { NamedSequence::QuasiAnalyticSqrt } else { NamedSequence::FactorialReciprocal };
        OperatorSpec::banded(1, 0, [(1, WeightSequence::from(named))]).unwrap()
    } else {
        kit::structured(rng)
    }
}

/// Random valid document with random analysis options; windows stay small
/// so analysing it is quick.
pub fn document(rng: &mut impl Rng) -> Document {
    let spec = operator(rng);
    let p = [1.0, 1.5, 2.0, 3.0][rng.random_range(0..4)];
    let analysis = rng.random_bool(0.7).then(|| AnalysisDoc {
        // the default window is 1000; keep analyses fast
        window: Some(rng.random_range(2..=40)),
        max_power: rng.random_bool(0.5).then(|| rng.random_range(1..=80)),
        edge_budget: rng.random_bool(0.5).then(|| rng.random_range(10_000..=1_000_000)),
        sections: rng.random_bool(0.5).then(|| SectionsDoc {
            classification: flag(rng),
            ideals: flag(rng),
            irreducibility: flag(rng),
            spectral: flag(rng),
        }),
        spectral: rng.random_bool(0.5).then(|| SpectralDoc {
            start: rng.random_bool(0.5).then(|| rng.random_range(1..=5)),
            max_n: rng.random_bool(0.5).then(|| rng.random_range(1..=300)),
            epsilon: rng.random_bool(0.5).then(|| [1e-3, 1e-2, 0.5][rng.random_range(0..3)]),
        }),
    });
    Document { space: SpaceDoc { kind: "lp".into(), p }, operator: document::operator_doc(&spec), analysis }
}

fn flag(rng: &mut impl Rng) -> Option<bool> {
    rng.random_bool(0.5).then(|| rng.random_bool(0.5))
}

/// Checks `value` against the subset of JSON Schema the report schema
/// uses: `$ref`, `oneOf`, `type`, `const`, `enum`, `required`,
/// `properties`, `additionalProperties: false`, `items`, `minimum`.
pub fn schema_errors(root: &Value, value: &Value) -> Vec<String> {
    let mut errors = vec![];
    check(root, root, value, "$", &mut errors);
    errors
}

fn resolve<'a>(root: &'a Value, reference: &str) -> &'a Value {
    let pointer = reference.strip_prefix('#').expect("local references only");
    root.pointer(pointer).unwrap_or_else(|| panic!("unresolved {reference}"))
}

fn check(root: &Value, schema: &Value, value: &Value, path: &str, errors: &mut Vec<String>) {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        check(root, resolve(root, r), value, path, errors);
    }
    if let Some(Value::Array(options)) = schema.get("oneOf") {
        let passing = options
            .iter()
            .filter(|s| {
                let mut e = vec![];
                check(root, s, value, path, &mut e);
                e.is_empty()
            })
            .count();
        if passing != 1 {
            errors.push(format!("{path}: matches {passing} oneOf branches"));
        }
    }
    if let Some(t) = schema.get("type").and_then(Value::as_str) {
        let ok = match t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "boolean" => value.is_boolean(),
            "number" => value.is_number(),
            "integer" => value.is_i64() || value.is_u64(),
            other => panic!("unsupported type {other}"),
        };
        if !ok {
            errors.push(format!("{path}: expected {t}"));
            return;
        }
    }
    if let Some(c) = schema.get("const") {
        if c != value {
            errors.push(format!("{path}: expected {c}"));
        }
    }
    if let Some(Value::Array(options)) = schema.get("enum") {
        if !options.contains(value) {
            errors.push(format!("{path}: {value} not in enum"));
        }
    }
    if let (Some(min), Some(v)) = (schema.get("minimum").and_then(Value::as_f64), value.as_f64()) {
        if v < min {
            errors.push(format!("{path}: {v} below {min}"));
        }
    }
    if let Value::Object(map) = value {
        if let Some(Value::Array(required)) = schema.get("required") {
            for key in required.iter().filter_map(Value::as_str) {
                if !map.contains_key(key) {
                    errors.push(format!("{path}: missing {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (key, v) in map {
            match props.and_then(|p| p.get(key)) {
                Some(s) => check(root, s, v, &format!("{path}.{key}"), errors),
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    errors.push(format!("{path}: unexpected {key}"))
                }
                None => {}
            }
        }
    }
    if let (Value::Array(items), Some(s)) = (value, schema.get("items")) {
        for (i, v) in items.iter().enumerate() {
            check(root, s, v, &format!("{path}[{i}]"), errors);
        }
    }
}
