//! JSON wire formats.
//!
//! Values are tagged objects: `{"atom": "a"}`, `{"list": [...]}` or
//! `{"map": [{"key": .., "coef": "p/q"}, ..]}`. A finite-support function is
//! the bare entry array. Coefficients travel as exact `p/q` strings (plain
//! `p` when the denominator is 1); nothing is ever a JSON float.
//!
//! Parsing is forgiving where the formats overlap: a bare string is an
//! atom, a bare JSON array is a list, and duplicate or zero entries are
//! canonicalized away. Emission always uses the canonical tagged form, so
//! serializing a canonical value is byte-deterministic.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use crate::coef::Coef;
use crate::collections::{Dist, Multiset};
use crate::error::{Error, Result};
use crate::finsupp::FinSupp;
use crate::value::Value;

impl Serialize for Coef {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Coef {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse::<Coef>().map_err(D::Error::custom)
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        value_to_json(self).serialize(serializer)
    }
}

impl Serialize for FinSupp {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        finsupp_to_json(self).serialize(serializer)
    }
}

impl Serialize for Multiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_finsupp().serialize(serializer)
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_finsupp().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = serde_json::Value::deserialize(deserializer)?;
        value_from_json(&j, "$").map_err(D::Error::custom)
    }
}

impl<'de> Deserialize<'de> for FinSupp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = serde_json::Value::deserialize(deserializer)?;
        finsupp_from_json(&j, "$").map_err(D::Error::custom)
    }
}

pub fn value_to_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Atom(name) => json!({ "atom": name }),
        Value::List(items) => {
            json!({ "list": items.iter().map(value_to_json).collect::<Vec<_>>() })
        }
        Value::Map(f) => json!({ "map": entries_to_json(f) }),
    }
}

fn entries_to_json(f: &FinSupp) -> Vec<serde_json::Value> {
    f.iter()
        .map(|(k, c)| json!({ "key": value_to_json(k), "coef": c.to_string() }))
        .collect()
}

pub fn finsupp_to_json(f: &FinSupp) -> serde_json::Value {
    serde_json::Value::Array(entries_to_json(f))
}

fn schema_err(path: &str, detail: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        detail: detail.into(),
    }
}

/// Parses a value; accepts the tagged form plus the shorthand of a bare
/// string for an atom and a bare array for a list.
pub fn value_from_json(j: &serde_json::Value, path: &str) -> Result<Value> {
    match j {
        serde_json::Value::String(s) => Ok(Value::Atom(s.clone())),
        serde_json::Value::Array(items) => {
            let mut out = Vec::with_capacity(items.len());
            for (i, item) in items.iter().enumerate() {
                out.push(value_from_json(item, &format!("{path}[{i}]"))?);
            }
            Ok(Value::List(out))
        }
        serde_json::Value::Object(obj) => {
            if obj.len() != 1 {
                return Err(schema_err(
                    path,
                    "expected exactly one of \"atom\", \"list\", \"map\"",
                ));
            }
            let (tag, inner) = obj.iter().next().expect("len checked");
            match tag.as_str() {
                "atom" => match inner {
                    serde_json::Value::String(s) => Ok(Value::Atom(s.clone())),
                    _ => Err(schema_err(&format!("{path}.atom"), "expected a string")),
                },
                "list" => value_from_json(inner, &format!("{path}.list")),
                "map" => Ok(Value::Map(finsupp_from_json(
                    inner,
                    &format!("{path}.map"),
                )?)),
                other => Err(schema_err(path, format!("unknown tag {other:?}"))),
            }
        }
        _ => Err(schema_err(
            path,
            "expected a string, array, or tagged object",
        )),
    }
}

fn coef_from_json(j: &serde_json::Value, path: &str) -> Result<Coef> {
    match j {
        serde_json::Value::String(s) => s.parse::<Coef>().map_err(|e| match e {
            Error::InvalidCoef { input, detail } => {
                schema_err(path, format!("invalid coefficient {input:?}: {detail}"))
            }
            other => other,
        }),
        _ => Err(schema_err(path, "expected a \"p/q\" string")),
    }
}

/// Parses an entry array into a canonical finite-support function:
/// duplicates are merged, zeros dropped.
pub fn finsupp_from_json(j: &serde_json::Value, path: &str) -> Result<FinSupp> {
    let items = j
        .as_array()
        .ok_or_else(|| schema_err(path, "expected an array of {\"key\", \"coef\"} entries"))?;
    let mut pairs = Vec::with_capacity(items.len());
    for (i, item) in items.iter().enumerate() {
        let entry_path = format!("{path}[{i}]");
        let obj = item
            .as_object()
            .ok_or_else(|| schema_err(&entry_path, "expected a {\"key\", \"coef\"} object"))?;
        let key_json = obj
            .get("key")
            .ok_or_else(|| schema_err(&entry_path, "missing \"key\""))?;
        let coef_json = obj
            .get("coef")
            .ok_or_else(|| schema_err(&entry_path, "missing \"coef\""))?;
        if let Some(extra) = obj.keys().find(|k| *k != "key" && *k != "coef") {
            return Err(schema_err(&entry_path, format!("unknown field {extra:?}")));
        }
        let key = value_from_json(key_json, &format!("{entry_path}.key"))?;
        let coef = coef_from_json(coef_json, &format!("{entry_path}.coef"))?;
        pairs.push((key, coef));
    }
    Ok(FinSupp::canonicalize(pairs))
}

/// Parses and re-validates a multiset.
pub fn multiset_from_json(j: &serde_json::Value, path: &str) -> Result<Multiset> {
    Multiset::try_from(finsupp_from_json(j, path)?)
}

/// Parses and re-validates a distribution.
pub fn dist_from_json(j: &serde_json::Value, path: &str) -> Result<Dist> {
    Dist::try_from(finsupp_from_json(j, path)?)
}

/// Parses a JSON array of values.
pub fn value_list_from_json(j: &serde_json::Value, path: &str) -> Result<Vec<Value>> {
    match value_from_json(j, path)? {
        Value::List(items) => Ok(items),
        other => Err(schema_err(path, format!("expected a list, found {other}"))),
    }
}

/// Parses a JSON array of finite-support functions.
pub fn finsupp_list_from_json(j: &serde_json::Value, path: &str) -> Result<Vec<FinSupp>> {
    let items = j
        .as_array()
        .ok_or_else(|| schema_err(path, "expected an array of finite-support functions"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, item)| finsupp_from_json(item, &format!("{path}[{i}]")))
        .collect()
}
