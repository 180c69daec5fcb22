//! Canonical finite-support functions from values to coefficients, with the
//! functor action, unit and multiplication that make them a monad.
//!
//! Canonical form — entries sorted by key, no zero coefficients — is an
//! invariant of [`FinSupp`], so every equality test in the crate is a plain
//! structural comparison.

use std::collections::BTreeMap;

use crate::coef::Coef;
use crate::error::{Error, Result};
use crate::value::Value;

/// A finite-support function `Value -> Coef` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinSupp {
    entries: Vec<(Value, Coef)>,
}

impl FinSupp {
    /// The zero function (empty support).
    pub fn empty() -> Self {
        FinSupp { entries: Vec::new() }
    }

    /// Builds the canonical form of an arbitrary entry sequence: duplicate
    /// keys are summed, zero entries dropped, keys sorted.
    pub fn canonicalize(pairs: impl IntoIterator<Item = (Value, Coef)>) -> Self {
        let mut acc: BTreeMap<Value, Coef> = BTreeMap::new();
        for (k, c) in pairs {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&k) {
                Some(existing) => *existing += &c,
                None => {
                    acc.insert(k, c);
                }
            }
        }
        // Summing positives can never produce zero, so no second sweep.
        FinSupp {
            entries: acc.into_iter().collect(),
        }
    }

    pub fn entries(&self) -> &[(Value, Coef)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Value, Coef)> {
        self.entries.iter()
    }

    /// The coefficient at `key`; zero when `key` is outside the support.
    pub fn get(&self, key: &Value) -> Coef {
        match self.entries.binary_search_by(|(k, _)| k.cmp(key)) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => Coef::zero(),
        }
    }

    /// The keys of the canonical form, in increasing structural order.
    pub fn support(&self) -> impl Iterator<Item = &Value> {
        self.entries.iter().map(|(k, _)| k)
    }

    /// Support size.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> Coef {
        self.entries.iter().map(|(_, c)| c).sum()
    }

    /// Pointwise sum.
    pub fn add(&self, other: &FinSupp) -> FinSupp {
        FinSupp::canonicalize(
            self.entries
                .iter()
                .chain(other.entries.iter())
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    /// Pushes the support through `f`, summing coefficients over collisions.
    pub fn map_keys(&self, mut f: impl FnMut(&Value) -> Result<Value>) -> Result<FinSupp> {
        let mut mapped = Vec::with_capacity(self.entries.len());
        for (k, c) in &self.entries {
            mapped.push((f(k)?, c.clone()));
        }
        Ok(FinSupp::canonicalize(mapped))
    }
}

impl FromIterator<(Value, Coef)> for FinSupp {
    fn from_iter<I: IntoIterator<Item = (Value, Coef)>>(iter: I) -> Self {
        FinSupp::canonicalize(iter)
    }
}

/// A finite association of values, used to pass maps `h : X -> Y` around in
/// a serializable, totality-checkable form.
#[derive(Clone, Debug, Default)]
pub struct ValueTable(BTreeMap<Value, Value>);

impl ValueTable {
    pub fn new() -> Self {
        ValueTable(BTreeMap::new())
    }

    pub fn insert(&mut self, from: Value, to: Value) {
        self.0.insert(from, to);
    }

    pub fn apply(&self, v: &Value) -> Result<Value> {
        self.0
            .get(v)
            .cloned()
            .ok_or_else(|| Error::UndefinedKey { key: v.clone() })
    }
}

impl FromIterator<(Value, Value)> for ValueTable {
    fn from_iter<I: IntoIterator<Item = (Value, Value)>>(iter: I) -> Self {
        ValueTable(iter.into_iter().collect())
    }
}

/// Functor action: `fmap_f(h, f)(b) = Σ_{h(a)=b} f(a)`.
///
/// `h` must be defined on every support element of `f`.
pub fn fmap_f(h: &ValueTable, f: &FinSupp) -> Result<FinSupp> {
    f.map_keys(|k| h.apply(k))
}

/// Monad unit: the point mass `{a: 1}`.
pub fn eta_f(a: Value) -> FinSupp {
    FinSupp {
        entries: vec![(a, Coef::one())],
    }
}

/// Monad multiplication: `mu_f(f)(a) = Σ_g f(g) · g(a)`.
///
/// Every key of `f` must itself be a map.
pub fn mu_f(f: &FinSupp) -> Result<FinSupp> {
    let mut acc: Vec<(Value, Coef)> = Vec::new();
    for (g_val, outer) in f.iter() {
        let g = g_val.as_map().ok_or_else(|| Error::Shape {
            expected: "map key".to_string(),
            found: g_val.clone(),
        })?;
        for (a, inner) in g.iter() {
            acc.push((a.clone(), outer * inner));
        }
    }
    let flat = FinSupp::canonicalize(acc);
    #[cfg(feature = "mutation")]
    let flat = mutate_drop_last(flat);
    Ok(flat)
}

/// Negative-control sabotage: forget the last entry of a multi-entry result.
#[cfg(feature = "mutation")]
fn mutate_drop_last(mut f: FinSupp) -> FinSupp {
    if f.entries.len() >= 2 {
        f.entries.pop();
    }
    f
}
