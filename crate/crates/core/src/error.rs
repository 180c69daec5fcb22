use thiserror::Error;

use crate::coef::Coef;
use crate::value::Value;

/// Errors raised by library operations.
///
/// Check failures are never errors; they are reported through
/// [`CheckReport`](crate::report::CheckReport).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A map argument lacked a binding for a value it was applied to.
    #[error("no mapping for key {key}")]
    UndefinedKey { key: Value },

    /// A value did not have the constructor an operation requires.
    #[error("expected {expected}, found {found}")]
    Shape { expected: String, found: Value },

    /// A coefficient that must be a natural number was not.
    #[error("coefficient {coef} of key {key} is not a natural number")]
    NonNaturalCoefficient { key: Value, coef: Coef },

    /// Total mass differed from 1 where a distribution was required.
    #[error("total mass is {mass}, expected 1")]
    MassNotOne { mass: Coef },

    /// A permutation was applied to a list of the wrong length.
    #[error("length mismatch: permutation on {expected} applied to list of {found}")]
    LengthMismatch { expected: usize, found: usize },

    /// The index sequence of a permutation was not a bijection.
    #[error("invalid permutation: {detail}")]
    InvalidPermutation { detail: String },

    /// A 2-cell term failed to typecheck.
    #[error("type mismatch in {term}: {detail}")]
    TypeMismatch { term: String, detail: String },

    /// A 2-cell term failed to parse.
    #[error("syntax error at byte {pos}: {detail}")]
    Syntax { pos: usize, detail: String },

    /// A coefficient string could not be parsed.
    #[error("invalid coefficient {input:?}: {detail}")]
    InvalidCoef { input: String, detail: String },

    /// A JSON document did not match the expected schema.
    #[error("schema error at {path}: {detail}")]
    Schema { path: String, detail: String },

    /// A suite name outside the registered catalog.
    #[error("unknown suite {name:?}")]
    UnknownSuite { name: String },

    /// Bounds that cannot drive a check (empty carrier, empty pool, ...).
    #[error("invalid bounds: {detail}")]
    InvalidBounds { detail: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
