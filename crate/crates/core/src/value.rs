//! The recursive ground universe of values.
//!
//! Atoms, lists of values and canonical finite-support maps all live in one
//! type, so nested objects (lists of maps, maps whose keys are maps, ...)
//! are first-class and comparable.

use std::fmt;

use crate::finsupp::FinSupp;

/// A ground value.
///
/// The derived ordering is a strict total order: atoms sort by name, lists
/// and map entry sequences lexicographically, and constructors rank
/// `Atom < List < Map`. Because maps are always canonical, structural
/// equality coincides with extensional equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Atom(String),
    List(Vec<Value>),
    Map(FinSupp),
}

impl Value {
    pub fn atom(name: impl Into<String>) -> Self {
        Value::Atom(name.into())
    }

    pub fn list(items: impl IntoIterator<Item = Value>) -> Self {
        Value::List(items.into_iter().collect())
    }

    pub fn as_list(&self) -> Option<&[Value]> {
        match self {
            Value::List(items) => Some(items),
            _ => None,
        }
    }

    pub fn as_map(&self) -> Option<&FinSupp> {
        match self {
            Value::Map(f) => Some(f),
            _ => None,
        }
    }

    /// Short constructor name, used in shape errors.
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Atom(_) => "atom",
            Value::List(_) => "list",
            Value::Map(_) => "map",
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Atom(name) => write!(f, "{name}"),
            Value::List(items) => {
                write!(f, "[")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{item}")?;
                }
                write!(f, "]")
            }
            Value::Map(map) => {
                write!(f, "{{")?;
                for (i, (k, c)) in map.entries().iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{k}: {c}")?;
                }
                write!(f, "}}")
            }
        }
    }
}
