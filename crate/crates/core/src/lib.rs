//! Finite-support functions over exact nonnegative rationals, the list,
//! multiset and distribution monads they carry, the distributive laws
//! tensoring collections of them, and a bounded equational checker that
//! verifies the laws exhaustively at configurable bounds.

pub mod coef;
pub mod collections;
pub mod distlaw;
pub mod error;
pub mod finsupp;
pub mod value;

pub use coef::Coef;
pub use collections::{Dist, Multiset, Permutation};
pub use error::{Error, Result};
pub use finsupp::{FinSupp, ValueTable};
pub use value::Value;
