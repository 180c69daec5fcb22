//! Exact nonnegative rational coefficients.
//!
//! Every arithmetic operation is exact; nothing in this crate ever rounds.
//! Values are kept in lowest terms, so structural equality coincides with
//! numeric equality.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use num::bigint::BigUint;
use num::rational::Ratio;
use num::{One, Zero};

use crate::error::Error;

/// An exact nonnegative rational of arbitrary precision.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coef(Ratio<BigUint>);

impl Coef {
    pub fn zero() -> Self {
        Coef(Ratio::zero())
    }

    pub fn one() -> Self {
        Coef(Ratio::one())
    }

    /// Builds `n / d`, reduced to lowest terms.
    ///
    /// Panics if `d == 0`; use [`Coef::from_str`] for untrusted input.
    pub fn ratio(n: u64, d: u64) -> Self {
        assert!(d != 0, "denominator must be nonzero");
        Coef(Ratio::new(BigUint::from(n), BigUint::from(d)))
    }

    pub fn nat(n: u64) -> Self {
        Coef(Ratio::from_integer(BigUint::from(n)))
    }

    pub fn from_nat(n: BigUint) -> Self {
        Coef(Ratio::from_integer(n))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// The numerator of the lowest-terms representation.
    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    /// The denominator of the lowest-terms representation; always ≥ 1.
    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    /// Returns the value as a natural number, if it is one.
    pub fn as_natural(&self) -> Option<&BigUint> {
        if self.0.denom().is_one() {
            Some(self.0.numer())
        } else {
            None
        }
    }

    /// Exact division. Panics if `other` is zero.
    pub fn div_exact(&self, other: &Coef) -> Coef {
        assert!(!other.is_zero(), "division by zero coefficient");
        Coef(&self.0 / &other.0)
    }
}

impl Add for Coef {
    type Output = Coef;
    fn add(self, rhs: Coef) -> Coef {
        Coef(self.0 + rhs.0)
    }
}

impl Add<&Coef> for &Coef {
    type Output = Coef;
    fn add(self, rhs: &Coef) -> Coef {
        Coef(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Coef> for Coef {
    fn add_assign(&mut self, rhs: &Coef) {
        self.0 = &self.0 + &rhs.0;
    }
}

impl Mul for Coef {
    type Output = Coef;
    fn mul(self, rhs: Coef) -> Coef {
        Coef(self.0 * rhs.0)
    }
}

impl Mul<&Coef> for &Coef {
    type Output = Coef;
    fn mul(self, rhs: &Coef) -> Coef {
        Coef(&self.0 * &rhs.0)
    }
}

impl MulAssign<&Coef> for Coef {
    fn mul_assign(&mut self, rhs: &Coef) {
        self.0 = &self.0 * &rhs.0;
    }
}

impl Sum for Coef {
    fn sum<I: Iterator<Item = Coef>>(iter: I) -> Coef {
        iter.fold(Coef::zero(), |acc, c| acc + c)
    }
}

impl<'a> Sum<&'a Coef> for Coef {
    fn sum<I: Iterator<Item = &'a Coef>>(iter: I) -> Coef {
        iter.fold(Coef::zero(), |mut acc, c| {
            acc += c;
            acc
        })
    }
}

impl Product for Coef {
    fn product<I: Iterator<Item = Coef>>(iter: I) -> Coef {
        iter.fold(Coef::one(), |acc, c| acc * c)
    }
}

/// Renders `p/q`, or just `p` when the denominator is 1.
impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p` or `p/q` with decimal digits only.
impl FromStr for Coef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let err = |detail: &str| Error::InvalidCoef {
            input: s.to_string(),
            detail: detail.to_string(),
        };
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let parse_nat = |part: &str| -> Result<BigUint, Error> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                Err(err("expected decimal digits"))
            } else {
                BigUint::from_str(part).map_err(|_| err("expected decimal digits"))
            }
        };
        let n = parse_nat(num_str)?;
        let d = match den_str {
            Some(d) => parse_nat(d)?,
            None => BigUint::one(),
        };
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Coef(Ratio::new(n, d)))
    }
}
