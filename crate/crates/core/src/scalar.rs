//! The min-plus semiring 𝕋 = (ℚ ∪ {∞}, min, +) with exact rational values.
//!
//! Tropical addition `⊕` is the minimum, tropical multiplication `⊙` is
//! ordinary addition. The additive identity is `∞`, the multiplicative
//! identity is the rational `0`. Everything is exact: ties between terms
//! (which drive bend loci and matroid circuits) are decided without rounding.
//!
//! ```
//! use tropical::TropScalar;
//!
//! let a: TropScalar = "1/2".parse().unwrap();
//! let b: TropScalar = "1/3".parse().unwrap();
//! assert_eq!(a.oplus(&b), b);
//! assert_eq!(a.odot(&b).to_string(), "5/6");
//! assert_eq!(a.oplus(&TropScalar::infinity()), a);
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// An element of the tropical semiring: an exact rational or `∞`.
///
/// The derived order puts every rational strictly below `∞`, so `min` on
/// this order is tropical addition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropScalar {
    Finite(BigRational),
    Infinity,
}

impl TropScalar {
    /// The tropical zero `∞`.
    pub fn infinity() -> Self {
        TropScalar::Infinity
    }

    /// The tropical one, i.e. the rational `0`.
    pub fn one() -> Self {
        TropScalar::Finite(BigRational::zero())
    }

    pub fn from_int(v: i64) -> Self {
        TropScalar::Finite(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        TropScalar::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, TropScalar::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            TropScalar::Finite(r) => Some(r),
            TropScalar::Infinity => None,
        }
    }

    /// Tropical addition: the minimum.
    pub fn oplus(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical multiplication: rational addition, absorbing at `∞`.
    pub fn odot(&self, other: &Self) -> Self {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::Infinity,
        }
    }

    /// Tropical division `a ⊘ b = a - b`; dividing by `∞` is an error.
    pub fn oslash(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (_, TropScalar::Infinity) => Err(Error::DivisionByInfinity),
            (TropScalar::Infinity, _) => Ok(TropScalar::Infinity),
            (TropScalar::Finite(a), TropScalar::Finite(b)) => Ok(TropScalar::Finite(a - b)),
        }
    }

    /// Tropical power `a^k = k·a` for an integer exponent.
    ///
    /// Negative exponents of `∞` are undefined and reported as division errors.
    pub fn pow(&self, k: i64) -> Result<Self> {
        match self {
            TropScalar::Finite(a) => Ok(TropScalar::Finite(a * BigRational::from_integer(k.into()))),
            TropScalar::Infinity if k > 0 => Ok(TropScalar::Infinity),
            TropScalar::Infinity if k == 0 => Ok(TropScalar::one()),
            TropScalar::Infinity => Err(Error::DivisionByInfinity),
        }
    }
}

impl From<BigRational> for TropScalar {
    fn from(r: BigRational) -> Self {
        TropScalar::Finite(r)
    }
}

impl From<i64> for TropScalar {
    fn from(v: i64) -> Self {
        TropScalar::from_int(v)
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Infinity => f.write_str("inf"),
            TropScalar::Finite(r) => write!(f, "{}", r),
        }
    }
}

impl FromStr for TropScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(TropScalar::Infinity);
        }
        parse_rational(s).map(TropScalar::Finite)
    }
}

/// Parses `"p"` or `"p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// `a ⊕ b`.
pub fn trop_add(a: &TropScalar, b: &TropScalar) -> TropScalar {
    a.oplus(b)
}

/// `a ⊙ b`.
pub fn trop_mul(a: &TropScalar, b: &TropScalar) -> TropScalar {
    a.odot(b)
}

/// `a ⊘ b`.
pub fn trop_div(a: &TropScalar, b: &TropScalar) -> Result<TropScalar> {
    a.oslash(b)
}

/// Tropical sum of an iterator; `∞` when empty.
pub fn trop_sum<'a, I: IntoIterator<Item = &'a TropScalar>>(items: I) -> TropScalar {
    items
        .into_iter()
        .min()
        .cloned()
        .unwrap_or(TropScalar::Infinity)
}

/// A value of the max-plus model (ℚ ∪ {−∞}, max, +).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MaxScalar {
    NegInfinity,
    Finite(BigRational),
}

impl MaxScalar {
    pub fn max_add(&self, other: &Self) -> Self {
        std::cmp::max(self, other).clone()
    }

    pub fn max_mul(&self, other: &Self) -> Self {
        match (self, other) {
            (MaxScalar::Finite(a), MaxScalar::Finite(b)) => MaxScalar::Finite(a + b),
            _ => MaxScalar::NegInfinity,
        }
    }
}

impl fmt::Display for MaxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxScalar::NegInfinity => f.write_str("-inf"),
            MaxScalar::Finite(r) => write!(f, "{}", r),
        }
    }
}

/// The isomorphism `t ↦ −t` from the min-plus to the max-plus model.
pub fn to_max_model(a: &TropScalar) -> MaxScalar {
    match a {
        TropScalar::Infinity => MaxScalar::NegInfinity,
        TropScalar::Finite(r) => MaxScalar::Finite(-r),
    }
}

/// Inverse of [`to_max_model`].
pub fn from_max_model(a: &MaxScalar) -> TropScalar {
    match a {
        MaxScalar::NegInfinity => TropScalar::Infinity,
        MaxScalar::Finite(r) => TropScalar::Finite(-r),
    }
}

/// Strict comparison helper used where "attained at least twice" matters.
pub(crate) fn count_min<'a, I>(values: I) -> (TropScalar, usize)
where
    I: IntoIterator<Item = &'a TropScalar>,
{
    let mut best = TropScalar::Infinity;
    let mut count = 0usize;
    for v in values {
        match v.cmp(&best) {
            Ordering::Less => {
                best = v.clone();
                count = 1;
            }
            Ordering::Equal => count += 1,
            Ordering::Greater => {}
        }
    }
    (best, count)
}
