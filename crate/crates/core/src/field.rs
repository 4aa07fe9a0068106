//! Coefficient fields: exact rationals and finite Puiseux sums.
//!
//! A [`Puiseux`] value is a finite sum `Σ s_i t^{q_i}` with rational
//! exponents and nonzero rational coefficients. Finite sums are closed under
//! `+`, `−` and `×` (they form the group ring ℚ[t^ℚ], an integral domain) but
//! not under division; [`FieldElem::div_exact`] divides when the quotient
//! is again a finite sum, which is all fraction-free elimination needs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// A finite Puiseux sum, keyed by exponent. No zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Puiseux {
    terms: BTreeMap<BigRational, BigRational>,
}

impl Puiseux {
    pub fn zero() -> Self {
        Puiseux::default()
    }

    pub fn constant(c: BigRational) -> Self {
        Puiseux::from_terms([(BigRational::zero(), c)])
    }

    /// `c · t^e`
    pub fn monomial(e: BigRational, c: BigRational) -> Self {
        Puiseux::from_terms([(e, c)])
    }

    /// Sums `(exponent, coefficient)` pairs, combining equal exponents.
    pub fn from_terms<I: IntoIterator<Item = (BigRational, BigRational)>>(terms: I) -> Self {
        let mut p = Puiseux::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: BigRational, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigRational, &BigRational)> {
        self.terms.iter()
    }

    /// Least exponent with nonzero coefficient.
    pub fn order(&self) -> Option<&BigRational> {
        self.terms.keys().next()
    }

    fn lowest(&self) -> Option<(&BigRational, &BigRational)> {
        self.terms.iter().next()
    }

    fn highest_exponent(&self) -> Option<&BigRational> {
        self.terms.keys().next_back()
    }

    /// If every exponent is zero, the constant term.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&BigRational::zero()).cloned(),
            _ => None,
        }
    }

    fn scale_shift(&self, e: &BigRational, c: &BigRational) -> Puiseux {
        Puiseux { terms: self.terms.iter().map(|(k, v)| (k + e, v * c)).collect() }
    }

    /// Exact quotient `self / other` if it is a finite sum.
    ///
    /// Long division from the lowest terms; the quotient's top exponent is
    /// forced to be `top(self) − top(other)`, which bounds the loop.
    pub fn div_exact(&self, other: &Puiseux) -> Option<Puiseux> {
        let (eb, cb) = other.lowest()?;
        if self.is_zero() {
            return Some(Puiseux::zero());
        }
        let limit = self.highest_exponent()? - other.highest_exponent()?;
        let mut rem = self.clone();
        let mut quot = Puiseux::zero();
        while let Some((er, cr)) = rem.lowest() {
            let qe = er - eb;
            if qe > limit {
                return None;
            }
            let qc = cr / cb;
            rem = &rem - &other.scale_shift(&qe, &qc);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }
}

impl<'a> Add<&'a Puiseux> for &'a Puiseux {
    type Output = Puiseux;
    fn add(self, rhs: &Puiseux) -> Puiseux {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Puiseux> for &'a Puiseux {
    type Output = Puiseux;
    fn sub(self, rhs: &Puiseux) -> Puiseux {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Puiseux> for &'a Puiseux {
    type Output = Puiseux;
    fn mul(self, rhs: &Puiseux) -> Puiseux {
        let mut out = Puiseux::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Puiseux {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| if e.is_zero() { c.to_string() } else { format!("{c}*t^({e})") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// An element of the coefficient field.
///
/// Arithmetic between a rational and a Puiseux sum embeds the rational as a
/// constant and yields a Puiseux sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rational(BigRational),
    Puiseux(Puiseux),
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        FieldElem::Rational(BigRational::one())
    }

    pub fn int(v: i64) -> Self {
        FieldElem::Rational(BigRational::from_integer(v.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        FieldElem::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rational(r) => r.is_zero(),
            FieldElem::Puiseux(p) => p.is_zero(),
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldElem::Rational(_))
    }

    fn to_puiseux(&self) -> Puiseux {
        match self {
            FieldElem::Rational(r) => Puiseux::constant(r.clone()),
            FieldElem::Puiseux(p) => p.clone(),
        }
    }

    /// Exact division. For rationals this is ordinary division (`None` only
    /// when dividing by zero); for Puiseux sums the quotient must again be a
    /// finite sum.
    pub fn div_exact(&self, other: &FieldElem) -> Option<FieldElem> {
        if other.is_zero() {
            return None;
        }
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => Some(FieldElem::Rational(a / b)),
            _ => self.to_puiseux().div_exact(&other.to_puiseux()).map(FieldElem::Puiseux),
        }
    }

    fn combine(
        &self,
        other: &FieldElem,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        pui: impl Fn(&Puiseux, &Puiseux) -> Puiseux,
    ) -> FieldElem {
        match (self, other) {
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(rat(a, b)),
            _ => FieldElem::Puiseux(pui(&self.to_puiseux(), &other.to_puiseux())),
        }
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        self.combine(rhs, |a, b| a + b, |a, b| a + b)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self.combine(rhs, |a, b| a - b, |a, b| a - b)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        self.combine(rhs, |a, b| a * b, |a, b| a * b)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        &FieldElem::zero() - self
    }
}

impl From<BigRational> for FieldElem {
    fn from(r: BigRational) -> Self {
        FieldElem::Rational(r)
    }
}

impl From<Puiseux> for FieldElem {
    fn from(p: Puiseux) -> Self {
        FieldElem::Puiseux(p)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rational(r) => write!(f, "{r}"),
            FieldElem::Puiseux(p) => write!(f, "{p}"),
        }
    }
}
