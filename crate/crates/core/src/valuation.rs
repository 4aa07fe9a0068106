//! Valuations `ν: K → 𝕋` and coefficient-wise tropicalization.
//!
//! Three valuations are provided: the trivial one, the `p`-adic valuation on
//! ℚ and the order valuation on Puiseux sums. All satisfy
//!
//! * `ν(a) = ∞` iff `a = 0`,
//! * `ν(ab) = ν(a) ⊙ ν(b)`,
//! * `ν(a + b) ≥ ν(a) ⊕ ν(b)`, with equality when `ν(a) ≠ ν(b)`.
//!
//! ```
//! use tropical::{FieldElem, Valuation, TropScalar};
//!
//! let nu3 = Valuation::padic(3).unwrap();
//! assert_eq!(nu3.valuate(&FieldElem::ratio(5, 6)).unwrap(), TropScalar::from_int(-1));
//! assert_eq!(nu3.valuate(&FieldElem::ratio(27, 7)).unwrap(), TropScalar::from_int(3));
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::monomial::{add_exponents, total_degree, Exponent};
use crate::poly::TropPoly;
use crate::scalar::TropScalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Trivial,
    PAdic(u64),
    PuiseuxOrder,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of `p` in the nonzero integer `n`.
fn multiplicity(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

impl Valuation {
    pub fn padic(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Valuation::PAdic(p))
        } else {
            Err(Error::BadPrime(p.to_string()))
        }
    }

    /// `ν(a)`.
    ///
    /// The `p`-adic valuation only accepts rationals. The Puiseux order
    /// accepts rationals as constant series (order 0).
    pub fn valuate(&self, a: &FieldElem) -> Result<TropScalar> {
        if a.is_zero() {
            return Ok(TropScalar::Infinity);
        }
        match (self, a) {
            (Valuation::Trivial, _) => Ok(TropScalar::one()),
            (Valuation::PAdic(p), FieldElem::Rational(r)) => {
                if !is_prime(*p) {
                    return Err(Error::BadPrime(p.to_string()));
                }
                let p = BigInt::from(*p);
                let v = multiplicity(r.numer(), &p) - multiplicity(r.denom(), &p);
                Ok(TropScalar::from_int(v))
            }
            (Valuation::PAdic(_), FieldElem::Puiseux(_)) => Err(Error::KindMismatch {
                valuation: self.to_string(),
                element: a.to_string(),
            }),
            (Valuation::PuiseuxOrder, FieldElem::Rational(_)) => Ok(TropScalar::one()),
            (Valuation::PuiseuxOrder, FieldElem::Puiseux(s)) => {
                Ok(TropScalar::Finite(s.order().cloned().expect("nonzero series")))
            }
        }
    }

    /// `trop(F) = ⊕ ν(c_α) ⊙ X^α`.
    pub fn tropicalize(&self, f: &ClassicalPoly) -> Result<TropPoly> {
        let mut terms = Vec::with_capacity(f.len());
        for (e, c) in f.terms() {
            terms.push((e.clone(), self.valuate(c)?));
        }
        Ok(TropPoly::from_terms(f.nvars(), terms))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Trivial => f.write_str("trivial"),
            Valuation::PAdic(p) => write!(f, "padic:{p}"),
            Valuation::PuiseuxOrder => f.write_str("puiseux"),
        }
    }
}

impl FromStr for Valuation {
    type Err = Error;

    /// `trivial`, `padic:<p>` or `puiseux`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "trivial" => Ok(Valuation::Trivial),
            "puiseux" => Ok(Valuation::PuiseuxOrder),
            other => match other.strip_prefix("padic:") {
                Some(p) => {
                    let p: u64 = p.parse().map_err(|_| Error::BadPrime(p.to_string()))?;
                    Valuation::padic(p)
                }
                None => Err(Error::Parse(format!("unknown valuation {other:?}"))),
            },
        }
    }
}

pub fn valuate(v: &Valuation, a: &FieldElem) -> Result<TropScalar> {
    v.valuate(a)
}

pub fn tropicalize_poly(v: &Valuation, f: &ClassicalPoly) -> Result<TropPoly> {
    v.tropicalize(f)
}

/// A polynomial over the coefficient field with nonnegative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, FieldElem>,
}

impl ClassicalPoly {
    pub fn zero(nvars: usize) -> Self {
        ClassicalPoly { nvars, terms: BTreeMap::new() }
    }

    /// Sums the given terms. Negative exponents are rejected.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, FieldElem)>,
    {
        let mut p = ClassicalPoly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::LengthMismatch { expected: nvars, got: e.len() });
            }
            if e.iter().any(|&k| k < 0) {
                return Err(Error::Parse(format!("negative exponent {e:?} in a classical polynomial")));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponent, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let new = match self.terms.get(&e) {
            Some(old) => old + &c,
            None => c,
        };
        if new.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, new);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> FieldElem {
        self.terms.get(e).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| total_degree(e));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// `X^m · self`
    pub fn shift(&self, m: &[i64]) -> ClassicalPoly {
        ClassicalPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (add_exponents(e, m), c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &ClassicalPoly) -> ClassicalPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &ClassicalPoly) -> ClassicalPoly {
        let mut out = ClassicalPoly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(add_exponents(a, b), ca * cb);
            }
        }
        out
    }
}

/// Outcome of checking V2 and V3 on one sample pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub nu_a: TropScalar,
    pub nu_b: TropScalar,
    pub nu_sum: TropScalar,
    pub nu_product: TropScalar,
    pub multiplicative: bool,
    pub ultrametric: bool,
    /// `ν(a+b) = min(ν(a), ν(b))` exactly.
    pub sum_attains_min: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub zero_maps_to_infinity: bool,
    pub pairs: Vec<PairCheck>,
    pub first_violation: Option<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks V1 on zero and V2, V3 on each pair. Violations are reported, not
/// raised; errors only come from inputs the valuation cannot evaluate.
pub fn check_valuation_axioms(v: &Valuation, samples: &[(FieldElem, FieldElem)]) -> Result<AxiomReport> {
    let zero_ok = v.valuate(&FieldElem::zero())?.is_infinite();
    let mut first_violation = (!zero_ok).then(|| "V1: nu(0) is finite".to_string());
    let mut pairs = Vec::with_capacity(samples.len());
    for (i, (a, b)) in samples.iter().enumerate() {
        let nu_a = v.valuate(a)?;
        let nu_b = v.valuate(b)?;
        let nu_sum = v.valuate(&(a + b))?;
        let nu_product = v.valuate(&(a * b))?;
        let lower = nu_a.oplus(&nu_b);
        let check = PairCheck {
            multiplicative: nu_product == nu_a.odot(&nu_b),
            ultrametric: nu_sum >= lower,
            sum_attains_min: nu_sum == lower,
            nu_a,
            nu_b,
            nu_sum,
            nu_product,
        };
        if first_violation.is_none() {
            if !check.multiplicative {
                first_violation = Some(format!("V2 fails on pair {i}: ({a}, {b})"));
            } else if !check.ultrametric {
                first_violation = Some(format!("V3 fails on pair {i}: ({a}, {b})"));
            }
        }
        pairs.push(check);
    }
    Ok(AxiomReport { zero_maps_to_infinity: zero_ok, pairs, first_violation })
}

/// `ν(a + b) = min(ν(a), ν(b))` for `ν(a) ≠ ν(b)`.
pub fn check_ultrametric_equality(v: &Valuation, a: &FieldElem, b: &FieldElem) -> Result<bool> {
    let nu_a = v.valuate(a)?;
    let nu_b = v.valuate(b)?;
    if nu_a == nu_b {
        return Err(Error::PreconditionViolated(format!(
            "the two values must differ, both are {nu_a}"
        )));
    }
    Ok(v.valuate(&(a + b))? == nu_a.oplus(&nu_b))
}

/// Convenience constructor for rational field elements from `p/q` strings.
pub fn rational(s: &str) -> Result<FieldElem> {
    crate::scalar::parse_rational(s).map(FieldElem::Rational)
}
