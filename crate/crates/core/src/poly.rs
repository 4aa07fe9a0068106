//! Tropical (Laurent) polynomials, their bend relations and tropical
//! vanishing.
//!
//! A tropical polynomial `f = ⊕ c_α ⊙ X^α` is stored as a map from exponent
//! vectors to finite rational coefficients; a missing key means the
//! coefficient is `∞`. Its value at `x` is `min_α (c_α + ⟨α, x⟩)`, and `x`
//! lies on the tropical hypersurface `V(f)` when that minimum is attained at
//! least twice. The bend relations `f ∼ f_β̂` (delete the `β` term) cut out
//! exactly the same set.
//!
//! ```
//! use tropical::{TropPoly, TropScalar};
//!
//! // X ⊕ Y ⊕ 0
//! let f = TropPoly::from_terms(2, [
//!     (vec![1, 0], TropScalar::from_int(0)),
//!     (vec![0, 1], TropScalar::from_int(0)),
//!     (vec![0, 0], TropScalar::from_int(0)),
//! ]);
//! let origin = [TropScalar::from_int(0), TropScalar::from_int(0)];
//! assert!(f.tropically_vanishes(&origin).unwrap());
//! assert!(f.satisfies_bend_congruence(&origin).unwrap());
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{check_len, Error, Result};
use crate::monomial::{add_exponents, total_degree, Exponent};
use crate::scalar::{count_min, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropPoly {
    nvars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

impl TropPoly {
    /// The empty polynomial (constant `∞`).
    pub fn zero(nvars: usize) -> Self {
        TropPoly { nvars, terms: BTreeMap::new() }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are combined with `⊕`; `∞` coefficients are dropped.
    ///
    /// Panics if an exponent has the wrong length.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, TropScalar)>,
    {
        let mut p = TropPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must equal nvars");
            p.add_term(e, c);
        }
        p
    }

    pub fn monomial(coeff: TropScalar, exponent: Exponent) -> Self {
        let n = exponent.len();
        TropPoly::from_terms(n, [(exponent, coeff)])
    }

    fn add_term(&mut self, e: Exponent, c: TropScalar) {
        if let TropScalar::Finite(c) = c {
            match self.terms.get_mut(&e) {
                Some(old) if *old <= c => {}
                Some(old) => *old = c,
                None => {
                    self.terms.insert(e, c);
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// `Supp(f)`, in the map's (lexicographic) key order.
    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of `X^α`, `∞` when absent.
    pub fn coeff(&self, exponent: &[i64]) -> TropScalar {
        self.terms
            .get(exponent)
            .map(|c| TropScalar::Finite(c.clone()))
            .unwrap_or(TropScalar::Infinity)
    }

    /// Largest total degree in the support; `None` for the empty polynomial.
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

    pub fn oplus(&self, other: &TropPoly) -> TropPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), TropScalar::Finite(c.clone()));
        }
        out
    }

    pub fn odot(&self, other: &TropPoly) -> TropPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = TropPoly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(add_exponents(a, b), TropScalar::Finite(ca + cb));
            }
        }
        out
    }

    /// `f_β̂`: `f` with the `β` term removed (unchanged if `β ∉ Supp(f)`).
    pub fn delete_term(&self, beta: &[i64]) -> TropPoly {
        let mut out = self.clone();
        out.terms.remove(beta);
        out
    }

    /// Values `c_α + ⟨α, x⟩` of every term, in support order.
    pub fn term_values(&self, x: &[TropScalar]) -> Result<Vec<TropScalar>> {
        check_len(self.nvars, x.len())?;
        for (i, xi) in x.iter().enumerate() {
            if xi.is_infinite() && self.terms.keys().any(|e| e[i] < 0) {
                return Err(Error::InfiniteCoordinate(i));
            }
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| term_value(c, e, x))
            .collect())
    }

    /// `f(x) = min_α (c_α + ⟨α, x⟩)`; `∞` for the empty polynomial.
    pub fn evaluate(&self, x: &[TropScalar]) -> Result<TropScalar> {
        let vals = self.term_values(x)?;
        Ok(vals.into_iter().min().unwrap_or(TropScalar::Infinity))
    }

    /// True iff the minimum is attained by at least two distinct exponents,
    /// or the minimum is `∞` (in particular for the empty polynomial).
    pub fn tropically_vanishes(&self, x: &[TropScalar]) -> Result<bool> {
        let vals = self.term_values(x)?;
        let (min, count) = count_min(&vals);
        Ok(min.is_infinite() || count >= 2)
    }

    /// One relation `f ∼ f_β̂` per `β ∈ Supp(f)`.
    pub fn bend_relations(&self) -> BendCongruence {
        BendCongruence {
            pairs: self
                .terms
                .keys()
                .map(|b| (self.clone(), self.delete_term(b)))
                .collect(),
        }
    }

    /// True iff `f(x) = f_β̂(x)` for every `β` in the support.
    pub fn satisfies_bend_congruence(&self, x: &[TropScalar]) -> Result<bool> {
        self.bend_relations().is_solution(x)
    }
}

fn term_value(c: &BigRational, e: &[i64], x: &[TropScalar]) -> TropScalar {
    let mut acc = c.clone();
    for (k, xi) in e.iter().zip(x) {
        if *k == 0 {
            continue;
        }
        match xi {
            TropScalar::Infinity => return TropScalar::Infinity,
            TropScalar::Finite(v) => acc += v * BigRational::from_integer(BigInt::from(*k)),
        }
    }
    TropScalar::Finite(acc)
}

impl fmt::Display for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("inf");
        }
        let names = |i: usize| -> String {
            if self.nvars <= 3 {
                ["X", "Y", "Z"][i].to_string()
            } else {
                format!("X{}", i + 1)
            }
        };
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" ⊕ ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k != 0)
                .map(|(i, k)| if *k == 1 { names(i) } else { format!("{}^{}", names(i), k) })
                .collect();
            match (c.is_zero(), mono.is_empty()) {
                (_, true) => write!(f, "{}", c)?,
                (true, false) => f.write_str(&mono.join("⊙"))?,
                (false, false) => write!(f, "{}⊙{}", c, mono.join("⊙"))?,
            }
        }
        Ok(())
    }
}

/// A finite set of generating relations `f ∼ g`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BendCongruence {
    pub pairs: Vec<(TropPoly, TropPoly)>,
}

impl BendCongruence {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn extend(&mut self, other: BendCongruence) {
        self.pairs.extend(other.pairs);
    }

    /// True iff both sides of every relation agree at `x`.
    pub fn is_solution(&self, x: &[TropScalar]) -> Result<bool> {
        for (f, g) in &self.pairs {
            if f.evaluate(x)? != g.evaluate(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
