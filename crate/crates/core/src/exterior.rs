//! The tropical exterior algebra `⋀_trop 𝕋ⁿ`.
//!
//! Elements are `⊕ a_S ⊙ e_S` over subsets `S ⊆ [n]`. Products follow
//! `e_S ∧ e_T = e_{S∪T}` when `S ∩ T = ∅` and `∞` otherwise; the signs of the
//! classical exterior algebra have valuation `0` and disappear.
//!
//! ```
//! use tropical::exterior::ExtElement;
//! use tropical::TropScalar;
//!
//! let zero = TropScalar::from_int(0);
//! let x = ExtElement::basis(2, &[0], zero.clone()).oplus(&ExtElement::basis(2, &[1], zero.clone())).unwrap();
//! // (x₁ ⊕ x₂) ∧ (x₁ ⊕ x₂) = 0 ⊙ e₁₂
//! assert_eq!(x.wedge(&x).unwrap(), ExtElement::basis(2, &[0, 1], zero));
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::{check_len, Error, Result};
use crate::linalg::{perp, TropVector};
use crate::matroid::ValuatedMatroid;
use crate::poly::{BendCongruence, TropPoly};
use crate::scalar::TropScalar;
use crate::subset::{k_subsets, Subset, MAX_GROUND};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtElement {
    n: usize,
    coeffs: BTreeMap<Subset, BigRational>,
}

impl ExtElement {
    /// The zero element (every coefficient `∞`).
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set too large");
        ExtElement { n, coeffs: BTreeMap::new() }
    }

    /// `c ⊙ e_S` for the 0-based index set `elems`.
    pub fn basis(n: usize, elems: &[usize], c: TropScalar) -> Self {
        let s = Subset::from_elements(elems.iter().copied());
        ExtElement::from_pairs(n, [(s, c)]).expect("basis element inside [n]")
    }

    /// `⊕ c_S ⊙ e_S`; repeated subsets are combined with `⊕`, `∞` dropped.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, TropScalar)>,
    {
        let mut out = ExtElement::zero(n);
        for (s, c) in pairs {
            if let Some(i) = s.elements().find(|&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: i, size: n });
            }
            out.add_term(s, c);
        }
        Ok(out)
    }

    /// The degree-`d` element whose coefficients are the Plücker values.
    pub fn from_matroid(m: &ValuatedMatroid) -> Self {
        let mut out = ExtElement::zero(m.ground_size());
        for (s, v) in m.entries() {
            out.add_term(s, v.clone());
        }
        out
    }

    fn add_term(&mut self, s: Subset, c: TropScalar) {
        let TropScalar::Finite(c) = c else { return };
        match self.coeffs.get_mut(&s) {
            Some(old) if *old <= c => {}
            Some(old) => *old = c,
            None => {
                self.coeffs.insert(s, c);
            }
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, s: Subset) -> TropScalar {
        self.coeffs.get(&s).cloned().map_or(TropScalar::Infinity, TropScalar::Finite)
    }

    /// Finite coefficients, subsets in increasing bitmask order.
    pub fn terms(&self) -> impl Iterator<Item = (Subset, &BigRational)> {
        self.coeffs.iter().map(|(s, c)| (*s, c))
    }

    /// The common size of the supporting subsets, if there is one.
    pub fn degree(&self) -> Option<usize> {
        let mut sizes = self.coeffs.keys().map(|s| s.len());
        let first = sizes.next()?;
        sizes.all(|k| k == first).then_some(first)
    }

    fn homogeneous_degree(&self) -> Result<usize> {
        self.degree()
            .ok_or_else(|| Error::PreconditionViolated("element is zero or not homogeneous".into()))
    }

    /// The dense coefficient vector in colex order, for degree `d`.
    pub fn plucker_vector(&self, d: usize) -> Vec<TropScalar> {
        k_subsets(self.n, d).map(|s| self.coeff(s)).collect()
    }

    /// Reads a homogeneous element as a Plücker vector without checking the
    /// exchange axiom.
    pub fn to_matroid(&self) -> Result<ValuatedMatroid> {
        let d = self.homogeneous_degree()?;
        ValuatedMatroid::from_plucker_unchecked(self.n, d, self.plucker_vector(d))
    }

    fn check_same(&self, other: &ExtElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("{} vs {} generators", self.n, other.n)));
        }
        Ok(())
    }

    pub fn oplus(&self, other: &ExtElement) -> Result<ExtElement> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, TropScalar::Finite(c.clone()));
        }
        Ok(out)
    }

    /// `λ ⊙ self`.
    pub fn scale(&self, lambda: &TropScalar) -> ExtElement {
        match lambda {
            TropScalar::Infinity => ExtElement::zero(self.n),
            TropScalar::Finite(l) => ExtElement {
                n: self.n,
                coeffs: self.coeffs.iter().map(|(s, c)| (*s, c + l)).collect(),
            },
        }
    }

    /// `e_S ∧ e_T = e_{S∪T}` for disjoint `S, T`, `∞` otherwise; extended
    /// bilinearly, so each coefficient is a min over decompositions.
    pub fn wedge(&self, other: &ExtElement) -> Result<ExtElement> {
        self.check_same(other)?;
        let mut out = ExtElement::zero(self.n);
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                if s.is_disjoint(t) {
                    out.add_term(s.union(t), TropScalar::Finite(a + b));
                }
            }
        }
        Ok(out)
    }

    /// The coefficient-wise map `e_S ↦ e_{[n]∖S}`.
    pub fn hodge_dual(&self) -> ExtElement {
        ExtElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(s, c)| (s.complement(self.n), c.clone())).collect(),
        }
    }
}

/// `e_i ∧ p` for a homogeneous `p`.
pub fn wedge_with_p(i: usize, p: &ExtElement) -> Result<ExtElement> {
    if i >= p.n {
        return Err(Error::IndexOutOfRange { index: i, size: p.n });
    }
    if !p.is_zero() {
        p.homogeneous_degree()?;
    }
    ExtElement::basis(p.n, &[i], TropScalar::one()).wedge(p)
}

/// For each `(d+1)`-subset `A`, the linear form `⊕_{i∈A} p_{A∖i} ⊙ x_i`.
///
/// Entry `i` of the form is read off as the `e_A` coefficient of `e_i ∧ p`.
pub fn circuits_from_wedge(p: &ExtElement) -> Result<BTreeMap<Subset, TropVector>> {
    let d = p.homogeneous_degree()?;
    let images: Vec<ExtElement> = (0..p.n).map(|i| wedge_with_p(i, p)).collect::<Result<_>>()?;
    Ok(k_subsets(p.n, d + 1)
        .map(|a| (a, TropVector(images.iter().map(|img| img.coeff(a)).collect())))
        .collect())
}

/// Does every circuit form of `p` vanish tropically at `x`?
pub fn vanishing_locus_member(p: &ExtElement, x: &TropVector) -> Result<bool> {
    check_len(p.n, x.len())?;
    for form in circuits_from_wedge(p)?.values() {
        if !perp(form, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A linear form `⊕ c_i ⊙ x_i` as a tropical polynomial in `n` variables.
pub fn linear_form(c: &TropVector) -> TropPoly {
    let n = c.len();
    TropPoly::from_terms(
        n,
        c.iter().enumerate().map(|(i, ci)| {
            let mut e = vec![0; n];
            e[i] = 1;
            (e, ci.clone())
        }),
    )
}

/// The bend relations of every circuit form of `p`, together.
pub fn qp_congruence(p: &ExtElement) -> Result<BendCongruence> {
    let mut out = BendCongruence { pairs: Vec::new() };
    for form in circuits_from_wedge(p)?.values() {
        if !form.is_all_infinite() {
            out.extend(linear_form(form).bend_relations());
        }
    }
    Ok(out)
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("inf");
        }
        let parts: Vec<String> = self.terms().map(|(s, c)| format!("{c}⊙e{s}")).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}
