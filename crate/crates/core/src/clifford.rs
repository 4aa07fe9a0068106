//! Non-commutative desk cases: words, tropical matrices, and the tropical
//! Clifford algebras `C_n^trop`.
//!
//! `C_n^trop` has a basis `e_S` for `S ⊆ [n]` with `e_S ⊙ e_T = e_{S △ T}`.
//! For `n = 2` this is `𝕋[x, y]` modulo `x² ∼ 0, y² ∼ 0`; for other `n` the
//! symmetric-difference rule is taken as the definition, being the one
//! normal form compatible with `C_m ⊗ C_n ≅ C_{m+n}`.
//!
//! ```
//! use tropical::clifford::{c2_structure_check, tensor_iso_check};
//!
//! assert!(c2_structure_check().passed());
//! assert_eq!(tensor_iso_check(1, 1).unwrap().products_checked, 16);
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::TropMatrix;
use crate::scalar::TropScalar;
use crate::subset::Subset;

pub const MAX_TENSOR_GENERATORS: usize = 8;
pub const MAX_MATRIX_SIZE: usize = 4;

/// A word in the free monoid on `alphabet` letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub alphabet: usize,
    pub letters: Vec<usize>,
}

impl Word {
    pub fn empty(alphabet: usize) -> Self {
        Word { alphabet, letters: Vec::new() }
    }

    pub fn new(alphabet: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&l) = letters.iter().find(|&&l| l >= alphabet) {
            return Err(Error::IndexOutOfRange { index: l, size: alphabet });
        }
        Ok(Word { alphabet, letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

pub fn word_concat(u: &Word, v: &Word) -> Result<Word> {
    if u.alphabet != v.alphabet {
        return Err(Error::AlphabetMismatch(u.alphabet, v.alphabet));
    }
    Ok(Word { alphabet: u.alphabet, letters: u.letters.iter().chain(&v.letters).copied().collect() })
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        for l in &self.letters {
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

/// An element `⊕ c_S ⊙ e_S` of `C_n^trop`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliffordElem {
    n: usize,
    coeffs: BTreeMap<Subset, BigRational>,
}

impl CliffordElem {
    pub fn zero(n: usize) -> Self {
        CliffordElem { n, coeffs: BTreeMap::new() }
    }

    /// `e_∅` with coefficient `0`.
    pub fn identity(n: usize) -> Self {
        CliffordElem::basis(n, Subset::empty(), TropScalar::one())
    }

    pub fn basis(n: usize, s: Subset, c: TropScalar) -> Self {
        let mut out = CliffordElem::zero(n);
        out.add_term(s, c);
        out
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, TropScalar)>,
    {
        let mut out = CliffordElem::zero(n);
        for (s, c) in pairs {
            if let Some(i) = s.elements().find(|&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: i, size: n });
            }
            out.add_term(s, c);
        }
        Ok(out)
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

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, s: Subset) -> TropScalar {
        self.coeffs.get(&s).cloned().map_or(TropScalar::Infinity, TropScalar::Finite)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Subset, &BigRational)> {
        self.coeffs.iter().map(|(s, c)| (*s, c))
    }

    pub fn oplus(&self, other: &CliffordElem) -> Result<CliffordElem> {
        check_same(self.n, other.n)?;
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s, TropScalar::Finite(c.clone()));
        }
        Ok(out)
    }

    /// `λ ⊙ self`.
    pub fn scale(&self, lambda: &TropScalar) -> CliffordElem {
        let mut out = CliffordElem::zero(self.n);
        for (s, c) in self.terms() {
            out.add_term(s, TropScalar::Finite(c.clone()).odot(lambda));
        }
        out
    }
}

fn check_same(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch(format!("{a} vs {b} generators")));
    }
    Ok(())
}

/// `e_S ⊙ e_T = e_{S △ T}`, extended bilinearly.
pub fn clifford_mul(a: &CliffordElem, b: &CliffordElem) -> Result<CliffordElem> {
    check_same(a.n, b.n)?;
    let mut out = CliffordElem::zero(a.n);
    for (s, x) in a.terms() {
        for (t, y) in b.terms() {
            out.add_term(s.symmetric_difference(t), TropScalar::Finite(x + y));
        }
    }
    Ok(out)
}

impl fmt::Display for CliffordElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("inf");
        }
        let parts: Vec<String> = self.terms().map(|(s, c)| format!("{c}⊙e{s}")).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Result of comparing the structure constants of `C_m ⊗ C_n` and `C_{m+n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorIsoReport {
    pub holds: bool,
    pub products_checked: usize,
}

fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u64 << n).map(Subset)
}

/// Checks `C_m^trop ⊗ C_n^trop ≅ C_{m+n}^trop` under
/// `e_S ⊗ e_T ↦ e_{S ⊔ (T + m)}` on every pair of basis elements.
pub fn tensor_iso_check(m: usize, n: usize) -> Result<TensorIsoReport> {
    if m + n > MAX_TENSOR_GENERATORS {
        return Err(Error::TooLarge(format!("m + n = {} exceeds {MAX_TENSOR_GENERATORS}", m + n)));
    }
    let one = TropScalar::one;
    let embed = |s: Subset, t: Subset| CliffordElem::basis(m + n, Subset(s.0 | t.0 << m), one());
    let pairs: Vec<(Subset, Subset)> = all_subsets(m).flat_map(|s| all_subsets(n).map(move |t| (s, t))).collect();
    let mut checked = 0;
    let mut holds = true;
    for &(s1, t1) in &pairs {
        for &(s2, t2) in &pairs {
            // product in the tensor algebra, factor by factor
            let left = clifford_mul(&CliffordElem::basis(m, s1, one()), &CliffordElem::basis(m, s2, one()))?;
            let right = clifford_mul(&CliffordElem::basis(n, t1, one()), &CliffordElem::basis(n, t2, one()))?;
            let mut image = CliffordElem::zero(m + n);
            for (s, a) in left.terms() {
                for (t, b) in right.terms() {
                    image = image.oplus(&embed(s, t).scale(&TropScalar::Finite(a + b)))?;
                }
            }
            let direct = clifford_mul(&embed(s1, t1), &embed(s2, t2))?;
            holds &= image == direct;
            checked += 1;
        }
    }
    Ok(TensorIsoReport { holds, products_checked: checked })
}

/// Checks that the matrix units `E_ij` of `Mat_n(𝕋)` satisfy
/// `E_ij ⊙ E_kl = E_il` if `j = k` and all-`∞` otherwise, and that every
/// matrix is the combination `⊕ a_ij ⊙ E_ij` of its entries.
pub fn matrix_presentation_check(n: usize) -> Result<bool> {
    if n > MAX_MATRIX_SIZE {
        return Err(Error::TooLarge(format!("matrix size {n} exceeds {MAX_MATRIX_SIZE}")));
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let product = TropMatrix::unit(n, i, j).matmul(&TropMatrix::unit(n, k, l))?;
                    let expected = if j == k { TropMatrix::unit(n, i, l) } else { TropMatrix::infinite(n, n) };
                    if product != expected {
                        return Ok(false);
                    }
                }
            }
        }
    }
    // a matrix mixing finite and infinite entries
    let mut target = TropMatrix::infinite(n, n);
    for i in 0..n {
        for j in 0..n {
            if (i + 2 * j) % 3 != 0 {
                target.set(i, j, TropScalar::from_ratio(i as i64 * 7 - j as i64 * 3, 2));
            }
        }
    }
    let mut acc = TropMatrix::infinite(n, n);
    for i in 0..n {
        for j in 0..n {
            acc = acc.oplus(&TropMatrix::unit(n, i, j).scale(target.get(i, j)))?;
        }
    }
    Ok(acc == target)
}

/// Structure of `C_2^trop` against `Mat_2(𝕋)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Report {
    /// All 16 basis products commute.
    pub commutative: bool,
    /// `E_12 ⊙ E_21` and `E_21 ⊙ E_12` differ.
    pub matrix_witness: bool,
    /// The table agrees with `𝕋[x, y] / (x² ∼ 0, y² ∼ 0)`.
    pub normal_form_agrees: bool,
}

impl C2Report {
    pub fn passed(&self) -> bool {
        self.commutative && self.matrix_witness && self.normal_form_agrees
    }
}

/// Product of `x^a y^b` and `x^c y^d` in `𝕋[x, y] / (x² ∼ 0, y² ∼ 0)`,
/// reduced so both exponents are below 2.
fn quotient_monomial_product(a: [u32; 2], b: [u32; 2]) -> [u32; 2] {
    [(a[0] + b[0]) % 2, (a[1] + b[1]) % 2]
}

pub fn c2_structure_check() -> C2Report {
    let basis: Vec<Subset> = all_subsets(2).collect();
    let e = |s: Subset| CliffordElem::basis(2, s, TropScalar::one());
    let mut commutative = true;
    let mut normal_form_agrees = true;
    for &s in &basis {
        for &t in &basis {
            let st = clifford_mul(&e(s), &e(t)).expect("same n");
            let ts = clifford_mul(&e(t), &e(s)).expect("same n");
            commutative &= st == ts;
            let exps = |u: Subset| [u.contains(0) as u32, u.contains(1) as u32];
            let [a, b] = quotient_monomial_product(exps(s), exps(t));
            let expected = Subset::from_elements((a == 1).then_some(0).into_iter().chain((b == 1).then_some(1)));
            normal_form_agrees &= st == e(expected);
        }
    }
    let e12 = TropMatrix::unit(2, 0, 1);
    let e21 = TropMatrix::unit(2, 1, 0);
    let matrix_witness = e12.matmul(&e21).expect("square") != e21.matmul(&e12).expect("square");
    C2Report { commutative, matrix_witness, normal_form_agrees }
}

/// The full multiplication table of basis elements, rows and columns in
/// increasing bitmask order.
pub fn multiplication_table(n: usize) -> Result<Vec<(Subset, Subset, Subset)>> {
    if n > MAX_TENSOR_GENERATORS {
        return Err(Error::TooLarge(format!("{n} generators exceeds {MAX_TENSOR_GENERATORS}")));
    }
    Ok(all_subsets(n)
        .flat_map(|s| all_subsets(n).map(move |t| (s, t, s.symmetric_difference(t))))
        .collect())
}
