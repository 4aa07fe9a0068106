//! Degree truncations of polynomial ideals and their tropicalizations.
//!
//! For an ideal `J = ⟨g_1, …, g_k⟩` the truncation `J_{≤d}` is spanned by
//! the multiples `m · g_i` of total degree at most `d` (exactly `d` in
//! homogeneous mode). Writing a basis as the rows of a matrix whose columns
//! are the monomials, the valuated matroid of its maximal minors is the
//! tropical linear space `trop(J)_{≤d}`.
//!
//! ```
//! use tropical::ideal::IdealTruncation;
//! use tropical::{ClassicalPoly, FieldElem, TropPoly, TropScalar, Valuation};
//!
//! // J = ⟨x + 1⟩ over ℚ with the trivial valuation, truncated at degree 2
//! let g = ClassicalPoly::from_terms(1, [(vec![1], FieldElem::int(1)), (vec![0], FieldElem::int(1))]).unwrap();
//! let t = IdealTruncation::new(vec![g], 1, Valuation::Trivial, 2, false).unwrap();
//!
//! let zero = TropScalar::from_int(0);
//! let f = TropPoly::from_terms(1, [(vec![2], zero.clone()), (vec![0], zero)]);
//! assert!(t.member(&f).unwrap());
//! ```

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{check_len, Error, Result};
use crate::field::FieldElem;
use crate::linalg::{combine, span_member, TropVector};
use crate::matroid::ValuatedMatroid;
use crate::monomial::{add_exponents, graded_colex, monomials_of_degree, monomials_up_to_degree, Exponent};
use crate::poly::TropPoly;
use crate::scalar::TropScalar;
use crate::valuation::{ClassicalPoly, Valuation};

pub const MAX_IDEAL_VARS: usize = 3;
pub const MAX_IDEAL_DEGREE: u32 = 6;

/// Seed used by [`check_elimination_axiom`] when none is given.
pub const DEFAULT_SEED: u64 = 0;

/// A basis of `J_{≤d}` (or `J_d`) as rows over the monomial columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayBasis {
    pub monomials: Vec<Exponent>,
    pub rows: Vec<Vec<FieldElem>>,
}

impl MacaulayBasis {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// The monomial columns: degree `≤ d`, or exactly `d` when homogeneous.
pub fn monomial_columns(nvars: usize, d: u32, homogeneous: bool) -> Vec<Exponent> {
    if homogeneous {
        monomials_of_degree(nvars, d)
    } else {
        monomials_up_to_degree(nvars, d)
    }
}

fn check_generators(generators: &[ClassicalPoly], nvars: usize, d: u32, homogeneous: bool) -> Result<()> {
    if nvars > MAX_IDEAL_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    if d > MAX_IDEAL_DEGREE {
        return Err(Error::TooLarge(format!("degree bound {d} exceeds {MAX_IDEAL_DEGREE}")));
    }
    for (i, g) in generators.iter().enumerate() {
        check_len(nvars, g.nvars())?;
        if g.is_zero() {
            return Err(Error::PreconditionViolated(format!("generator {} is zero", i + 1)));
        }
        if homogeneous && !g.is_homogeneous() {
            return Err(Error::PreconditionViolated(format!("generator {} is not homogeneous", i + 1)));
        }
    }
    Ok(())
}

/// Echelon rows kept for incremental independence tests, fraction-free.
struct Echelon {
    rows: Vec<(usize, Vec<FieldElem>)>,
}

impl Echelon {
    /// Reduces `v` against the stored rows; stores it and returns true if
    /// something nonzero is left.
    fn insert(&mut self, mut v: Vec<FieldElem>) -> bool {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let a = row[*pivot].clone();
            let b = v[*pivot].clone();
            v = v.iter().zip(row).map(|(x, r)| &(x * &a) - &(r * &b)).collect();
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// A basis of the truncation made of original multiples `m · g`.
///
/// Candidates are taken generator by generator, multipliers in graded colex
/// order, and kept when independent of those already kept. For `⟨x + 1⟩`
/// and `d = 2` this gives the rows `x + 1` and `x² + x`.
pub fn macaulay_basis(generators: &[ClassicalPoly], nvars: usize, d: u32, homogeneous: bool) -> Result<MacaulayBasis> {
    check_generators(generators, nvars, d, homogeneous)?;
    let monomials = monomial_columns(nvars, d, homogeneous);
    let column = |e: &Exponent| monomials.binary_search_by(|m| graded_colex(m, e));
    let mut echelon = Echelon { rows: Vec::new() };
    let mut rows = Vec::new();
    for g in generators {
        let gdeg = g.degree().expect("nonzero generator");
        if gdeg > d as i64 {
            continue;
        }
        let multipliers = if homogeneous {
            monomials_of_degree(nvars, (d as i64 - gdeg) as u32)
        } else {
            monomials_up_to_degree(nvars, (d as i64 - gdeg) as u32)
        };
        for m in multipliers {
            let mut row = vec![FieldElem::zero(); monomials.len()];
            for (e, c) in g.terms() {
                let idx = column(&add_exponents(e, &m)).expect("multiple stays inside the column range");
                row[idx] = c.clone();
            }
            if echelon.insert(row.clone()) {
                rows.push(row);
            }
        }
    }
    Ok(MacaulayBasis { monomials, rows })
}

/// `trop(J)_{≤d}` as a valuated matroid on the monomial columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealTruncation {
    pub generators: Vec<ClassicalPoly>,
    pub nvars: usize,
    pub valuation: Valuation,
    pub degree: u32,
    pub homogeneous: bool,
    pub monomials: Vec<Exponent>,
    pub matroid: ValuatedMatroid,
}

impl IdealTruncation {
    pub fn new(
        generators: Vec<ClassicalPoly>,
        nvars: usize,
        valuation: Valuation,
        degree: u32,
        homogeneous: bool,
    ) -> Result<Self> {
        let basis = macaulay_basis(&generators, nvars, degree, homogeneous)?;
        let matroid = ValuatedMatroid::from_matrix_with_width(&valuation, &basis.rows, basis.monomials.len())?;
        Ok(IdealTruncation { generators, nvars, valuation, degree, homogeneous, monomials: basis.monomials, matroid })
    }

    pub fn rank(&self) -> usize {
        self.matroid.rank()
    }

    /// The coefficient vector of `f` over the monomial columns.
    pub fn coefficient_vector(&self, f: &TropPoly) -> Result<TropVector> {
        coefficient_vector(f, self.nvars, self.degree, &self.monomials)
    }

    /// Is `f` in `trop(J)_{≤d}`?
    pub fn member(&self, f: &TropPoly) -> Result<bool> {
        let v = self.coefficient_vector(f)?;
        self.matroid.linear_space_member(&v)
    }

    /// Samples the elimination axiom on the truncation's linear space.
    pub fn check_elimination_axiom(&self, trials: usize, seed: u64) -> EliminationReport {
        check_elimination_axiom(&self.matroid, trials, seed)
    }
}

/// Same as [`IdealTruncation::new`].
pub fn tropicalize_truncation(
    generators: Vec<ClassicalPoly>,
    nvars: usize,
    valuation: Valuation,
    degree: u32,
    homogeneous: bool,
) -> Result<IdealTruncation> {
    IdealTruncation::new(generators, nvars, valuation, degree, homogeneous)
}

/// Same as [`IdealTruncation::member`].
pub fn truncation_member(t: &IdealTruncation, f: &TropPoly) -> Result<bool> {
    t.member(f)
}

fn coefficient_vector(f: &TropPoly, nvars: usize, d: u32, monomials: &[Exponent]) -> Result<TropVector> {
    check_len(nvars, f.nvars())?;
    if let Some(deg) = f.degree() {
        if deg > d as i64 {
            return Err(Error::DegreeTooHigh { max: d, got: deg });
        }
    }
    let mut v = TropVector::infinite(monomials.len());
    for (e, c) in f.terms() {
        let idx = monomials
            .iter()
            .position(|m| m == e)
            .ok_or_else(|| Error::PreconditionViolated(format!("monomial {e:?} is not a column of the truncation")))?;
        v.0[idx] = TropScalar::Finite(c.clone());
    }
    Ok(v)
}

/// Is `f` a combination `⊕ q_i ⊙ g_i` with every product of degree `≤ d`?
///
/// The vectors `m ⊙ g_i` span exactly these combinations, so membership is
/// decided by residuation.
pub fn naive_ideal_member(generators: &[TropPoly], f: &TropPoly, d: u32) -> Result<bool> {
    let nvars = f.nvars();
    let monomials = monomials_up_to_degree(nvars, d);
    let v = coefficient_vector(f, nvars, d, &monomials)?;
    let mut spanning = Vec::new();
    for g in generators {
        check_len(nvars, g.nvars())?;
        if g.support().flatten().any(|&k| k < 0) {
            return Err(Error::PreconditionViolated("generator has a negative exponent".into()));
        }
        let Some(gdeg) = g.degree() else { continue };
        if gdeg > d as i64 {
            continue;
        }
        for m in monomials_up_to_degree(nvars, (d as i64 - gdeg) as u32) {
            let shifted = TropPoly::from_terms(
                nvars,
                g.terms().map(|(e, c)| (add_exponents(e, &m), TropScalar::Finite(c.clone()))),
            );
            spanning.push(coefficient_vector(&shifted, nvars, d, &monomials)?);
        }
    }
    Ok(span_member(&v, &spanning)?.is_some())
}

/// One row of a Hilbert function table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertValue {
    pub degree: u32,
    /// Rank of the tropicalized truncation.
    pub rank: usize,
    /// Number of monomial columns minus the rank.
    pub quotient: usize,
}

/// Ranks of `trop(J)` degree by degree, `0 ≤ d ≤ dmax`.
///
/// In homogeneous mode the columns are the `C(n+d−1, d)` monomials of
/// degree exactly `d`; otherwise all monomials of degree `≤ d`.
pub fn hilbert_function(
    generators: &[ClassicalPoly],
    nvars: usize,
    valuation: &Valuation,
    dmax: u32,
    homogeneous: bool,
) -> Result<Vec<HilbertValue>> {
    (0..=dmax)
        .map(|d| {
            let t = IdealTruncation::new(generators.to_vec(), nvars, valuation.clone(), d, homogeneous)?;
            Ok(HilbertValue { degree: d, rank: t.rank(), quotient: t.monomials.len() - t.rank() })
        })
        .collect()
}

/// Outcome of sampling the elimination axiom.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EliminationReport {
    pub trials: usize,
    pub successes: usize,
    /// Trials where no pair with a shared finite entry could be drawn.
    pub vacuous: usize,
    pub failures: Vec<String>,
}

impl EliminationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for EliminationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} trials: {} succeeded, {} vacuous, {} failed",
            self.trials,
            self.successes,
            self.vacuous,
            self.failures.len()
        )
    }
}

fn random_combination(rng: &mut ChaCha8Rng, cocircuits: &[TropVector], n: usize) -> TropVector {
    let k = rng.gen_range(1..=cocircuits.len().min(3));
    let chosen: Vec<TropVector> = cocircuits.choose_multiple(rng, k).cloned().collect();
    let coeffs: Vec<TropScalar> = (0..k).map(|_| TropScalar::from_int(rng.gen_range(-4..=4))).collect();
    combine(&coeffs, &chosen, n).expect("cocircuits share the ground set")
}

/// Checks one output of `eliminate` against the axiom directly.
fn elimination_holds(m: &ValuatedMatroid, f: &TropVector, g: &TropVector, beta: usize, h: &TropVector) -> bool {
    if h[beta].is_finite() || !m.linear_space_member(h).unwrap_or(false) {
        return false;
    }
    (0..f.len()).filter(|&a| a != beta).all(|a| {
        let floor = f[a].oplus(&g[a]);
        h[a] >= floor && (f[a] == g[a] || h[a] == floor)
    })
}

/// Draws pairs `f, g` of cocircuit combinations with `f_β = g_β` finite and
/// runs [`ValuatedMatroid::eliminate`] on them.
///
/// When the Plücker vector is not a valuated matroid the drawn vectors may
/// fall outside `L(p)`; such trials are reported as failures.
pub fn check_elimination_axiom(m: &ValuatedMatroid, trials: usize, seed: u64) -> EliminationReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = m.ground_size();
    let cocircuits: Vec<TropVector> =
        m.cocircuits().into_iter().map(|(_, c)| c).filter(|c| !c.is_all_infinite()).collect();
    let mut report = EliminationReport { trials, ..Default::default() };
    if cocircuits.is_empty() {
        report.vacuous = trials;
        return report;
    }
    'trial: for t in 0..trials {
        for _attempt in 0..20 {
            let f = random_combination(&mut rng, &cocircuits, n);
            let g = random_combination(&mut rng, &cocircuits, n);
            let shared: Vec<usize> = (0..n).filter(|&i| f[i].is_finite() && g[i].is_finite()).collect();
            let Some(&beta) = shared.choose(&mut rng) else { continue };
            let shift = f[beta].oslash(&g[beta]).expect("finite");
            let g = g.scale(&shift);
            for (name, x) in [("f", &f), ("g", &g)] {
                if !m.linear_space_member(x).unwrap_or(false) {
                    report.failures.push(format!("trial {t}: sampled {name} = {x} is not in L(p)"));
                    continue 'trial;
                }
            }
            match m.eliminate(&f, &g, beta) {
                Ok(h) if elimination_holds(m, &f, &g, beta, &h) => report.successes += 1,
                Ok(h) => report.failures.push(format!("trial {t}: h = {h} violates the axiom")),
                Err(e) => report.failures.push(format!("trial {t}: f = {f}, g = {g}, β = {}: {e}", beta + 1)),
            }
            continue 'trial;
        }
        report.vacuous += 1;
    }
    report
}
