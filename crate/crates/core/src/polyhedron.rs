//! Exact feasibility of small rational polyhedra by Fourier–Motzkin
//! elimination.
//!
//! Equalities are removed first by substitution; the remaining inequalities
//! are projected one variable at a time. Back-substitution through the
//! recorded stages produces an explicit rational witness point.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The affine constraint `coeffs · x (≤ | =) rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineConstraint {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

impl AffineConstraint {
    pub fn new(coeffs: Vec<BigRational>, rhs: BigRational) -> Self {
        AffineConstraint { coeffs, rhs }
    }

    pub fn lhs(&self, x: &[BigRational]) -> BigRational {
        self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum()
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// `{x : eqs hold, ineqs hold}` in `dim` variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polyhedron {
    pub dim: usize,
    pub equalities: Vec<AffineConstraint>,
    pub inequalities: Vec<AffineConstraint>,
}

impl Polyhedron {
    pub fn new(dim: usize) -> Self {
        Polyhedron { dim, equalities: Vec::new(), inequalities: Vec::new() }
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.equalities.iter().all(|c| c.lhs(x) == c.rhs)
            && self.inequalities.iter().all(|c| c.lhs(x) <= c.rhs)
    }

    pub fn is_empty(&self) -> bool {
        self.feasible_point().is_none()
    }

    /// Some rational point of the polyhedron, or `None` if it is empty.
    pub fn feasible_point(&self) -> Option<Vec<BigRational>> {
        let p = solve(self.dim, self.equalities.clone(), self.inequalities.clone())?;
        debug_assert!(self.contains(&p));
        Some(p)
    }
}

fn solve(
    dim: usize,
    mut eqs: Vec<AffineConstraint>,
    ineqs: Vec<AffineConstraint>,
) -> Option<Vec<BigRational>> {
    // drop 0 = b rows, failing on b != 0
    let mut kept = Vec::with_capacity(eqs.len());
    for e in eqs.drain(..) {
        if e.is_trivial() {
            if !e.rhs.is_zero() {
                return None;
            }
        } else {
            kept.push(e);
        }
    }
    if let Some(pivot_row) = kept.pop() {
        let j = pivot_row.coeffs.iter().position(|a| !a.is_zero()).unwrap();
        let subst = |c: &AffineConstraint| substitute(c, &pivot_row, j);
        let eqs: Vec<_> = kept.iter().map(subst).collect();
        let ineqs: Vec<_> = ineqs.iter().map(subst).collect();
        let mut x = solve(dim, eqs, ineqs)?;
        x[j] = BigRational::zero();
        let rest = pivot_row.lhs(&x);
        x[j] = (&pivot_row.rhs - rest) / &pivot_row.coeffs[j];
        return Some(x);
    }
    fourier_motzkin(dim, normalize(ineqs)?)
}

/// Eliminates variable `j` from `c` using the equality `pivot`.
fn substitute(c: &AffineConstraint, pivot: &AffineConstraint, j: usize) -> AffineConstraint {
    if c.coeffs[j].is_zero() {
        return c.clone();
    }
    let factor = &c.coeffs[j] / &pivot.coeffs[j];
    let coeffs = c
        .coeffs
        .iter()
        .zip(&pivot.coeffs)
        .map(|(a, p)| a - &factor * p)
        .collect();
    AffineConstraint::new(coeffs, &c.rhs - &factor * &pivot.rhs)
}

/// Scales each inequality so its first nonzero coefficient has absolute
/// value one and keeps the tightest right-hand side per direction. Returns
/// `None` if a constant inequality `0 ≤ b` with `b < 0` is present.
fn normalize(ineqs: Vec<AffineConstraint>) -> Option<Vec<AffineConstraint>> {
    let mut best: BTreeMap<Vec<BigRational>, BigRational> = BTreeMap::new();
    for c in ineqs {
        match c.coeffs.iter().find(|a| !a.is_zero()) {
            None => {
                if c.rhs.is_negative() {
                    return None;
                }
            }
            Some(lead) => {
                let scale = lead.abs();
                let coeffs: Vec<_> = c.coeffs.iter().map(|a| a / &scale).collect();
                let rhs = &c.rhs / &scale;
                best.entry(coeffs)
                    .and_modify(|b| {
                        if rhs < *b {
                            *b = rhs.clone()
                        }
                    })
                    .or_insert(rhs);
            }
        }
    }
    Some(best.into_iter().map(|(c, r)| AffineConstraint::new(c, r)).collect())
}

fn fourier_motzkin(dim: usize, ineqs: Vec<AffineConstraint>) -> Option<Vec<BigRational>> {
    let j = match (0..dim).find(|&j| ineqs.iter().any(|c| !c.coeffs[j].is_zero())) {
        Some(j) => j,
        None => return Some(vec![BigRational::zero(); dim]),
    };
    let (mut upper, mut lower, mut rest) = (Vec::new(), Vec::new(), Vec::new());
    for c in ineqs {
        if c.coeffs[j].is_positive() {
            upper.push(c);
        } else if c.coeffs[j].is_negative() {
            lower.push(c);
        } else {
            rest.push(c);
        }
    }
    let mut projected = rest;
    for u in &upper {
        for l in &lower {
            let su = &u.coeffs[j];
            let sl = -&l.coeffs[j];
            let coeffs = u
                .coeffs
                .iter()
                .zip(&l.coeffs)
                .map(|(a, b)| a / su + b / &sl)
                .collect();
            projected.push(AffineConstraint::new(coeffs, &u.rhs / su + &l.rhs / &sl));
        }
    }
    let mut x = fourier_motzkin(dim, normalize(projected)?)?;

    // every constraint's j-coefficient is zero in x's derivation; pick x_j
    x[j] = BigRational::zero();
    let bound = |c: &AffineConstraint| (&c.rhs - c.lhs(&x)) / &c.coeffs[j];
    let hi = upper.iter().map(bound).min();
    let lo = lower.iter().map(bound).max();
    x[j] = match (lo, hi) {
        (Some(lo), Some(hi)) => {
            if lo > hi {
                return None;
            }
            (lo + hi) / BigRational::from_integer(2.into())
        }
        (Some(lo), None) => lo + BigRational::one(),
        (None, Some(hi)) => hi - BigRational::one(),
        (None, None) => BigRational::zero(),
    };
    Some(x)
}
