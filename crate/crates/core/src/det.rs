//! Exact determinants and maximal minors over the coefficient field.
//!
//! [`bareiss_det`] is fraction-free: every division it performs is exact,
//! so it works over finite Puiseux sums, which are only a ring.
//! [`maximal_minors`] computes all `d × d` minors of a `d × n` matrix. For
//! rational input it row-reduces once to `[I | A]` on a pivot basis `B₀` and
//! reads each minor off as `det(M_{B₀}) · ±det(A_sub)` with `A_sub` of size
//! `|S ∖ B₀|`; other input falls back to one Bareiss run per subset.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::FieldElem;
use crate::subset::{k_subsets, Subset};

/// Determinant of a square matrix by Bareiss elimination with row pivoting.
pub fn bareiss_det(mut m: Vec<Vec<FieldElem>>) -> FieldElem {
    let n = m.len();
    if n == 0 {
        return FieldElem::one();
    }
    let mut negate = false;
    let mut prev = FieldElem::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return FieldElem::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = FieldElem::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// The square submatrix on the given column set.
pub fn column_submatrix(m: &[Vec<FieldElem>], cols: Subset) -> Vec<Vec<FieldElem>> {
    m.iter()
        .map(|row| cols.elements().map(|j| row[j].clone()).collect())
        .collect()
}

/// All maximal minors of a `d × n` matrix, indexed by the colex rank of
/// the column subset.
pub fn maximal_minors(m: &[Vec<FieldElem>], n: usize) -> Vec<FieldElem> {
    let d = m.len();
    let all_rational = m.iter().flatten().all(FieldElem::is_rational);
    if all_rational && d > 0 {
        let q: Vec<Vec<BigRational>> = m
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| match x {
                        FieldElem::Rational(v) => v.clone(),
                        FieldElem::Puiseux(_) => unreachable!(),
                    })
                    .collect()
            })
            .collect();
        rational_minors(&q, n)
    } else {
        maximal_minors_bareiss(m, n)
    }
}

/// Reference route: one Bareiss determinant per column subset.
pub fn maximal_minors_bareiss(m: &[Vec<FieldElem>], n: usize) -> Vec<FieldElem> {
    k_subsets(n, m.len())
        .map(|s| bareiss_det(column_submatrix(m, s)))
        .collect()
}

fn rational_minors(m: &[Vec<BigRational>], n: usize) -> Vec<FieldElem> {
    let d = m.len();
    let (r, pivots) = rref(m, n);
    let count = k_subsets(n, d).count();
    if pivots.len() < d {
        return vec![FieldElem::zero(); count];
    }
    let pivot_set = Subset::from_elements(pivots.iter().copied());
    let base: Vec<Vec<FieldElem>> = column_submatrix(
        &m.iter()
            .map(|row| row.iter().cloned().map(FieldElem::Rational).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        pivot_set,
    );
    let base_det = bareiss_det(base);
    // pivot row of each pivot column
    let mut pivot_row = vec![usize::MAX; n];
    for (row, &col) in pivots.iter().enumerate() {
        pivot_row[col] = row;
    }
    k_subsets(n, d)
        .map(|s| {
            let shared: Vec<usize> = s.elements().filter(|c| pivot_set.contains(*c)).collect();
            let fresh: Vec<usize> = s.elements().filter(|c| !pivot_set.contains(*c)).collect();
            let used_rows: Vec<usize> = shared.iter().map(|&c| pivot_row[c]).collect();
            let free_rows: Vec<usize> = (0..d).filter(|i| !used_rows.contains(i)).collect();

            let col_order: Vec<usize> = shared.iter().chain(&fresh).copied().collect();
            let row_order: Vec<usize> = used_rows.iter().chain(&free_rows).copied().collect();
            let odd = permutation_is_odd(&col_order) ^ permutation_is_odd(&row_order);

            let sub: Vec<Vec<FieldElem>> = free_rows
                .iter()
                .map(|&i| fresh.iter().map(|&j| FieldElem::Rational(r[i][j].clone())).collect())
                .collect();
            let minor = &base_det * &bareiss_det(sub);
            if odd {
                -&minor
            } else {
                minor
            }
        })
        .collect()
}

/// Parity of the permutation that sorts `seq` (distinct entries).
fn permutation_is_odd(seq: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

/// Reduced row echelon form and pivot columns, over ℚ.
#[allow(clippy::needless_range_loop)]
pub fn rref(m: &[Vec<BigRational>], ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut r: Vec<Vec<BigRational>> = m.to_vec();
    let rows = r.len();
    let mut pivots = Vec::new();
    let mut lead = 0usize;
    for col in 0..ncols {
        if lead == rows {
            break;
        }
        let Some(p) = (lead..rows).find(|&i| !r[i][col].is_zero()) else {
            continue;
        };
        r.swap(lead, p);
        let inv = BigRational::one() / &r[lead][col];
        for x in r[lead].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != lead && !r[i][col].is_zero() {
                let f = r[i][col].clone();
                for j in 0..ncols {
                    let delta = &f * &r[lead][j];
                    r[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        lead += 1;
    }
    (r, pivots)
}

/// Rank over ℚ.
pub fn rank_rational(m: &[Vec<BigRational>], ncols: usize) -> usize {
    rref(m, ncols).1.len()
}

/// Rank over the coefficient field by fraction-free elimination.
#[allow(clippy::needless_range_loop)]
pub fn rank(m: &[Vec<FieldElem>], ncols: usize) -> usize {
    let mut r: Vec<Vec<FieldElem>> = m.to_vec();
    let rows = r.len();
    let mut lead = 0usize;
    for col in 0..ncols {
        if lead == rows {
            break;
        }
        let Some(p) = (lead..rows).find(|&i| !r[i][col].is_zero()) else {
            continue;
        };
        r.swap(lead, p);
        for i in lead + 1..rows {
            if r[i][col].is_zero() {
                continue;
            }
            let a = r[lead][col].clone();
            let b = r[i][col].clone();
            for j in 0..ncols {
                r[i][j] = &(&r[i][j] * &a) - &(&r[lead][j] * &b);
            }
        }
        lead += 1;
    }
    lead
}
