//! Tropical vectors and matrices.
//!
//! `⟨w, f⟩ = ⊕ w_i ⊙ f_i`, and `w ⊥ f` means this minimum is attained at
//! least twice. Membership in a finitely generated tropical submodule is
//! decided by residuation: the principal coefficients
//! `λ_i = max_j (x_j − (v_i)_j)` give the largest combination `≥ x`, and
//! `x` is in the span iff that combination equals `x`.

use std::fmt;
use std::ops::Index;


use crate::error::{check_len, Error, Result};
use crate::scalar::{count_min, trop_sum, TropScalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropVector(pub Vec<TropScalar>);

impl TropVector {
    pub fn new(entries: Vec<TropScalar>) -> Self {
        TropVector(entries)
    }

    /// The all-`∞` vector.
    pub fn infinite(n: usize) -> Self {
        TropVector(vec![TropScalar::Infinity; n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        TropVector(v.iter().map(|&x| TropScalar::from_int(x)).collect())
    }

    /// Parses entries in scalar string format, panicking on bad input.
    /// Meant for literals in tests and examples.
    pub fn parse(v: &[&str]) -> Self {
        TropVector(v.iter().map(|s| s.parse().expect("scalar literal")).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TropScalar> {
        self.0.iter()
    }

    pub fn is_all_infinite(&self) -> bool {
        self.0.iter().all(TropScalar::is_infinite)
    }

    /// `λ ⊙ v`
    pub fn scale(&self, lambda: &TropScalar) -> TropVector {
        TropVector(self.0.iter().map(|x| x.odot(lambda)).collect())
    }

    /// Entrywise `⊕`.
    pub fn oplus(&self, other: &TropVector) -> Result<TropVector> {
        check_len(self.len(), other.len())?;
        Ok(TropVector(self.0.iter().zip(&other.0).map(|(a, b)| a.oplus(b)).collect()))
    }
}

impl Index<usize> for TropVector {
    type Output = TropScalar;
    fn index(&self, i: usize) -> &TropScalar {
        &self.0[i]
    }
}

impl From<Vec<TropScalar>> for TropVector {
    fn from(v: Vec<TropScalar>) -> Self {
        TropVector(v)
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn products(w: &TropVector, f: &TropVector) -> Result<Vec<TropScalar>> {
    check_len(w.len(), f.len())?;
    Ok(w.0.iter().zip(&f.0).map(|(a, b)| a.odot(b)).collect())
}

/// `⟨w, f⟩ = min_i (w_i + f_i)`.
pub fn trop_dot(w: &TropVector, f: &TropVector) -> Result<TropScalar> {
    Ok(trop_sum(&products(w, f)?))
}

/// True iff `min_i (w_i + f_i)` is attained at least twice, or every term
/// is `∞`.
pub fn perp(w: &TropVector, f: &TropVector) -> Result<bool> {
    let (min, count) = count_min(&products(w, f)?);
    Ok(min.is_infinite() || count >= 2)
}

/// Tropical combination `⊕ λ_i ⊙ v_i`.
pub fn combine(coeffs: &[TropScalar], generators: &[TropVector], n: usize) -> Result<TropVector> {
    check_len(generators.len(), coeffs.len())?;
    let mut acc = TropVector::infinite(n);
    for (l, v) in coeffs.iter().zip(generators) {
        check_len(n, v.len())?;
        acc = acc.oplus(&v.scale(l))?;
    }
    Ok(acc)
}

/// The principal (residuated) coefficients: the entrywise smallest `λ` with
/// `λ_i ⊙ v_i ≥ x` for every `i`. All-`∞` generators get `λ_i = ∞`.
pub fn principal_coefficients(x: &TropVector, generators: &[TropVector]) -> Result<Vec<TropScalar>> {
    let mut out = Vec::with_capacity(generators.len());
    for v in generators {
        check_len(x.len(), v.len())?;
        let mut lambda: Option<TropScalar> = None;
        for (xj, vj) in x.iter().zip(v.iter()) {
            if let TropScalar::Finite(vj) = vj {
                let cand = match xj {
                    TropScalar::Infinity => TropScalar::Infinity,
                    TropScalar::Finite(xj) => TropScalar::Finite(xj - vj),
                };
                lambda = Some(match lambda {
                    Some(l) if l >= cand => l,
                    _ => cand,
                });
            }
        }
        out.push(lambda.unwrap_or(TropScalar::Infinity));
    }
    Ok(out)
}

/// Coefficients expressing `x` as a tropical combination of `generators`,
/// or `None` if `x` is not in their span.
pub fn span_member(x: &TropVector, generators: &[TropVector]) -> Result<Option<Vec<TropScalar>>> {
    let lambda = principal_coefficients(x, generators)?;
    let recombined = combine(&lambda, generators, x.len())?;
    Ok((recombined == *x).then_some(lambda))
}

/// Scalars used to probe `λ ⊙ f`.
fn probe_scalars(f: &TropVector) -> Vec<TropScalar> {
    let mut out: Vec<TropScalar> = ["inf", "0", "1", "-1", "5/2", "-7/3", "100"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for x in f.iter() {
        if let TropScalar::Finite(r) = x {
            out.push(TropScalar::Finite(-r.clone()));
        }
    }
    out
}

/// One inclusion of `(f^⊥)^⊥ = span(f)`: every probed multiple `λ ⊙ f` is
/// perpendicular to every witness `w ∈ f^⊥`.
pub fn double_perp_contains_span(f: &TropVector, witnesses: &[TropVector]) -> Result<bool> {
    for (i, w) in witnesses.iter().enumerate() {
        if !perp(w, f)? {
            return Err(Error::PreconditionViolated(format!("witness {i} is not perpendicular to f")));
        }
    }
    for lambda in probe_scalars(f) {
        let g = f.scale(&lambda);
        for w in witnesses {
            if !perp(w, &g)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A dense min-plus matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    data: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged matrix rows".into()));
            }
        }
        Ok(TropMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        TropMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| TropScalar::from_int(x)).collect()).collect(),
        )
        .expect("rectangular literal")
    }

    pub fn infinite(rows: usize, cols: usize) -> Self {
        TropMatrix { rows, cols, data: vec![TropScalar::Infinity; rows * cols] }
    }

    /// `0` on the diagonal, `∞` elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = TropMatrix::infinite(n, n);
        for i in 0..n {
            m.set(i, i, TropScalar::one());
        }
        m
    }

    /// The matrix unit `E_ij`: `0` at `(i, j)`, `∞` elsewhere.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = TropMatrix::infinite(n, n);
        m.set(i, j, TropScalar::one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TropScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[TropScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<TropScalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_all_infinite(&self) -> bool {
        self.data.iter().all(TropScalar::is_infinite)
    }

    pub fn scale(&self, lambda: &TropScalar) -> TropMatrix {
        TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.odot(lambda)).collect(),
        }
    }

    pub fn oplus(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(TropMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.oplus(b)).collect(),
        })
    }

    /// `C_ik = min_j (A_ij + B_jk)`.
    pub fn matmul(&self, other: &TropMatrix) -> Result<TropMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = TropMatrix::infinite(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..other.cols {
                let v = (0..self.cols)
                    .map(|j| self.get(i, j).odot(other.get(j, k)))
                    .min()
                    .unwrap_or(TropScalar::Infinity);
                out.set(i, k, v);
            }
        }
        Ok(out)
    }
}

pub fn matmul(a: &TropMatrix, b: &TropMatrix) -> Result<TropMatrix> {
    a.matmul(b)
}
