//! Valuated matroids and tropical linear spaces.
//!
//! A valuated matroid of rank `d` on `[n]` is a map `p` from `d`-subsets to
//! 𝕋, not identically `∞`, satisfying the valuated basis exchange axiom:
//! for all `B, C` and `b ∈ B ∖ C` there is `c ∈ C ∖ B` with
//!
//! ```text
//! p(B) + p(C) ≥ p(B − b + c) + p(C − c + b).
//! ```
//!
//! From `p` come the cocircuit vectors `(α_A)_i = p(A ∪ i)` for
//! `(d−1)`-subsets `A` and the circuit vectors `(β_B)_i = p(B ∖ i)` for
//! `(d+1)`-subsets `B`. The tropical linear space `L(p)` is the span of the
//! cocircuits and, equivalently, the set of `x` perpendicular to every
//! circuit.
//!
//! ```
//! use tropical::{ValuatedMatroid, TropVector};
//!
//! let u24 = ValuatedMatroid::uniform(4, 2);
//! assert!(u24.check_vm_axiom().is_ok());
//! assert!(u24.linear_space_member(&TropVector::from_ints(&[3, 3, 3, 5])).unwrap());
//! assert!(!u24.linear_space_member(&TropVector::from_ints(&[0, 0, 5, 7])).unwrap());
//! ```

use std::fmt;

use crate::det::maximal_minors;
use crate::error::{check_len, Error, Result};
use crate::field::FieldElem;
use crate::linalg::{combine, perp, TropVector};
use crate::monomial::binomial;
use crate::scalar::TropScalar;
use crate::subset::{k_subsets, Subset, MAX_GROUND};
use crate::valuation::Valuation;

/// Upper bound on the number of stored Plücker coordinates.
pub const MAX_PLUCKER_LEN: u128 = 250_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuatedMatroid {
    n: usize,
    d: usize,
    plucker: Vec<TropScalar>,
}

/// Why a Plücker vector fails to be a valuated matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VmViolation {
    /// Every coordinate is `∞`.
    Trivial,
    /// No `c` rescues the exchange of `b` out of `B` towards `C`.
    Exchange { b_set: Subset, c_set: Subset, b: usize },
}

impl fmt::Display for VmViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VmViolation::Trivial => f.write_str("all Plücker coordinates are infinite"),
            VmViolation::Exchange { b_set, c_set, b } => {
                write!(f, "B={b_set}, C={c_set}, b={}: no exchange partner", b + 1)
            }
        }
    }
}

fn check_shape(n: usize, d: usize) -> Result<usize> {
    if d > n {
        return Err(Error::DimensionMismatch(format!("rank {d} exceeds ground set size {n}")));
    }
    if n > MAX_GROUND {
        return Err(Error::TooLarge(format!("ground set of size {n}")));
    }
    let len = binomial(n as u64, d as u64);
    if len > MAX_PLUCKER_LEN {
        return Err(Error::TooLarge(format!("C({n},{d}) = {len} Plücker coordinates")));
    }
    Ok(len as usize)
}

/// Brute-force check of the exchange axiom on a dense Plücker vector.
///
/// `∞` is handled in (ℚ ∪ {∞}, +, ≤): a left side of `∞` satisfies the
/// inequality against anything, so only pairs of finite bases are examined.
pub fn check_vm_axiom(n: usize, d: usize, plucker: &[TropScalar]) -> std::result::Result<(), VmViolation> {
    let bases: Vec<(Subset, &TropScalar)> = k_subsets(n, d)
        .zip(plucker)
        .filter(|(_, v)| v.is_finite())
        .collect();
    if bases.is_empty() {
        return Err(VmViolation::Trivial);
    }
    let value = |s: Subset| &plucker[s.colex_rank()];
    for &(b_set, pb) in &bases {
        for &(c_set, pc) in &bases {
            let lhs = pb.odot(pc);
            for b in b_set.difference(c_set).elements() {
                let ok = c_set.difference(b_set).elements().any(|c| {
                    let rhs = value(b_set.without(b).with(c)).odot(value(c_set.without(c).with(b)));
                    lhs >= rhs
                });
                if !ok {
                    return Err(VmViolation::Exchange { b_set, c_set, b });
                }
            }
        }
    }
    Ok(())
}

impl ValuatedMatroid {
    /// Builds a matroid from a dense colex-ordered Plücker vector and checks
    /// the exchange axiom.
    pub fn new(n: usize, d: usize, plucker: Vec<TropScalar>) -> Result<Self> {
        let m = ValuatedMatroid::from_plucker_unchecked(n, d, plucker)?;
        check_vm_axiom(n, d, &m.plucker)
            .map_err(|v| Error::PreconditionViolated(format!("not a valuated matroid: {v}")))?;
        Ok(m)
    }

    /// Wraps a Plücker vector without checking the exchange axiom; only the
    /// length is validated. Circuits, cocircuits and membership still follow
    /// the usual recipes for such vectors.
    pub fn from_plucker_unchecked(n: usize, d: usize, plucker: Vec<TropScalar>) -> Result<Self> {
        let len = check_shape(n, d)?;
        check_len(len, plucker.len())?;
        Ok(ValuatedMatroid { n, d, plucker })
    }

    /// Builds from explicit `(subset, value)` pairs; unlisted subsets are `∞`.
    pub fn from_pairs<I>(n: usize, d: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, TropScalar)>,
    {
        let len = check_shape(n, d)?;
        let mut plucker = vec![TropScalar::Infinity; len];
        for (s, v) in pairs {
            if s.len() != d {
                return Err(Error::BadSubsetSize { expected: d, got: s.len() });
            }
            if s.elements().any(|i| i >= n) {
                return Err(Error::Parse(format!("subset {s} not inside [{n}]")));
            }
            plucker[s.colex_rank()] = v;
        }
        Ok(ValuatedMatroid { n, d, plucker })
    }

    /// The uniform matroid `U_{d,n}` with every coordinate `0`.
    pub fn uniform(n: usize, d: usize) -> Self {
        let len = check_shape(n, d).expect("uniform matroid size");
        ValuatedMatroid { n, d, plucker: vec![TropScalar::one(); len] }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn plucker(&self) -> &[TropScalar] {
        &self.plucker
    }

    /// `p(S)` for a `d`-subset `S`.
    pub fn value(&self, s: Subset) -> &TropScalar {
        &self.plucker[s.colex_rank()]
    }

    /// `(subset, value)` pairs in colex order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, &TropScalar)> {
        k_subsets(self.n, self.d).zip(self.plucker.iter())
    }

    /// Subsets with finite value.
    pub fn bases(&self) -> Vec<Subset> {
        self.entries().filter(|(_, v)| v.is_finite()).map(|(s, _)| s).collect()
    }

    pub fn check_vm_axiom(&self) -> std::result::Result<(), VmViolation> {
        check_vm_axiom(self.n, self.d, &self.plucker)
    }

    /// `p + b` on every coordinate.
    pub fn shifted(&self, b: &TropScalar) -> ValuatedMatroid {
        ValuatedMatroid {
            n: self.n,
            d: self.d,
            plucker: self.plucker.iter().map(|v| v.odot(b)).collect(),
        }
    }

    /// `(α_A)_i = p(A ∪ i)` for `i ∉ A`, `∞` for `i ∈ A`.
    pub fn cocircuit(&self, a: Subset) -> Result<TropVector> {
        if self.d == 0 || a.len() != self.d - 1 {
            return Err(Error::BadSubsetSize { expected: self.d.wrapping_sub(1), got: a.len() });
        }
        self.check_inside(a)?;
        Ok(TropVector(
            (0..self.n)
                .map(|i| if a.contains(i) { TropScalar::Infinity } else { self.value(a.with(i)).clone() })
                .collect(),
        ))
    }

    /// `(β_B)_i = p(B ∖ i)` for `i ∈ B`, `∞` otherwise.
    pub fn circuit(&self, b: Subset) -> Result<TropVector> {
        if b.len() != self.d + 1 {
            return Err(Error::BadSubsetSize { expected: self.d + 1, got: b.len() });
        }
        self.check_inside(b)?;
        Ok(TropVector(
            (0..self.n)
                .map(|i| if b.contains(i) { self.value(b.without(i)).clone() } else { TropScalar::Infinity })
                .collect(),
        ))
    }

    fn check_inside(&self, s: Subset) -> Result<()> {
        match s.elements().find(|&i| i >= self.n) {
            Some(i) => Err(Error::IndexOutOfRange { index: i, size: self.n }),
            None => Ok(()),
        }
    }

    /// All cocircuits, keyed by their `(d−1)`-subset. Empty for rank 0.
    pub fn cocircuits(&self) -> Vec<(Subset, TropVector)> {
        if self.d == 0 {
            return Vec::new();
        }
        k_subsets(self.n, self.d - 1)
            .map(|a| (a, self.cocircuit(a).expect("size checked")))
            .collect()
    }

    /// All circuits, keyed by their `(d+1)`-subset. Empty for rank `n`.
    pub fn circuits(&self) -> Vec<(Subset, TropVector)> {
        k_subsets(self.n, self.d + 1)
            .map(|b| (b, self.circuit(b).expect("size checked")))
            .collect()
    }

    /// `x ∈ L(p)`: `x` is perpendicular to every circuit.
    pub fn linear_space_member(&self, x: &TropVector) -> Result<bool> {
        check_len(self.n, x.len())?;
        for b in k_subsets(self.n, self.d + 1) {
            if !perp(&self.circuit(b)?, x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The dual matroid: rank `n − d`, `p*(S) = p([n] ∖ S)`.
    pub fn dual(&self) -> ValuatedMatroid {
        let plucker = k_subsets(self.n, self.n - self.d)
            .map(|s| self.value(s.complement(self.n)).clone())
            .collect();
        ValuatedMatroid { n: self.n, d: self.n - self.d, plucker }
    }

    /// Valuated matroid of the row space of a `d × n` matrix:
    /// `p(S) = ν(det M_S)`.
    pub fn from_matrix(v: &Valuation, rows: &[Vec<FieldElem>]) -> Result<Self> {
        let n = rows.first().map(Vec::len).unwrap_or(0);
        ValuatedMatroid::from_matrix_with_width(v, rows, n)
    }

    /// As [`ValuatedMatroid::from_matrix`], with the column count given so
    /// that a matrix with no rows still has a ground set.
    pub fn from_matrix_with_width(v: &Valuation, rows: &[Vec<FieldElem>], n: usize) -> Result<Self> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        check_shape(n, d)?;
        let minors = maximal_minors(rows, n);
        if minors.iter().all(FieldElem::is_zero) {
            return Err(Error::RankDeficient);
        }
        let plucker = minors.iter().map(|m| v.valuate(m)).collect::<Result<Vec<_>>>()?;
        Ok(ValuatedMatroid { n, d, plucker })
    }

    /// Vector elimination in `L(p)`.
    ///
    /// Given `f, g ∈ L(p)` with `f_β = g_β ≠ ∞`, returns `h ∈ L(p)` with
    /// `h_β = ∞`, `h ≥ f ⊕ g`, and `h_α = f_α ⊕ g_α` wherever `f_α ≠ g_α`.
    ///
    /// Every `h ∈ L(p)` with `h_β = ∞` is a combination of the cocircuits
    /// that are `∞` at `β`. Among those combinations lying above `f ⊕ g`
    /// (off `β`) the residuated one is entrywise smallest, so it satisfies
    /// every equality that any admissible `h` satisfies. The search is the
    /// single candidate; failure is reported as [`Error::NotFound`].
    pub fn eliminate(&self, f: &TropVector, g: &TropVector, beta: usize) -> Result<TropVector> {
        check_len(self.n, f.len())?;
        check_len(self.n, g.len())?;
        if beta >= self.n {
            return Err(Error::IndexOutOfRange { index: beta, size: self.n });
        }
        if f[beta] != g[beta] || f[beta].is_infinite() {
            return Err(Error::PreconditionViolated(format!(
                "need f_β = g_β finite, got {} and {}",
                f[beta], g[beta]
            )));
        }
        for (name, x) in [("f", f), ("g", g)] {
            if !self.linear_space_member(x)? {
                return Err(Error::PreconditionViolated(format!("{name} = {x} is not in L(p)")));
            }
        }
        let floor = f.oplus(g)?;
        let usable: Vec<TropVector> = self
            .cocircuits()
            .into_iter()
            .map(|(_, c)| c)
            .filter(|c| c[beta].is_infinite() && !c.is_all_infinite())
            .collect();
        let lambda: Vec<TropScalar> = usable
            .iter()
            .map(|c| {
                let mut best: Option<TropScalar> = None;
                for (alpha, (m, ca)) in floor.iter().zip(c.iter()).enumerate() {
                    if alpha == beta {
                        continue;
                    }
                    if let TropScalar::Finite(ca) = ca {
                        let need = match m {
                            TropScalar::Infinity => TropScalar::Infinity,
                            TropScalar::Finite(m) => TropScalar::Finite(m - ca),
                        };
                        best = Some(match best {
                            Some(b) if b >= need => b,
                            _ => need,
                        });
                    }
                }
                best.unwrap_or(TropScalar::Infinity)
            })
            .collect();
        let h = combine(&lambda, &usable, self.n)?;
        for alpha in 0..self.n {
            if alpha != beta && f[alpha] != g[alpha] && h[alpha] != floor[alpha] {
                return Err(Error::NotFound(format!(
                    "smallest admissible combination {h} exceeds f ⊕ g at index {}",
                    alpha + 1
                )));
            }
        }
        if !self.linear_space_member(&h)? {
            return Err(Error::NotFound(format!("cocircuit combination {h} is not in L(p)")));
        }
        Ok(h)
    }
}

impl fmt::Display for ValuatedMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} d={} [", self.n, self.d)?;
        let parts: Vec<String> = self.entries().map(|(s, v)| format!("{s}:{v}")).collect();
        write!(f, "{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &str) -> TropScalar {
        v.parse().unwrap()
    }

    fn set(v: &str) -> Subset {
        v.parse().unwrap()
    }

    fn vec(v: &[&str]) -> TropVector {
        TropVector::parse(v)
    }

    /// n=3, d=2 with p12=0, p13=1, p23=0.
    fn small() -> ValuatedMatroid {
        ValuatedMatroid::from_pairs(3, 2, [(set("{1,2}"), s("0")), (set("{1,3}"), s("1")), (set("{2,3}"), s("0"))])
            .unwrap()
    }

    #[test]
    fn uniform_satisfies_axiom() {
        for n in 1..=6 {
            for d in 0..=n {
                assert!(ValuatedMatroid::uniform(n, d).check_vm_axiom().is_ok());
            }
        }
    }

    #[test]
    fn two_disjoint_bases_fail() {
        let m = ValuatedMatroid::from_pairs(4, 2, [(set("{1,2}"), s("0")), (set("{3,4}"), s("0"))]).unwrap();
        let err = m.check_vm_axiom().unwrap_err();
        assert!(matches!(err, VmViolation::Exchange { .. }));
        assert!(ValuatedMatroid::new(4, 2, m.plucker().to_vec()).is_err());
    }

    #[test]
    fn single_basis_passes() {
        let m = ValuatedMatroid::from_pairs(5, 3, [(set("{1,3,5}"), s("7/2"))]).unwrap();
        assert!(m.check_vm_axiom().is_ok());
        let trivial = ValuatedMatroid::from_pairs(3, 1, []).unwrap();
        assert_eq!(trivial.check_vm_axiom(), Err(VmViolation::Trivial));
    }

    #[test]
    fn cocircuit_examples() {
        assert_eq!(ValuatedMatroid::uniform(4, 2).cocircuit(set("{1}")).unwrap(), vec(&["inf", "0", "0", "0"]));
        assert_eq!(small().cocircuit(set("{1}")).unwrap(), vec(&["inf", "0", "1"]));
        let rank1 = ValuatedMatroid::new(3, 1, vec![s("2"), s("inf"), s("-1")]).unwrap();
        assert_eq!(rank1.cocircuit(Subset::empty()).unwrap(), vec(&["2", "inf", "-1"]));
        assert!(matches!(small().cocircuit(set("{1,2}")), Err(Error::BadSubsetSize { .. })));
    }

    #[test]
    fn circuit_examples() {
        assert_eq!(ValuatedMatroid::uniform(3, 2).circuit(set("{1,2,3}")).unwrap(), vec(&["0", "0", "0"]));
        assert_eq!(small().circuit(set("{1,2,3}")).unwrap(), vec(&["0", "1", "0"]));
        let m = ValuatedMatroid::from_pairs(3, 2, [(set("{1,2}"), s("0"))]).unwrap();
        assert_eq!(m.circuit(set("{1,2,3}")).unwrap(), vec(&["inf", "inf", "0"]));
        assert!(matches!(small().circuit(set("{1,2}")), Err(Error::BadSubsetSize { .. })));
    }

    #[test]
    fn membership_examples() {
        let u = ValuatedMatroid::uniform(4, 2);
        assert!(u.linear_space_member(&TropVector::from_ints(&[3, 3, 3, 5])).unwrap());
        assert!(!u.linear_space_member(&TropVector::from_ints(&[0, 0, 5, 7])).unwrap());
        // triple {1,3,4} has min 3 attained once
        assert!(!u.linear_space_member(&TropVector::from_ints(&[3, 3, 5, 5])).unwrap());
        for (_, c) in small().cocircuits() {
            assert!(small().linear_space_member(&c).unwrap());
        }
        assert!(matches!(u.linear_space_member(&TropVector::from_ints(&[0])), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn duality() {
        let u = ValuatedMatroid::uniform(4, 2);
        assert_eq!(u.dual(), u);
        let dual = small().dual();
        assert_eq!(dual.rank(), 1);
        assert_eq!(dual.plucker(), &[s("0"), s("1"), s("0")]);
        assert_eq!(dual.dual(), small());
        let zero = ValuatedMatroid::new(3, 0, vec![s("5")]).unwrap();
        let full = zero.dual();
        assert_eq!((full.rank(), full.plucker()), (3, &[s("5")][..]));
    }

    #[test]
    fn from_matrix_examples() {
        let m = vec![
            vec![FieldElem::int(1), FieldElem::int(0), FieldElem::int(1)],
            vec![FieldElem::int(0), FieldElem::int(1), FieldElem::int(2)],
        ];
        assert_eq!(ValuatedMatroid::from_matrix(&Valuation::PAdic(2), &m).unwrap(), small());

        let m: Vec<Vec<FieldElem>> = [[1, 1, 1, 1], [0, 1, 2, 3]]
            .iter()
            .map(|r| r.iter().map(|&x| FieldElem::int(x)).collect())
            .collect();
        assert_eq!(ValuatedMatroid::from_matrix(&Valuation::Trivial, &m).unwrap(), ValuatedMatroid::uniform(4, 2));

        let id = vec![vec![FieldElem::int(1), FieldElem::int(0)], vec![FieldElem::int(0), FieldElem::int(1)]];
        let m = ValuatedMatroid::from_matrix(&Valuation::PAdic(3), &id).unwrap();
        assert_eq!(m.plucker(), &[s("0")]);

        let deficient = vec![vec![FieldElem::int(1), FieldElem::int(2)], vec![FieldElem::int(2), FieldElem::int(4)]];
        assert_eq!(ValuatedMatroid::from_matrix(&Valuation::Trivial, &deficient), Err(Error::RankDeficient));
    }

    #[test]
    fn elimination_examples() {
        let u = ValuatedMatroid::uniform(3, 2);
        let h = u.eliminate(&vec(&["0", "0", "inf"]), &vec(&["0", "inf", "0"]), 0).unwrap();
        assert_eq!(h, vec(&["inf", "0", "0"]));
        let f = vec(&["0", "0", "0"]);
        assert_eq!(u.eliminate(&f, &f, 0).unwrap(), vec(&["inf", "0", "0"]));
    }

    #[test]
    fn elimination_on_rank_one_line() {
        // L = {λ ⊙ (0,0)} ∪ {(∞,∞)}; the only vector with h_1 = ∞ is all-∞,
        // which satisfies the conditions because f = g imposes no equalities.
        let m = ValuatedMatroid::uniform(2, 1);
        let f = vec(&["0", "0"]);
        assert_eq!(m.eliminate(&f, &f, 0).unwrap(), vec(&["inf", "inf"]));
    }

    #[test]
    fn elimination_preconditions() {
        let u = ValuatedMatroid::uniform(3, 2);
        let f = vec(&["0", "0", "0"]);
        let g = vec(&["1", "1", "1"]);
        assert!(matches!(u.eliminate(&f, &g, 0), Err(Error::PreconditionViolated(_))));
        let not_member = vec(&["0", "1", "2"]);
        assert!(matches!(u.eliminate(&not_member, &not_member, 0), Err(Error::PreconditionViolated(_))));
        assert!(matches!(u.eliminate(&f, &f, 5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn scaling_preserves_structure() {
        let m = small();
        let shifted = m.shifted(&s("-5/2"));
        assert!(shifted.check_vm_axiom().is_ok());
        let x = vec(&["1", "0", "1"]);
        assert_eq!(m.linear_space_member(&x).unwrap(), shifted.linear_space_member(&x).unwrap());
    }
}
