//! Cell decomposition of a tropical hypersurface in ℝⁿ, n ≤ 3.
//!
//! For every unordered pair `{α, β}` of support exponents the candidate cell
//! is the set where the `α` and `β` terms tie and no other term is smaller:
//!
//! ```text
//! c_α + ⟨α,x⟩ = c_β + ⟨β,x⟩,   c_α + ⟨α,x⟩ ≤ c_γ + ⟨γ,x⟩  for γ ≠ α, β
//! ```
//!
//! Empty candidates are discarded with an exact Fourier–Motzkin test. The
//! union of the surviving cells is exactly the tropical hypersurface.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Exponent;
use crate::poly::TropPoly;
use crate::polyhedron::{AffineConstraint, Polyhedron};

pub const MAX_CELL_VARS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceCell {
    pub pair: (Exponent, Exponent),
    /// `⟨α − β, x⟩ = c_β − c_α`
    pub equality: AffineConstraint,
    /// `⟨α − γ, x⟩ ≤ c_γ − c_α` for every other support exponent `γ`.
    pub inequalities: Vec<AffineConstraint>,
}

impl HypersurfaceCell {
    pub fn dim(&self) -> usize {
        self.equality.coeffs.len()
    }

    pub fn polyhedron(&self) -> Polyhedron {
        Polyhedron {
            dim: self.dim(),
            equalities: vec![self.equality.clone()],
            inequalities: self.inequalities.clone(),
        }
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.polyhedron().contains(x)
    }

    pub fn sample_point(&self) -> Option<Vec<BigRational>> {
        self.polyhedron().feasible_point()
    }

    /// The cell as a point, segment, ray or line in the plane. Only defined
    /// for polynomials in two variables.
    pub fn planar_piece(&self) -> Option<PlanarPiece> {
        if self.dim() != 2 {
            return None;
        }
        let u = &self.equality.coeffs;
        let r = &self.equality.rhs;
        let base = if !u[0].is_zero() {
            [r / &u[0], BigRational::zero()]
        } else {
            [BigRational::zero(), r / &u[1]]
        };
        let dir = [-u[1].clone(), u[0].clone()];
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for c in &self.inequalities {
            let slope = &c.coeffs[0] * &dir[0] + &c.coeffs[1] * &dir[1];
            let slack = &c.rhs - (&c.coeffs[0] * &base[0] + &c.coeffs[1] * &base[1]);
            if slope.is_zero() {
                if slack.is_negative() {
                    return None;
                }
                continue;
            }
            let t = slack / &slope;
            if slope.is_positive() {
                hi = Some(match hi {
                    Some(h) if h <= t => h,
                    _ => t,
                });
            } else {
                lo = Some(match lo {
                    Some(l) if l >= t => l,
                    _ => t,
                });
            }
        }
        let at = |t: &BigRational| [&base[0] + t * &dir[0], &base[1] + t * &dir[1]];
        let piece = match (lo, hi) {
            (Some(l), Some(h)) if l > h => return None,
            (Some(l), Some(h)) if l == h => PlanarPiece::Point(at(&l)),
            (Some(l), Some(h)) => PlanarPiece::Segment(at(&l), at(&h)),
            (Some(l), None) => PlanarPiece::Ray { start: at(&l), direction: dir },
            (None, Some(h)) => PlanarPiece::Ray {
                start: at(&h),
                direction: [-dir[0].clone(), -dir[1].clone()],
            },
            (None, None) => PlanarPiece::Line { point: base, direction: dir },
        };
        Some(piece)
    }
}

/// A cell of a plane tropical curve, with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanarPiece {
    Point([BigRational; 2]),
    Segment([BigRational; 2], [BigRational; 2]),
    Ray { start: [BigRational; 2], direction: [BigRational; 2] },
    Line { point: [BigRational; 2], direction: [BigRational; 2] },
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Nonempty cells of `V(f)`, one per support pair that actually ties
/// somewhere.
pub fn hypersurface_cells(f: &TropPoly) -> Result<Vec<HypersurfaceCell>> {
    let n = f.nvars();
    if n > MAX_CELL_VARS {
        return Err(Error::TooManyVariables(n));
    }
    let terms: Vec<(&Exponent, &BigRational)> = f.terms().collect();
    let mut cells = Vec::new();
    for i in 0..terms.len() {
        for j in (i + 1)..terms.len() {
            let (a, ca) = terms[i];
            let (b, cb) = terms[j];
            let diff = |g: &Exponent| -> Vec<BigRational> {
                a.iter().zip(g).map(|(x, y)| int(x - y)).collect()
            };
            let equality = AffineConstraint::new(diff(b), cb - ca);
            let inequalities = terms
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i && *k != j)
                .map(|(_, (g, cg))| AffineConstraint::new(diff(g), *cg - ca))
                .collect();
            let cell = HypersurfaceCell { pair: (a.clone(), b.clone()), equality, inequalities };
            if !cell.polyhedron().is_empty() {
                cells.push(cell);
            }
        }
    }
    Ok(cells)
}

/// For a univariate polynomial, the points of its tropical hypersurface in
/// increasing order.
pub fn bend_points(f: &TropPoly) -> Result<Vec<BigRational>> {
    if f.nvars() != 1 {
        return Err(Error::DimensionMismatch(format!(
            "bend points need a univariate polynomial, got {} variables",
            f.nvars()
        )));
    }
    let mut pts: Vec<BigRational> = hypersurface_cells(f)?
        .iter()
        .filter_map(|c| c.sample_point().map(|mut p| p.remove(0)))
        .collect();
    pts.sort();
    pts.dedup();
    Ok(pts)
}

/// Convenience: does `x` (finite) lie on some returned cell?
pub fn on_some_cell(cells: &[HypersurfaceCell], x: &[BigRational]) -> bool {
    cells.iter().any(|c| c.contains(x))
}
