//! Exact computational tropical algebra.
//!
//! The tropical semiring here is `𝕋 = ℚ ∪ {∞}` with `a ⊕ b = min(a, b)` and
//! `a ⊙ b = a + b`. Everything is exact rational arithmetic except the
//! Maslov dequantization in [`dequant`], which is numerical on purpose.
//!
//! ```
//! use tropical::{TropPoly, TropScalar};
//!
//! // X^2 ⊕ 1⊙X ⊕ 3 at X = 1 is min(2, 2, 3) = 2, attained twice.
//! let c = TropScalar::from_int;
//! let f = TropPoly::from_terms(1, [(vec![2], c(0)), (vec![1], c(1)), (vec![0], c(3))]);
//! let x = [TropScalar::from_int(1)];
//! assert_eq!(f.evaluate(&x).unwrap(), TropScalar::from_int(2));
//! assert!(f.tropically_vanishes(&x).unwrap());
//! ```

pub mod dequant;
pub mod clifford;
pub mod det;
pub mod error;
pub mod exterior;
pub mod field;
pub mod hypersurface;
pub mod ideal;
pub mod json;
pub mod linalg;
pub mod matroid;
pub mod monomial;
pub mod poly;
pub mod polyhedron;
pub mod scalar;
pub mod subset;
pub mod valuation;

pub use clifford::CliffordElem;
pub use error::{Error, Result};
pub use exterior::ExtElement;
pub use field::{FieldElem, Puiseux};
pub use hypersurface::{hypersurface_cells, HypersurfaceCell, PlanarPiece};
pub use ideal::IdealTruncation;
pub use linalg::{TropMatrix, TropVector};
pub use matroid::ValuatedMatroid;
pub use poly::{BendCongruence, TropPoly};
pub use scalar::TropScalar;
pub use subset::Subset;
pub use valuation::{ClassicalPoly, Valuation};
