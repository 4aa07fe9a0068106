//! Maslov dequantization: the semirings 𝕋_ℓ = (ℝ ∪ {−∞}, ⊕_ℓ, +) with
//! `a ⊕_ℓ b = log_ℓ(ℓ^a + ℓ^b)`.
//!
//! As `ℓ → ∞` the addition converges to `max`, and for every base
//! `max(a, b) ≤ a ⊕_ℓ b ≤ max(a, b) + log_ℓ 2`. This is the only
//! floating-point code in the crate; it deliberately does not interoperate
//! with [`TropScalar`](crate::TropScalar).

use std::fmt;

use crate::error::{Error, Result};

/// A real number or `−∞`, in the max-plus convention.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct DequantScalar(f64);

impl DequantScalar {
    pub const NEG_INFINITY: DequantScalar = DequantScalar(f64::NEG_INFINITY);

    /// Wraps a finite float. Returns `None` for NaN or `+∞`.
    pub fn new(v: f64) -> Option<Self> {
        if v.is_nan() || v == f64::INFINITY {
            None
        } else {
            Some(DequantScalar(v))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_neg_infinity(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }
}

impl fmt::Display for DequantScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_neg_infinity() {
            f.write_str("-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

fn check_base(ell: f64) -> Result<()> {
    if ell.is_finite() && ell > 1.0 {
        Ok(())
    } else {
        Err(Error::BadBase(ell.to_string()))
    }
}

/// `log_ℓ(ℓ^a + ℓ^b)`, evaluated as `max + log_ℓ(1 + ℓ^(min − max))` so
/// that large bases and large arguments do not overflow.
pub fn dequant_add(a: DequantScalar, b: DequantScalar, ell: f64) -> Result<DequantScalar> {
    check_base(ell)?;
    let (hi, lo) = if a.0 >= b.0 { (a.0, b.0) } else { (b.0, a.0) };
    if lo == f64::NEG_INFINITY {
        return Ok(DequantScalar(hi));
    }
    let ln_ell = ell.ln();
    let gap = ((lo - hi) * ln_ell).exp();
    Ok(DequantScalar(hi + gap.ln_1p() / ln_ell))
}

/// `a ⊙_ℓ b = a + b`, independent of the base.
pub fn dequant_mul(a: DequantScalar, b: DequantScalar) -> DequantScalar {
    DequantScalar(a.0 + b.0)
}

/// The limiting addition `max(a, b)`.
pub fn max_add(a: DequantScalar, b: DequantScalar) -> DequantScalar {
    if a.0 >= b.0 {
        a
    } else {
        b
    }
}
