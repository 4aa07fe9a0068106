//! The chapters of the book, compiled so that `cargo test` runs every
//! snippet in them against the current crate.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/semiring.md")]
pub mod semiring {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/valuations.md")]
pub mod valuations {}
#[doc = include_str!("../../../book/src/matroids.md")]
pub mod matroids {}
#[doc = include_str!("../../../book/src/ideals.md")]
pub mod ideals {}
#[doc = include_str!("../../../book/src/exterior.md")]
pub mod exterior {}
#[doc = include_str!("../../../book/src/clifford.md")]
pub mod clifford {}
#[doc = include_str!("../../../book/src/dequant.md")]
pub mod dequant {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
