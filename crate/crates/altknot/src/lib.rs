//! Exact invariants, alternating-number bounds, and crossing-change
//! certificates for torus knots of small braid index.
//!
//! The crate computes classical and modern knot invariants (Alexander and
//! Jones polynomials, signature, determinant, and the piecewise-linear
//! concordance function Υ) with arbitrary-precision arithmetic, derives
//! lower and upper bounds on the alternating number of torus knots with
//! braid index at most four, and builds machine-checkable certificates for
//! the crossing-change deformations that realize the upper bounds.

pub mod algebra;
pub mod braid;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod bounds;
pub mod construction;
pub mod invariants;
pub mod upsilon;

pub use error::{Error, Result};
