//! Exact arithmetic building blocks: Laurent polynomials over ℤ,
//! piecewise-linear functions over ℚ, and symmetric-matrix signatures.

pub mod laurent;
pub mod piecewise;
pub mod signature;

pub use laurent::{determinant, LaurentPoly};
pub use piecewise::{upper_envelope, Line, PiecewiseLinear};
pub use signature::{signature_symmetric, signature_symmetric_int};

/// Arbitrary-precision rational number.
pub type Rational = num::BigRational;

/// The rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
