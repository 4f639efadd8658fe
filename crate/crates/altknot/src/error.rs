use thiserror::Error;

/// Errors shared across the crate's exact-arithmetic and knot-theoretic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact Laurent-polynomial division left a nonzero remainder.
    #[error("polynomial division is not exact")]
    NotDivisible,

    /// No unit multiple `±t^k · p` is symmetric under `t ↔ t⁻¹` with value +1 at `t = 1`.
    #[error("polynomial has no symmetric unit normalization: {0}")]
    NotNormalizable(String),

    /// The polynomial is not an alternating ±1 staircase polynomial.
    #[error("polynomial is not in staircase form: {0}")]
    NotStaircaseForm(String),

    /// Two braid words live on different strand counts.
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),

    /// A letter position fell outside the word.
    #[error("position {0} is out of range for a word of length {1}")]
    IndexOutOfRange(usize, usize),

    /// An operation defined only for knots was applied to a multi-component closure.
    #[error("closure is a link with more than one component")]
    MultiComponent,

    /// The state-sum oracle refuses diagrams above its crossing cap.
    #[error("diagram with {0} crossings exceeds the {1}-crossing state-sum cap")]
    TooLarge(usize, usize),

    /// The deformation builder could not assemble a verified certificate.
    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    /// Text or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally invalid input (bad strand count, bad torus parameters, ...).
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
