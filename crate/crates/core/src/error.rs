use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },

    #[error("expected {expected} entries, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid monomial ordering: {0}")]
    InvalidOrdering(String),

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("invalid valuation: {0}")]
    InvalidValuation(String),

    #[error("standard basis computation exceeded the limit of {limit} critical pairs")]
    PairLimit { limit: usize },

    #[error("local orderings are only supported for homogeneous input: {0}")]
    InhomogeneousLocalInput(String),

    #[error("Bayer's method does not apply: {0}; use the saturation method instead")]
    BayerPrecondition(String),

    #[error("input is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("element is not contained in the subalgebra generated by the given polynomials")]
    NotInSubalgebra,

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("{0}")]
    Parse(#[from] crate::parse::ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
