use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation, e.g. inverting zero.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// The operation is only defined for irreducible matrices.
    #[error("matrix is reducible")]
    Reducible,

    /// A post-condition that holds mathematically failed numerically.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// The grid contains no point satisfying the constraint.
    #[error("no grid point satisfies the constraint at this resolution")]
    InfeasibleAtResolution,

    #[error("usage error: {0}")]
    Usage(String),
}
