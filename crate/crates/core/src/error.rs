use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parameters outside the domain of an operation (bad `k`, `n`, `d`, ...).
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// A polynomial refers to `w_i` with `i` outside `1..=k`.
    #[error("variable w{index} is out of range for k = {k}")]
    VariableOutOfRange { index: usize, k: usize },

    /// Gröbner basis computation exceeded the configured work limits.
    #[error("Groebner complexity limit exceeded for G_{k}(R^{n}): {detail}")]
    ComplexityLimit { k: usize, n: usize, detail: String },

    /// Two inputs disagree on the manifold dimension.
    #[error("dimension mismatch: expected d = {expected}, found d = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A manifold g-type bound was requested for a non-orientable Grassmannian.
    #[error(
        "method {method} requires an orientable manifold, but G_{k}(R^{n}) is non-orientable (n odd)"
    )]
    NotOrientable { method: String, k: usize, n: usize },

    #[error("witness has no factors")]
    EmptyWitness,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
