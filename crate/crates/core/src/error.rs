use thiserror::Error;

/// Errors raised by code construction, distance computation and decoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("polynomial {poly:#x} is not primitive of degree {m}")]
    NotPrimitive { m: u32, poly: u32 },

    #[error("generators are linearly dependent over GF(2)")]
    DependentGenerators,

    #[error("code is not self-orthogonal under the trace inner product")]
    NotSelfOrthogonal,

    #[error("vector is not a member of the dual code")]
    NotInDual,

    #[error("enumeration needs {required} elements, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("codes do not form a nested chain: {0}")]
    NotNested(String),

    #[error("search exhausted after {trials} trials without meeting the request")]
    SearchExhausted { trials: usize },

    #[error("decoding failed: {0}")]
    DecodeFailure(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
