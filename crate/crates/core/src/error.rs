use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomials live over different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("operation not supported over {0}")]
    Unsupported(&'static str),
    #[error("map has no finite critical points")]
    NoCriticalPoints,
    #[error("fiber p(x) - T q(x) is inseparable")]
    InseparableFiber,
    #[error("wrong characteristic: expected {expected}, got {actual}")]
    WrongCharacteristic { expected: u64, actual: u64 },
    #[error("{0} is a bad prime for this orbit")]
    BadPrime(u64),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{what} exceeds cap ({value} > {cap})")]
    CapExceeded { what: String, value: String, cap: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Budget and size-guard failures, as opposed to invalid input.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }

    pub(crate) fn cap(what: impl Into<String>, value: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded { what: what.into(), value: value.to_string(), cap: cap.to_string() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
