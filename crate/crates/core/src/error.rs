use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An exponential-time operation was asked to run on a graph larger than
    /// the configured enumeration cap.
    #[error("graph of order {order} exceeds the enumeration cap of {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("interval endpoint {0} is a root; perturb the endpoint")]
    RootAtEndpoint(String),

    #[error("coefficient magnitude exceeds floating-point range; use exact root counting instead")]
    CoefficientOverflow,
}

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
