use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid chain descriptor: {0}")]
    InvalidChain(String),

    #[error("coefficient {value} of {field} lies outside [0,1]")]
    CoefficientOutOfRange { field: String, value: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a quotient singularity: {0}")]
    NotQuotient(String),

    #[error("no isolated singularity at the origin detected up to truncation degree {cap}")]
    NotIsolated { cap: usize },

    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("unknown component {0:?}")]
    UnknownComponent(String),

    #[error("missing pairing {0}")]
    MissingPairing(String),

    #[error("hypothesis not met: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
