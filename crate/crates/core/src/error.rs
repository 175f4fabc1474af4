use thiserror::Error;

/// Errors raised by the inference, oracle and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} labels, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid bitstring {0:?}: expected only '0' and '1'")]
    InvalidBitstring(String),

    #[error("label vectors must have at least one label")]
    EmptyLabelSpace,

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("operation requires an enumerable distribution; {0} is sampling-only")]
    NotEnumerable(&'static str),

    #[error("exhaustive search over {m} labels exceeds the cap of {cap}")]
    CapExceeded { m: usize, cap: usize },

    #[error("marginals must be sorted in descending order")]
    Unsorted,

    #[error("{what} = {value} is out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: String,
        range: String,
    },

    #[error("sample is empty")]
    EmptySample,

    #[error("invalid witness specification: {0}")]
    InvalidWitness(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
