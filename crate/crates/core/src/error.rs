use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {p} is not admissible: {reason}")]
    Inadmissible { p: u64, reason: String },

    #[error("{n} is not an odd prime")]
    NotOddPrime { n: u64 },

    #[error("{n} is not prime")]
    NotPrime { n: u64 },

    #[error("{g} is not a primitive root modulo {p}")]
    NotPrimitiveRoot { g: u64, p: u64 },

    #[error("invalid b vector: {0}")]
    InvalidBVector(String),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("columns must share one period (column {index} has period {found}, expected {expected})")]
    PeriodMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("modulus must be nonzero")]
    ZeroModulus,

    #[error("modulus must be odd and at least 3, got {0}")]
    EvenModulus(String),

    #[error("malformed sequence file: {0}")]
    Parse(String),

    #[error("sign of y is ambiguous for p = {p}: {matching} candidate(s) match the computed spectrum")]
    SignResolution { p: u64, matching: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
