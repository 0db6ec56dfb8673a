use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("weight {0} is out of range")]
    InvalidWeight(u32),
    #[error("weight {0} must be even")]
    OddWeight(u32),
    #[error("prime {p} is below the minimum {min} for this formula")]
    PrimeTooSmall { p: u64, min: u64 },
    #[error("q = {0} must be at least 2")]
    InvalidResidueSize(u64),
    #[error("{formula} evaluated to the non-integer {value}")]
    NonIntegral { formula: &'static str, value: String },
    #[error("{formula} evaluated to the negative value {value}")]
    Negative { formula: &'static str, value: String },
    #[error("denominator constant term must be +1 or -1, found {0}")]
    NonUnitDenominator(String),
    #[error("no generating function is catalogued for p = {p}, type {omega}")]
    Uncovered { p: u64, omega: String },
    #[error("s_{k}(p = {p}, {omega}) is not determined")]
    Unknown { k: u32, p: u64, omega: String },
    #[error("type {0} is not one of the generic types I, IIa, IIIa+VIa/b, IVa, Va")]
    NotGeneric(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("fixture parse error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
