use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed polynomial text at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("ideal generators are not homogeneous")]
    NotHomogeneous,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("weight {0:?} is not dominant")]
    NonDominant(Vec<i64>),
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("basis fails the S-pair certificate")]
    CertificateFailed,
}

pub type Result<T> = std::result::Result<T, Error>;
