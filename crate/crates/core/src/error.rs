//! Error type shared across the crate.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("block order split {split} out of range for {arity} variables")]
    BadBlockSplit { split: usize, arity: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("expected {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("characteristic {0} rejected: {1}")]
    CharacteristicRejected(u64, &'static str),
    #[error("ideal is not homogeneous")]
    NonHomogeneous,
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unsupported variety `{0}` for this operation")]
    UnsupportedVariety(String),
    #[error("unknown variety id `{0}`")]
    UnknownVariety(String),
    #[error("rank oracle seeds disagree: {0} vs {1}")]
    SeedDisagreement(u64, u64),
    #[error("point does not lie on the variety")]
    PointNotOnVariety,
    #[error("character is not a nonnegative combination of irreducible characters")]
    NotCharacterCombination,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
