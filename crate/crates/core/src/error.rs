use std::fmt;

use thiserror::Error;

/// Failure to read an element or document, with the byte offset where parsing stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("element is not a unit")]
    NotAUnit,
    #[error("ring `{ring}` lacks capability {capability}")]
    UnsupportedCapability { ring: String, capability: String },
    #[error("no exact quotient exists")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("reduction did not settle within {0} iterations")]
    ReductionDiverged(usize),
    #[error("element is not simple: its two-sided ideal is proper")]
    NotSimple,
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("criterion unsatisfiable: {0}")]
    CriterionUnsatisfiable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
