use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinates have the wrong parity for {0}")]
    Parity(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("operation is not defined for {0}")]
    WrongFamily(String),
    #[error("enumeration too large: {0}")]
    TooLarge(String),
    #[error("illegal translation step: {0}")]
    IllegalStep(String),
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("diagram is not canonical: {0}")]
    NonCanonical(String),
    #[error("no recursion clause applies: {0}")]
    OutOfRegime(String),
    #[error("cycle in move graph")]
    CycleDetected,
    #[error("path-sum D disagrees with the inverse of K at ({0}, {1})")]
    InversionMismatch(usize, usize),
    #[error("weight has the wrong shape: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
