use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmmError {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid rule {id}: {reason}")]
    InvalidRule { id: String, reason: String },
    #[error("rule {rule} does not match at position {pos}")]
    NoMatch { rule: String, pos: usize },
    #[error("generator {0} has no assigned element")]
    UnassignedGenerator(String),
    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("size {size} exceeds the bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("element {0} is not in the carrier")]
    ElementNotInCarrier(usize),
    #[error("invalid SMM isomorphism: {0}")]
    InvalidIso(String),
    #[error("bialgebroid is not source-regular: {0}")]
    NotSourceRegular(String),
    #[error("invalid adjunction data: {0}")]
    AdjunctionInvalid(String),
    #[error("A-set is not rank-1 free: {0}")]
    NotRank1Free(String),
    #[error("map is not an A-set isomorphism: {0}")]
    NotIso(String),
    #[error("class map depends on the representative: {0}")]
    IllDefined(String),
    #[error("malformed derivation at line {line}: {message}")]
    Derivation { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, SmmError>;
