use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not a bijection: inputs {first:?} and {second:?} both map to {image:?}")]
    NotABijection {
        first: (u32, u32),
        second: (u32, u32),
        image: (u32, u32),
    },
    #[error("coordinate {value} at table entry {index} is outside [1, {bound}]")]
    OutOfRange {
        index: usize,
        value: u32,
        bound: usize,
    },
    #[error("expected {expected} table entries, found {found}")]
    WrongTableLength { expected: usize, found: usize },
    #[error("size must be at least 1")]
    EmptySet,
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("leg position {position} is out of range for tuples of length {len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("the map does not satisfy the Yang-Baxter equation")]
    NotAYbeSolution,
    #[error("the solution is degenerate")]
    Degenerate,
    #[error("encoding overflow: {0}")]
    Overflow(String),
    #[error("invalid letter: {0}")]
    InvalidLetter(String),
    #[error("words belong to different families")]
    FamilyMismatch,
    #[error("degree {requested:?} is not below {available:?}")]
    DegreeOutOfRange {
        requested: Vec<usize>,
        available: Vec<usize>,
    },
    #[error("the family lacks the unique {0} property")]
    PropertyMissing(&'static str),
    #[error("degrees {0:?} and {1:?} overlap")]
    DegreesOverlap(Vec<usize>, Vec<usize>),
    #[error("the family fails the generalized QYBE and does not define a k-graph")]
    InvalidFamily,
    #[error("the family is not constant (all sizes and maps equal)")]
    NotConstantFamily,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("exhaustive enumeration is limited to N <= 3, got {0}")]
    SizeTooLarge(usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("the solution is not of derived type")]
    NotDerivedType,
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("boundary composition is nonzero in degree {0}")]
    NotAComplex(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
