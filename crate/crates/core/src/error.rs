use alloc::string::String;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed scalar `{text}`: {reason}")]
    Parse { text: String, reason: &'static str },
    #[error("malformed field descriptor `{0}`")]
    BadField(String),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field has no square root of -1")]
    NoSqrtMinusOne,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate structure entry for ({0}, {1})")]
    DuplicateEntry(usize, usize),
    #[error("algebra has no unit")]
    NoUnit,
    #[error("declared unit fails: {0}")]
    BadUnit(String),
    #[error("element is not a nonzero idempotent")]
    NotIdempotent,
    #[error("not a Jordan algebra: {0}")]
    NotJordan(String),
    #[error("RelationFailed: {0}")]
    RelationFailed(&'static str),
    #[error("frame elements 1, e, h are linearly dependent")]
    DependentFrame,
    #[error("module decomposition check failed: {0}")]
    ModuleDecomposition(String),
    #[error("bracket leaves its graded component: {0}")]
    BracketEscapesComponent(String),
    #[error("bracket table is not anticommutative at ({0}, {1})")]
    NotAnticommutative(usize, usize),
    #[error("epsilon does not square to -1")]
    BadEpsilon,
    #[error("wrong bracket convention: {0}")]
    WrongConvention(&'static str),
    #[error("algebra is not associative: {0}")]
    NotAssociative(String),
    #[error("map is not an involution: {0}")]
    NotInvolutive(String),
    #[error("bracket on S1 x S1 is required but missing")]
    MissingBracketSlot,
    #[error("invalid bilinear form data: {0}")]
    InvalidBilinearForm(String),
    #[error("linear map is not invertible")]
    Singular,
}

pub type Result<T> = core::result::Result<T, Error>;
