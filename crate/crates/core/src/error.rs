use thiserror::Error;

use crate::structure::ValidationReport;

/// Problems with the shape of a structure description, independent of the
/// Garside axioms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MalformedError {
    #[error("structure has no simples")]
    Empty,
    #[error("structure has {0} simples, more than the supported maximum")]
    TooManySimples(usize),
    #[error("the first simple must be the identity named `1`, found `{0}`")]
    IdentityNotFirst(String),
    #[error("invalid simple name `{0}`")]
    InvalidName(String),
    #[error("duplicate simple name `{0}`")]
    DuplicateName(String),
    #[error("the name `D` is reserved for the Garside element")]
    ReservedName,
    #[error("{context} refers to simple index {index}, but there are only {count} simples")]
    DanglingIndex {
        context: &'static str,
        index: usize,
        count: usize,
    },
    #[error("atom `{0}` listed more than once")]
    DuplicateAtom(String),
    #[error("product `{0} {1}` listed more than once")]
    DuplicateProduct(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GarsideError {
    #[error("malformed structure: {0}")]
    Malformed(#[from] MalformedError),
    #[error("structure violates the Garside axioms:\n{0}")]
    Axioms(ValidationReport),
    #[error("structure file: {0}")]
    Parse(#[from] ParseError),
    #[error("word, token {position}: {message}")]
    Word { position: usize, message: String },
    #[error("instance: {0}")]
    Instance(String),
    #[error("elements belong to different structures")]
    TableMismatch,
    #[error("element is not positive (inf = {inf})")]
    NotPositive { inf: i64 },
    #[error("element is not periodic")]
    NotPeriodic,
    #[error("element is not central")]
    NotCentral,
    #[error("elements do not commute")]
    NotCommuting,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T, E = GarsideError> = std::result::Result<T, E>;
