use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("pair #{pair} ({lesser}, {greater}) lies on a cycle of the relation")]
    Cycle {
        pair: usize,
        lesser: String,
        greater: String,
    },
    #[error("pair #{pair} relates {label} to itself")]
    SelfPair { pair: usize, label: String },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("not a permutation of the ground set")]
    InvalidPermutation,
    #[error("element index {index} out of range for a poset of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("size {requested} exceeds the guard of {limit}")]
    SizeGuard { requested: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("relation table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("relation is not reflexive at element {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric at elements {0} and {1}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive at elements {0}, {1}, {2}")]
    NotTransitive(usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
}
