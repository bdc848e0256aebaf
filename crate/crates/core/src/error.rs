use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in extended {op}")]
    Overflow { op: &'static str },

    #[error("value {value} lies outside the carrier of {lattice}")]
    Domain { value: String, lattice: &'static str },

    #[error("matrix has shape {rows}x{cols} but {labels} labels were given")]
    Dimension {
        rows: usize,
        cols: usize,
        labels: usize,
    },

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("no value given for `{0}`")]
    MissingLabel(String),

    #[error("expected {expected} coordinates, found {found}")]
    Arity { expected: usize, found: usize },

    #[error("{0}")]
    Mismatch(String),

    #[error("not a valid category: {0}")]
    InvalidCategory(String),

    #[error("point has an infinite coordinate: {0}")]
    InfiniteCoordinate(String),

    #[error("cannot parse scalar `{0}`")]
    ParseScalar(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
