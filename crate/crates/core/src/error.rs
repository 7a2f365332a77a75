use thiserror::Error;

/// Errors raised by table construction, parsing and the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order {0}: orders must be at least 1")]
    InvalidOrder(i64),

    #[error("order {n} exceeds the configured limit {limit}")]
    OrderTooLarge { n: usize, limit: usize },

    #[error("invalid step k={k} for order n={n}: need 1 <= k < n")]
    InvalidStep { n: usize, k: usize },

    #[error("index ({i}, {j}) out of range for order {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },

    #[error("entry {value} at position {position} is outside 1..={n}")]
    EntryOutOfRange { value: usize, position: usize, n: usize },

    #[error("length mismatch: expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction impossible: {0}")]
    ConstructionImpossible(String),

    #[error("resource limit: {what} {value} exceeds bound {limit}")]
    ResourceLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    /// A structural claim that was expected to hold failed on a concrete input.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
