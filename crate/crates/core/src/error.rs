use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },

    #[error("{len} entries cannot fill a {rows}x{cols} matrix")]
    Shape { rows: usize, cols: usize, len: usize },

    #[error("pattern has length {pattern}, matrix has {rows} rows")]
    DimensionMismatch { rows: usize, pattern: usize },

    #[error("row subset {bits:#x} has members outside 0..{rows}")]
    SubsetOutOfRange { bits: u64, rows: usize },

    #[error("{what} = {value} exceeds the enumeration guard of {limit}")]
    GuardExceeded { what: &'static str, value: usize, limit: usize },

    #[error("arithmetic overflow while accumulating the inclusion-exclusion sum")]
    Overflow,

    #[error("no value supplied for cardinality {0}")]
    MissingCardinality(usize),

    #[error("no table entry for ({0}, {1})")]
    MissingEntry(usize, usize),

    #[error("binomial upper argument must be nonnegative, got {0}")]
    NegativeUpper(i64),

    #[error("invalid parameters for {id}: {reason}")]
    Signature { id: &'static str, reason: &'static str },

    #[error("invalid subset constraint: {0}")]
    Constraint(&'static str),

    #[error("grid does not match signature: {0}")]
    Grid(&'static str),
}
