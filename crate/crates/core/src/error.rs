use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {n} outside the supported range 1..={max}")]
    DimensionOutOfRange { n: usize, max: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("table has {found} entries, expected {expected}")]
    TableLength { expected: usize, found: usize },

    #[error("entry {index} is {value}, expected +1 or -1")]
    NotSign { index: usize, value: i64 },

    #[error("element {element} outside [1, {n}]")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("level {k} outside [{min}, {n}]")]
    LevelOutOfRange { k: usize, min: usize, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("exhaustive mode supports n <= {max}, got n = {n}")]
    ExhaustiveCapExceeded { n: usize, max: usize },

    #[error("invalid sweep plan: {0}")]
    InvalidPlan(String),

    #[error("unknown property '{0}'")]
    UnknownProperty(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
