use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape d={d} n={n}: {reason}")]
    InvalidShape { d: usize, n: usize, reason: &'static str },

    #[error("shape d={d} n={n} needs {cells} cells, over the budget of {budget}")]
    Capacity { d: usize, n: usize, cells: u128, budget: u128 },

    #[error("{what} needs {needed} steps, over the budget of {budget}")]
    Budget { what: &'static str, needed: u128, budget: u128 },

    #[error("position {pos} out of range for dimension {d}")]
    Position { pos: usize, d: usize },

    #[error("index {0:?} does not fit the shape")]
    BadIndex(Vec<usize>),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("negative entry at {0:?}")]
    Negative(Vec<usize>),

    #[error("not a unitrade")]
    NotUnitrade,

    #[error("not a latin hypercube: {0}")]
    NotLatin(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
