use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] polyperm_core::Error),

    #[error("i/o on {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("checkpoint {path} line {line}: {msg}")]
    Checkpoint { path: String, line: usize, msg: String },

    #[error("report: {0}")]
    Report(#[from] serde_json::Error),

    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),

    #[error("worker pool: {0}")]
    Pool(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
