//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide error enum. Variants map onto the CLI exit codes:
/// config errors exit 2, missing artifacts exit 3, numeric failures exit 4.
#[derive(Debug, Error)]
pub enum Error {
    #[error("config error: {0}")]
    Config(String),
    #[error("missing artifact: {0}")]
    MissingArtifact(String),
    #[error("unknown token: {0:?}")]
    Tokenize(String),
    #[error("grammar error: {0}")]
    Grammar(String),
    #[error("invalid trajectory: {0}")]
    InvalidTrajectory(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("non-finite value in {0}")]
    NonFinite(String),
    #[error("context overflow: {0}")]
    ContextOverflow(String),
    #[error("empty dataset: {0}")]
    EmptyDataset(String),
    #[error("empty buffer: {0}")]
    EmptyBuffer(String),
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("run lock error: {0}")]
    Lock(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Tokenize(_) | Error::Parse(_) => 2,
            Error::MissingArtifact(_) | Error::Checkpoint(_) => 3,
            Error::NonFinite(_) | Error::Shape(_) | Error::ContextOverflow(_) => 4,
            _ => 1,
        }
    }
}
