use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GalError {
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid config: {0}")]
    Config(String),

    #[error("{0}")]
    Invalid(String),

    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    Dimension {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("unknown {kind} id {id}")]
    UnknownId { kind: &'static str, id: u32 },

    #[error("{side} embedding table missing {missing} key(s), first: {sample:?}")]
    MissingKeys {
        side: &'static str,
        missing: usize,
        sample: Vec<String>,
    },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("unknown queue role `{0}`")]
    UnknownRole(String),

    #[error("checkpoint error: {0}")]
    Checkpoint(String),
}

impl GalError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        GalError::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, GalError>;
