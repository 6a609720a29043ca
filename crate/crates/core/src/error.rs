use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParams(String),

    #[error("graph has {n} vertices, oracle limit is {max_n}")]
    OracleLimit { n: usize, max_n: usize },

    #[error("cannot place {m} edges on {n} vertices (at most {max})")]
    TooManyEdges { n: usize, m: u64, max: u64 },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
