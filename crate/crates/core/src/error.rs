use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input contains no edges")]
    EmptyInput,

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("node index {node} out of range (graph has {node_count} nodes)")]
    NodeOutOfRange { node: usize, node_count: usize },

    /// Carries the external labels of two nodes with no path between them.
    #[error("graph is disconnected: no path between `{0}` and `{1}`")]
    Disconnected(String, String),

    #[error("center set is empty")]
    EmptyCenter,

    #[error("{what}: expected length {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("edge ({u}, {v}) joins levels {level_u} and {level_v}, which are not adjacent")]
    LevelGap {
        u: usize,
        v: usize,
        level_u: u32,
        level_v: u32,
    },

    #[error("need at least {needed} admissible points, found {found}")]
    TooFewPoints { needed: usize, found: usize },

    #[error("zero variance in {0}")]
    ZeroVariance(&'static str),

    #[error("invalid CCDF: {0}")]
    InvalidCcdf(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
