use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A caller violated a dimensional or structural precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("evaluation produced non-finite value in row {row}")]
    NonFinite { row: usize },

    #[error("unknown problem: {0}")]
    UnknownProblem(String),

    #[error("problem `{0}` is not scalable; n_var cannot be set")]
    NotScalable(String),

    #[error("no analytic front for problem `{0}`")]
    NoAnalyticFront(String),

    #[error("gradients unavailable for problem `{0}`")]
    GradientsUnavailable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("exact hypervolume unsupported above 3 objectives (got {0})")]
    HypervolumeDimension(usize),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("malformed csv {path}: {msg}")]
    Csv { path: PathBuf, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for failures that happen while computing (as opposed to bad input).
    pub fn is_runtime(&self) -> bool {
        match self {
            Error::NonFinite { .. } => true,
            Error::Io { source, .. } => source.kind() != std::io::ErrorKind::NotFound,
            _ => false,
        }
    }
}
