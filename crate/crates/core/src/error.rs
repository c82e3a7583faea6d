use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid group spec `{spec}`: {msg}")]
    GroupSpec { spec: String, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} exceeds guard: requested {requested}, limit {limit}")]
    Guard {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("distributions live on different groups (`{0}` vs `{1}`)")]
    GroupMismatch(String, String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn spec(spec: &str, msg: impl Into<String>) -> Self {
        Error::GroupSpec {
            spec: spec.to_string(),
            msg: msg.into(),
        }
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Guard { .. } => 3,
            Error::Numerical(_) | Error::Invariant(_) => 4,
            Error::Io(_) | Error::Json(_) => 4,
            _ => 2,
        }
    }
}
