use cactus3_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed {what} JSON: {source}")]
    Json {
        what: &'static str,
        #[source]
        source: serde_json::Error,
    },
    #[error("field `{field}`: {message}")]
    Field { field: &'static str, message: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn field(field: &'static str, message: impl ToString) -> Self {
        Self::Field {
            field,
            message: message.to_string(),
        }
    }

    /// Process exit status: 3 for a size limit, 1 for an internal failure, 2 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Core(CoreError::LimitExceeded { .. }) => 3,
            Self::Core(CoreError::Internal(_)) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
