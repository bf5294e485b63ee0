use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid election: {0}")]
    InvalidElection(String),

    #[error("invalid nomination instance: {0}")]
    InvalidInstance(String),

    #[error("invalid nomination: {0}")]
    InvalidNomination(String),

    #[error("invalid alpha {0:?}: expected an exact fraction \"p/q\" in [0,1], or \"0\"/\"1\"")]
    InvalidAlpha(String),

    #[error("maximin score is undefined for a single-candidate election")]
    MaximinUndefined,

    #[error("candidates must be distinct (got {0:?} twice)")]
    SameCandidate(String),

    #[error("unknown candidate {0:?}")]
    UnknownCandidate(String),

    #[error("solver precondition violated: {0}")]
    Precondition(String),

    #[error("instance too large for {what}: {size} exceeds the limit of {limit}")]
    TooLarge { what: String, size: u128, limit: u128 },

    #[error("undecidable within configured budget: {0}")]
    Budget(String),

    #[error("{context}: {message}")]
    Parse { context: String, message: String },

    #[error("generator rejected input: {0}")]
    Generator(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
