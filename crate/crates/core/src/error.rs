use std::path::PathBuf;

/// Errors produced while loading, validating or combining corpus artifacts.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("cannot read `{source_id}`: {source}")]
    Read {
        source_id: String,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot write `{}`: {source}", path.display())]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{what}, line {line}: {message}")]
    Parse {
        what: String,
        line: usize,
        message: String,
    },

    #[error("empty manifest")]
    EmptyManifest,

    #[error("duplicate source `{0}` in manifest")]
    DuplicateSource(String),

    #[error("invalid tokenization config: {0}")]
    Config(String),

    #[error("cannot merge an empty list of dictionaries")]
    NothingToMerge,

    #[error("duplicate genre `{0}`")]
    DuplicateGenre(String),

    #[error("invalid selection policy: {0}")]
    Policy(String),

    #[error("coverage ranks must be positive and strictly increasing, got {0:?}")]
    CoverageRanks(Vec<usize>),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(what: impl Into<String>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            what: what.into(),
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
