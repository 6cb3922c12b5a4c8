use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group too large for enumeration: exceeded cap of {cap} elements after {partial} found")]
    GroupTooLarge { cap: usize, partial: usize },

    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("character table rejected: {0}")]
    TableValidation(String),

    #[error("table inconsistent: {0}")]
    TableInconsistent(String),

    #[error("algebra error: {0}")]
    Algebra(String),

    #[error("not a single split block: {0}")]
    NotSingleBlock(String),

    #[error("block residue field is not split (degree {degree}); extend scalars first")]
    NonSplit { degree: usize },

    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),

    #[error("subspaces live in different algebras")]
    AmbientMismatch,

    #[error("internal error: {0}")]
    Internal(String),

    #[error("manifest error: {0}")]
    Manifest(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(source_name: &str, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            source_name: source_name.to_string(),
            line,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}
