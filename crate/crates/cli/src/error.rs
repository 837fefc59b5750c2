use std::io;
use std::path::PathBuf;

use sparse_sketch_core::Error as CoreError;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },
    #[error("{0}")]
    Input(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Precondition(String),
    #[error("invariant breach: {0}")]
    Invariant(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn parse(path: &std::path::Path, line: usize, msg: impl Into<String>) -> Self {
        CliError::Parse { path: path.to_path_buf(), line, msg: msg.into() }
    }

    pub fn io(path: &std::path::Path, source: io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }

    /// 2 for bad input, 3 for unmet preconditions, 4 for invariant breaches.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } | CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Precondition(_) => 3,
            CliError::Invariant(_) => 4,
            CliError::Core(e) => match e {
                CoreError::InvalidNorm(_)
                | CoreError::DimensionMismatch { .. }
                | CoreError::IndexOutOfRange { .. }
                | CoreError::DuplicateIndex(_)
                | CoreError::NonFiniteValue { .. }
                | CoreError::NegativeEntry { .. } => 2,
                CoreError::InvariantBreach(_) => 4,
                _ => 3,
            },
        }
    }
}
