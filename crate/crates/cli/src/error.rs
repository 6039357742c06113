use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{}: {message}", path.display())]
    Schema { path: PathBuf, message: String },

    #[error(transparent)]
    Core(#[from] ltd_core::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 usage, 2 data or parse, 3 numerical.
    pub fn exit_code(&self) -> u8 {
        use ltd_core::Error as E;
        match self {
            Self::Usage(_) => 1,
            Self::Io { .. } | Self::Parse { .. } | Self::Schema { .. } => 2,
            Self::Core(e) => match e {
                E::BadParams(_) | E::BadWindow { .. } | E::BadKind(_) | E::BadAlgorithm(_) => 1,
                E::TooShort { .. }
                | E::DimensionMismatch { .. }
                | E::Empty
                | E::IncompleteMatrix(_) => 2,
                E::ZeroPivot { .. } | E::EmptySystem | E::DegenerateDistribution => 3,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
