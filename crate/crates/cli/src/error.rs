use std::fmt;
use std::path::PathBuf;

use dht_core::DhtError;

/// Exit codes: 1 usage/config, 2 I/O, 3 degenerate baseline.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    DegenerateBaseline,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io { .. } => 2,
            CliError::DegenerateBaseline => 3,
        }
    }

    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::DegenerateBaseline => write!(
                f,
                "the zero-guard reconstruction is already exact (zero signal?); \
                 error ratios are undefined"
            ),
        }
    }
}

impl std::error::Error for CliError {}

impl From<DhtError> for CliError {
    fn from(err: DhtError) -> Self {
        match err {
            DhtError::DegenerateBaseline { .. } => CliError::DegenerateBaseline,
            other => CliError::Usage(other.to_string()),
        }
    }
}
