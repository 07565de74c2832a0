use std::path::PathBuf;

use thiserror::Error;

use crate::encode::EncodeError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{label}: {source}")]
    Encode { label: String, source: EncodeError },

    #[error("{label}: {source}")]
    Map {
        label: String,
        source: setdist_core::Error,
    },

    #[error("{0}")]
    Input(String),

    #[error("degenerate mapped set (fewer than 2 distinct elements) for: {}", .labels.join(", "))]
    Degenerate { labels: Vec<String> },

    #[error("property violations in {} suite(s)", .failed)]
    Violation { failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io { .. } | CliError::Encode { .. } | CliError::Input(_) => 2,
            CliError::Map { source, .. } => match source {
                setdist_core::Error::Degenerate { .. } => 3,
                setdist_core::Error::InvalidConfig(_) => 1,
                _ => 2,
            },
            CliError::Degenerate { .. } => 3,
            CliError::Violation { .. } => 4,
        }
    }
}
