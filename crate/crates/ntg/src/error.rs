use std::io;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ntg_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("sweep file: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("sweep file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("thread pool: {0}")]
    Threads(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    /// Configuration problems exit with 2, everything else with 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Csv(_) | CliError::Threads(_) => 1,
            _ => 2,
        }
    }
}
