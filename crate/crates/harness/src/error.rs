use mcov_core::ReadError;

/// Failures that stop a harness run before any report is produced.
#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("input error: {0}")]
    Input(#[from] ReadError),
    #[error("unknown check id `{0}` (run `mcov checks` for the list)")]
    UnknownCheck(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mcov_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl HarnessError {
    /// Process exit status for this failure: every harness error is an input or usage problem.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
