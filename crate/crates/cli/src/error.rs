use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Precondition(#[from] relprime_core::Error),

    #[error("{0} verification mismatch(es)")]
    Mismatch(usize),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 0 success, 1 verification mismatch, 2 usage or precondition error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) | CliError::Precondition(_) => 2,
            CliError::Io(_) | CliError::Csv(_) => 2,
        }
    }
}
