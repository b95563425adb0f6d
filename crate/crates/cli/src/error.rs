use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{}:{line}: cannot parse `{text}` as a finite number", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        text: String,
    },

    #[error("{}: no observations", path.display())]
    EmptyInput { path: PathBuf },

    #[error("config {}: {message}", path.display())]
    Config { path: PathBuf, message: String },

    #[error("invalid argument: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] hetmean::Error),

    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),

    #[error("json output: {0}")]
    Json(#[from] serde_json::Error),

    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for problems with the user's input, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. }
            | CliError::Write { .. }
            | CliError::Parse { .. }
            | CliError::EmptyInput { .. }
            | CliError::Config { .. }
            | CliError::Usage(_) => 1,
            CliError::Core(e) => match e {
                hetmean::Error::EmptySample
                | hetmean::Error::NonFinite(_)
                | hetmean::Error::InvalidParameter { .. }
                | hetmean::Error::Precondition(_)
                | hetmean::Error::OracleTooLarge { .. }
                | hetmean::Error::InsufficientTrials { .. }
                | hetmean::Error::UnknownEstimator(_) => 1,
                _ => 2,
            },
            CliError::Csv(_) | CliError::Json(_) | CliError::Io(_) => 2,
        }
    }
}
