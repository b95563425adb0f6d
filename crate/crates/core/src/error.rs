use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty sample")]
    EmptySample,

    #[error("non-finite observation at position {0}")]
    NonFinite(usize),

    #[error("order statistic index out of range: {index} not in 1..={n}")]
    OrderStatisticOutOfRange { index: usize, n: usize },

    #[error("empty modal interval")]
    EmptyModalInterval,

    #[error("length mismatch: {left} values vs {right} scales")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("proposition precondition violated: {0}")]
    Precondition(String),

    #[error("oracle limited to small n (got {n}, max {max})")]
    OracleTooLarge { n: usize, max: usize },

    #[error("insufficient trials: {got} < {min}")]
    InsufficientTrials { got: usize, min: usize },

    #[error("unknown estimator `{0}`")]
    UnknownEstimator(String),

    #[error("estimator `{0}` needs oracle information that was not supplied")]
    OracleUnavailable(&'static str),
}

impl Error {
    pub(crate) fn param(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name: name.into(),
            reason: reason.into(),
        }
    }
}
