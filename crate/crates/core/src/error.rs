use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {re}{im:+}i is outside the open unit disk")]
    OutsideDisk { re: f64, im: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameters: {0}")]
    Validation(String),

    /// A theorem hypothesis does not hold; the message names the inequality.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("no coefficient bound is stated for n = 1, k = 1")]
    UnsupportedRegime,

    #[error("function evaluation is not finite at x = {at}")]
    NonFinite { at: f64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}
