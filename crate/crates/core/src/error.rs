use thiserror::Error;

use crate::arrangement::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(ValidationReport),

    #[error("arrangement is not cellular: v - e + f = {found}, surface requires {expected}")]
    NotCellular { found: i64, expected: i64 },

    #[error("face tracing failed: {0}")]
    Structural(String),

    #[error("unknown curve id {0}")]
    UnknownCurve(usize),

    #[error("curve {0} is inessential; the bigon criterion does not apply")]
    InessentialCurve(usize),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("no N <= {limit} satisfies the predicate")]
    SearchExhausted { limit: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn argument<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
