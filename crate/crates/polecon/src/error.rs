use thiserror::Error;

/// Unified error type for all toolkit operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at row {row}: {message}")]
    Parse { row: usize, message: String },

    #[error("series '{0}' is empty")]
    EmptySeries(String),

    #[error("series '{a}' and '{b}' have no overlapping dates")]
    NoOverlap { a: String, b: String },

    #[error("series '{a}' and '{b}' are not aligned: {message}")]
    NotAligned { a: String, b: String, message: String },

    #[error("invalid series '{name}': {message}")]
    InvalidSeries { name: String, message: String },

    #[error("CPI value {value} at {date} is not positive")]
    NonPositiveCpi { date: chrono::NaiveDate, value: f64 },

    #[error("invalid parameter {name}: {message}")]
    InvalidParameter { name: String, message: String },

    #[error("MPC {0} yields a divergent multiplier (requires mpc < 1)")]
    DivergentMultiplier(f64),

    #[error("no negative episodes: cannot construct a retimed schedule")]
    NoEpisodes,

    #[error("unknown strategy label '{0}'")]
    UnknownStrategy(String),

    #[error("corrective tax target is infeasible: {0}")]
    InfeasibleTarget(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(row: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            row,
            message: message.into(),
        }
    }

    pub(crate) fn param(name: &str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name: name.to_string(),
            message: message.into(),
        }
    }
}
