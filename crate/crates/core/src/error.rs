use thiserror::Error;

use crate::graph::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid arrangement graph:\n{0}")]
    InvalidGraph(ValidationReport),

    /// The graph is valid but lies outside the domain of the requested formula.
    #[error("outside formula domain: {0}")]
    Domain(String),

    #[error("index j = {j} outside 1..={d}")]
    IndexOutOfRange { j: i64, d: i64 },

    #[error("parse error at byte {pos} near {token:?}: {message}")]
    Parse {
        pos: usize,
        token: String,
        message: String,
    },

    #[error("linear form has all coefficients zero")]
    ZeroForm,

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("class with zero constant term has no inverse")]
    NotAUnit,

    #[error("Euler characteristic {0} is not an integer")]
    NonIntegral(String),

    /// Two routes that must agree produced different results.
    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
