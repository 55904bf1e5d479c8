//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by samplers, transforms, estimators, and the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {requested} exceeds the {available} dimensions covered by the direction-number table")]
    DimensionUnsupported { requested: usize, available: usize },

    #[error("bad shape ({rows} x {cols}): {context}")]
    BadShape {
        rows: usize,
        cols: usize,
        context: String,
    },

    #[error("probability {0} lies outside the open interval (0, 1)")]
    ProbabilityOutOfRange(f64),

    #[error("quantile inversion did not reach tolerance {tol} within {max_iter} iterations")]
    QuantileDiverged { tol: f64, max_iter: usize },

    #[error("step width {0} is invalid: need 0 < delta_h < 1 with 1/delta_h an integer")]
    BadStepWidth(f64),

    #[error("budget {n_t} with k = {k} leaves {n_v} rows for the {class} design; at least 2 are required")]
    InfeasibleBudget {
        n_t: u64,
        k: usize,
        n_v: u64,
        class: &'static str,
    },

    #[error("outputs are constant; variance-based measures are undefined")]
    DegenerateOutput,

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(&'static str),

    #[error("section along dimension {dim} has only {pairs} consecutive pair(s); at least 2 are required")]
    TooFewPairs { dim: usize, pairs: usize },

    #[error("length mismatch: got {got}, expected {expected} ({context})")]
    LengthMismatch {
        got: usize,
        expected: usize,
        context: &'static str,
    },

    #[error("incomplete design: {0}")]
    IncompleteDesign(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error in {path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
