use thiserror::Error;

/// Errors raised by parameter validation and by the approximations.
///
/// Numeric payloads are carried as `f64` so the error type does not depend on
/// the scalar the caller is working in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Zipf exponent must be finite and non-negative, got {0}")]
    InvalidAlpha(f64),

    #[error("number of species must satisfy 1 <= n <= {max}, got {n}")]
    InvalidN { n: u64, max: u64 },

    #[error(
        "alpha = {alpha} lies within {guard} of 1 where the closed forms are singular; \
         enable the alpha-one limit branch to evaluate it"
    )]
    AlphaNearOne { alpha: f64, guard: f64 },

    #[error("trapezoidal k must satisfy 2 <= k <= n = {n}, got {k}")]
    InvalidK { k: usize, n: usize },

    #[error("rank {r} outside support 1..={n}")]
    RankOutOfRange { r: usize, n: usize },

    #[error("probability must lie in [0, 1], got {0}")]
    InvalidProbability(f64),

    #[error("moment order must be at least 1")]
    InvalidMomentOrder,

    #[error("the exact method has no approximation error")]
    ExactHasNoError,

    #[error("invalid sweep grid: {0}")]
    InvalidGrid(String),

    #[error("sweep grid contains no evaluable points")]
    EmptyGrid,
}

pub type Result<T> = std::result::Result<T, Error>;
