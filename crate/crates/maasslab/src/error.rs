//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    /// Asymptotic expansions are rejected inside |u - r| <= C r^{1/3}.
    #[error("transition-regime input (r = {r}, u = {u}): caller must dispatch to quadrature")]
    TransitionInput { r: f64, u: f64 },

    #[error("requested accuracy not attained: reached {reached:.3e}, wanted {wanted:.3e}")]
    AccuracyNotAttained { reached: f64, wanted: f64 },

    #[error("quadrature stalled: {0}")]
    QuadratureStall(String),

    #[error("missing prime eigenvalue for p = {0}")]
    MissingPrime(u64),

    #[error("Hecke table extent {extent} insufficient, need n <= {needed}")]
    TableExtent { extent: u64, needed: u64 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("no eigenvalue found in [{lo}, {hi}]")]
    NoRootInInterval { lo: f64, hi: f64 },

    #[error("ill-conditioned collocation system (condition estimate {0:.3e})")]
    IllConditioned(f64),

    #[error("height out of range: {0}")]
    HeightOutOfRange(String),

    #[error("grid spacing too coarse: {0}")]
    SpacingTooCoarse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
