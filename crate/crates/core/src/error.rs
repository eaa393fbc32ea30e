use thiserror::Error;

/// Errors produced by transform, metric, and report operations.
#[derive(Debug, Error)]
pub enum DhtError {
    /// An index range with `lo > hi`.
    #[error("invalid index range: {lo} > {hi}")]
    InvalidRange { lo: i64, hi: i64 },

    /// A sample or spectrum value that is NaN or infinite.
    #[error("non-finite value {value} at position {index}")]
    NonFinite { index: usize, value: f64 },

    /// Two signals that were expected to share origin and width.
    #[error("signal shapes differ: origin {origin_a} width {width_a} vs origin {origin_b} width {width_b}")]
    ShapeMismatch {
        origin_a: i64,
        width_a: usize,
        origin_b: i64,
        width_b: usize,
    },

    /// The zero-guard reconstruction is exact, so error ratios are undefined.
    /// Carries the absolute RMS error (always 0.0) so callers can still report it.
    #[error("zero-guard reconstruction error is zero; ratio to baseline is undefined")]
    DegenerateBaseline { rms_abs: f64 },

    /// Anything else that violates an operation's preconditions.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, DhtError>;
