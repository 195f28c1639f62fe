use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or querying a parameter tuple.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid series parameters (g={g}, r={r}, d={d}): {reason}")]
    InvalidSeries {
        g: i64,
        r: i64,
        d: i64,
        reason: &'static str,
    },

    #[error("invalid sequence {entries:?} (d={d}): {reason}")]
    InvalidSequence {
        entries: Vec<i64>,
        d: i64,
        reason: &'static str,
    },

    #[error("invalid secant problem (g={g}, r={r}, d={d}, e={e}, f={f}): {reason}")]
    InvalidProblem {
        g: i64,
        r: i64,
        d: i64,
        e: i64,
        f: i64,
        reason: &'static str,
    },

    #[error("invalid de Jonquieres pattern: {0}")]
    InvalidPattern(String),

    #[error("sequence length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("invalid bounds: {0}")]
    InvalidBounds(String),

    #[error("enumeration too large: r={r}, d={d} (limits r <= {r_cap}, d <= {d_cap})")]
    EnumerationTooLarge {
        r: i64,
        d: i64,
        r_cap: i64,
        d_cap: i64,
    },

    #[error("inconsistent classification at {problem}: rules {rules}")]
    Inconsistent { problem: String, rules: String },
}
