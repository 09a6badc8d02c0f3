use thiserror::Error;

/// Errors raised by the covering-path engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Grid dimensions must both be positive.
    #[error("grid dimensions must be positive (got {m}x{n})")]
    EmptyGrid {
        /// Rows requested.
        m: u32,
        /// Columns requested.
        n: u32,
    },
    /// The coverage radius must be strictly positive.
    #[error("coverage radius must be positive")]
    NonPositiveRadius,
    /// A distance query was made against an empty stop list.
    #[error("no stops")]
    NoStops,
    /// An argument fell outside the domain of the operation.
    #[error("{what} out of range: {detail}")]
    OutOfRange {
        /// Name of the offending argument.
        what: &'static str,
        /// Human-readable constraint.
        detail: &'static str,
    },
    /// The exact rectangle check only handles integral stops and radius.
    #[error("exact check requires integer radius/stops")]
    NonIntegralCheck,
    /// Trade-off constraints are only stated for more than one stop.
    #[error("constraint defined for T>1")]
    SingleStopConstraint,
    /// Polyline input was not a concave sequence.
    #[error("abscissae/f-values do not describe a concave increasing sequence")]
    NotConcave,
    /// Operation does not apply to the given variant.
    #[error("operation not defined for variant {0}")]
    WrongVariant(&'static str),
    /// Objective weights were both zero or negative.
    #[error("objective weights must be nonnegative and not both zero")]
    InvalidWeights,
    /// A caller-supplied objective failed the monotonicity probe.
    #[error("objective must be increasing")]
    NonMonotoneObjective,
    /// The exhaustive oracle refused an instance beyond its limits.
    #[error("instance too large for oracle: {0}")]
    OracleLimit(&'static str),
    /// The exhaustive oracle was cancelled by its caller.
    #[error("oracle run cancelled")]
    Cancelled,
}

/// Crate result alias.
pub type Result<T> = core::result::Result<T, Error>;
