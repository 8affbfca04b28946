use thiserror::Error;

/// Errors raised by the interval space, the algebra and the solvers built on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("improper endpoints: lo = {lo}, hi = {hi} (need finite lo <= hi)")]
    ImproperEndpoints { lo: f64, hi: f64 },

    #[error("non-finite coordinate")]
    NonFinite,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("element is not invertible (discriminant vanishes)")]
    NotInvertible,

    #[error("ratio condition failed: {0}")]
    RatioConditionFailed(String),

    #[error("divisor is centered at zero, the 2x2 system is singular")]
    CenteredDivisor,

    #[error("divisor is degenerate (zero length)")]
    DegenerateDivisor,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("pivot {value} at ({row}, {col}) is numerically zero")]
    NumericalPivot { row: usize, col: usize, value: f64 },

    #[error("infeasible: right-hand side of row {row} is not a non-negative class")]
    Infeasible { row: usize },

    #[error("equality row {row} has no identity column to start the basis")]
    MissingBasis { row: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
