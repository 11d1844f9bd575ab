use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation undefined on the zero polynomial")]
    EmptyPolynomial,

    #[error("{what} = {value} is out of range ({allowed})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        allowed: String,
    },

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("matrix is not symmetric")]
    MatrixNotSymmetric,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial is not hyperbolic")]
    NotHyperbolic,

    #[error("polynomial already has {0} distinct roots, nothing to perturb")]
    NothingToDo(usize),

    #[error("{0}")]
    Unrepresentable(String),

    #[error("need at least {needed} input values, got {got}")]
    InsufficientValues { needed: usize, got: usize },

    #[error("pattern covers {found} coordinates, expected {expected}")]
    PatternSize { expected: usize, found: usize },

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("grid needs {needed} points, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
