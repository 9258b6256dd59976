use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the exact computation layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error("matrix is not symmetric positive definite")]
    NotPositiveDefinite,

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("invalid type label: {0}")]
    InvalidLabel(String),

    #[error("set is not reflection-closed")]
    NotReflectionClosed,

    #[error("root system is not reduced")]
    NotReduced,

    #[error("root system is reducible where irreducible is required")]
    Reducible,

    #[error("{0} is not a root of the given system")]
    NotARoot(String),

    #[error("weight is not regular for the given root system")]
    NotRegular,

    #[error("unknown subsystem name `{name}` in {parent}")]
    UnknownName { parent: String, name: String },

    #[error("index tuple does not fit parent: {0}")]
    BadIndex(String),

    #[error("isometry does not normalize the root system")]
    BadOuterGenerator,

    #[error("budget exceeded: {what} needs {needed}, cap is {cap}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("character contexts differ")]
    ContextMismatch,

    #[error("non-integral datum where an integer is required: {0}")]
    NotIntegral(String),

    #[error("unsupported parent for this operation: {0}")]
    UnsupportedParent(String),

    #[error("usage error: {0}")]
    Usage(String),
}
