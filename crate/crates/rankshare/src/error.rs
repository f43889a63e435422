//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
///
/// `GuardExceeded` is kept separate from the input-shaped variants because the
/// CLI maps it to its own exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Field construction failed (non-prime characteristic, reducible
    /// modulus, unsupported order, ...).
    #[error("invalid field: {0}")]
    InvalidField(String),

    /// Matrix shapes do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Operands belong to different finite fields.
    #[error("field mismatch between operands")]
    FieldMismatch,

    /// Subspaces live in different ambient spaces.
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),

    /// An exhaustive enumeration would exceed the configured guard.
    #[error("enumeration guard exceeded: required {required}, limit {limit}")]
    GuardExceeded { required: u128, limit: u128 },

    /// A caller-supplied argument is out of range or malformed.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A documented operation precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An operation that needs integral ranks was applied to a proper
    /// q-polymatroid.
    #[error("not a q-matroid: {0}")]
    NotAQMatroid(String),

    /// A share value matches no codeword.
    #[error("inconsistent share value: {0}")]
    InconsistentShare(String),

    /// The requested secret is not achievable by any codeword.
    #[error("infeasible secret: {0}")]
    InfeasibleSecret(String),

    /// Input file could not be parsed or validated.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// CLI exit code for this error: 3 for guard overruns, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::GuardExceeded { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
