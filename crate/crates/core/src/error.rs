use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied parameters outside an operation's domain.
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("polynomials live in different rings ({left} vs {right} variables)")]
    VariableMismatch { left: usize, right: usize },

    /// Raised by exact division when a nonzero remainder appears.
    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("degree of the zero polynomial is undefined")]
    ZeroDegree,

    /// The integrand of a pushforward is not invariant under the Levi Weyl group.
    #[error("integrand is not invariant under {0}")]
    NotInvariant(String),

    #[error("unexpected non-eigenvector: {generator} maps onto {target}")]
    UnexpectedNonEigenvector { generator: String, target: String },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
