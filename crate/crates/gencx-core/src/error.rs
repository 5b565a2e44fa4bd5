//! Error type shared by all modules.

use thiserror::Error;

/// Rejection reasons for operations whose preconditions fail.
///
/// Every constructor validates its input exactly; none of these variants can
/// be produced by rounding, only by genuinely invalid data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("coefficient field mismatch: {0}")]
    FieldMismatch(String),

    #[error("matrix is not skew-symmetric ({0})")]
    NotSkew(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("subspace is not invariant under conjugation")]
    NotConjugationInvariant,

    #[error("not a maximal isotropic subspace: {0}")]
    NotMaximalIsotropic(String),

    #[error("not a linear Poisson structure: {0}")]
    NotPoisson(String),

    #[error("not a generalized complex structure: {0}")]
    NotGeneralizedComplex(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("singular matrix where an invertible one is required: {0}")]
    Singular(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
