//! Exact arithmetic in Z[A, A^-1] and its localization at `phi = A^2 + A^-2`.

mod phi;
mod poly;

pub use phi::PhiFraction;
pub use poly::LaurentPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("substitution A -> A^0 is not a ring homomorphism of Laurent polynomials")]
    ZeroSubstitution,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("bad polynomial JSON: {0}")]
    Json(String),
}
