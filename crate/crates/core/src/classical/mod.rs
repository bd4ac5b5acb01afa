//! Classical Laguerre and Jacobi polynomials, the contiguous and derivative
//! relations between them, and zero-count predictions.

pub mod identities;
pub mod jacobi;
pub mod laguerre;
pub mod zeros;

pub use identities::{verify_identity, Identity};
pub use jacobi::{jacobi, jacobi_leading, jacobi_ode_residual, jacobi_poly, JacSpec, JacobiPoly};
pub use laguerre::{laguerre, laguerre_ode_residual, LagSpec};
pub use zeros::{
    exact_zero_count, jacobi_endpoint_multiplicity, jacobi_sign_test, jacobi_zero_measure, klein_e,
    laguerre_origin_multiplicity, nodeless_condition, predict_zero_count, random_queries, PredictionRule, ZeroBranch,
    ZeroCountPrediction, ZeroQuery,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassicalError {
    #[error("identity {0} needs degree at least 1")]
    DegreeTooLow(&'static str),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("theorem hypothesis violated: {0}")]
    HypothesisViolated(String),
}
