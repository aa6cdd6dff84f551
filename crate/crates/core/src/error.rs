//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A bracketed root search found no sign change.
    #[error("root not bracketed on [{lo:e}, {hi:e}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    RootNotBracketed { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature tolerance not met: error estimate {estimate:e} exceeds budget {budget:e}")]
    ToleranceNotMet { estimate: f64, budget: f64 },

    /// The integrand returned NaN or ±inf.
    #[error("non-finite integrand value near r = {0:e}")]
    NonFiniteIntegrand(f64),

    /// The requested integral does not converge.
    #[error("divergent integral: {0}")]
    Divergent(String),

    /// A regression was requested on data that cannot support it.
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    /// Parameters outside the hypotheses of the statement being checked.
    #[error("out of range: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;
