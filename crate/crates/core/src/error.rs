use thiserror::Error;

use crate::symmetry::SymmetryClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order {order} is not a member of class {class}")]
    InvalidOrder { class: SymmetryClass, order: u32 },

    #[error("q must be finite and non-negative, got {0}")]
    InvalidQ(f64),

    #[error("tolerance must be finite and positive, got {0}")]
    InvalidTolerance(f64),

    #[error(
        "quadrupole strength must be finite and non-negative, got {0}; \
         a negative xi is the same problem reflected by theta -> -theta"
    )]
    NegativeStrength(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "characteristic value did not converge by truncation {truncation}: \
         last iterates {previous} and {last}"
    )]
    NoConvergence { previous: f64, last: f64, truncation: usize },

    #[error("no sign change found for {what} in [{lo}, {hi}]")]
    SearchFailed { what: String, lo: f64, hi: f64 },

    #[error("ODE integration failed at theta = {theta} after {steps} steps")]
    IntegrationFailed { theta: f64, steps: usize },
}

impl Error {
    /// True for errors caused by caller-supplied arguments rather than by
    /// the numerics.
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidOrder { .. }
                | Error::InvalidQ(_)
                | Error::InvalidTolerance(_)
                | Error::NegativeStrength(_)
                | Error::InvalidArgument(_)
        )
    }
}
