//! Error type shared by every evaluation routine.

use num_complex::Complex64;
use thiserror::Error;

/// Failure modes of the evaluation routines.
///
/// `Pole` and `Domain` indicate the input violates a precondition (the caller
/// asked for a value at or too close to a singular point, or outside the
/// region where the routine is defined). `NonConvergence` means the input was
/// admissible but the truncated sum or quadrature could not certify its
/// tolerance within the configured budget.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{context}: pole at or within exclusion radius of {location}")]
    Pole {
        location: Complex64,
        context: &'static str,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{context}: no convergence after {terms_used} terms (tail estimate {tail_estimate:e})")]
    NonConvergence {
        context: &'static str,
        terms_used: usize,
        tail_estimate: f64,
    },

    #[error("{0}: result overflowed to a non-finite value")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Guard that rejects non-finite results at public operation boundaries.
pub(crate) fn ensure_finite(z: Complex64, context: &'static str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Overflow(context))
    }
}
