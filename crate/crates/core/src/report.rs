//! One verified identity instance: sample point, both sides, errors, verdict.

use num_complex::Complex64;

/// Below this magnitude an identity is judged by absolute error; relative
/// error is meaningless at a zero.
pub const ZERO_SCALE: f64 = 1e-8;

/// Outcome of checking a single identity at a single point.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub point: Complex64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub passed: bool,
    pub terms_used: usize,
}

/// |lhs - rhs| / max(|lhs|, |rhs|, MIN_POSITIVE). Report rows must be
/// recomputable from their own lhs/rhs fields, so this is the one formula.
pub fn relative_error(lhs: Complex64, rhs: Complex64) -> f64 {
    let scale = lhs.norm().max(rhs.norm()).max(f64::MIN_POSITIVE);
    (lhs - rhs).norm() / scale
}

impl IdentityReport {
    /// Builds a report with the standard verdict: relative error against
    /// `tol` when either side is of appreciable size, absolute error when
    /// the identity value is essentially zero.
    pub fn from_sides(
        identity_id: impl Into<String>,
        point: Complex64,
        lhs: Complex64,
        rhs: Complex64,
        tol: f64,
        terms_used: usize,
    ) -> Self {
        let abs_error = (lhs - rhs).norm();
        let rel_error = relative_error(lhs, rhs);
        let scale = lhs.norm().max(rhs.norm());
        let passed = if scale >= ZERO_SCALE {
            rel_error <= tol
        } else {
            abs_error <= tol
        };
        Self {
            identity_id: identity_id.into(),
            point,
            lhs,
            rhs,
            abs_error,
            rel_error,
            passed,
            terms_used,
        }
    }

    /// Same fields but with the verdict supplied by the caller, for checks
    /// whose acceptance rule is not the standard relative/absolute split.
    pub fn with_verdict(
        identity_id: impl Into<String>,
        point: Complex64,
        lhs: Complex64,
        rhs: Complex64,
        passed: bool,
        terms_used: usize,
    ) -> Self {
        Self {
            identity_id: identity_id.into(),
            point,
            lhs,
            rhs,
            abs_error: (lhs - rhs).norm(),
            rel_error: relative_error(lhs, rhs),
            passed,
            terms_used,
        }
    }
}
