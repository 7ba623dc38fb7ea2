//! Evaluation parameters: tolerances, truncation limits, quadrature controls.

use crate::error::{Error, Result};

/// Radius inside which a floating-point input is treated as the nearest
/// integer. Shared default for routines whose signature carries no config.
pub const DEFAULT_INTEGER_SNAP_RADIUS: f64 = 1e-9;

/// Hard-error disk around the pole s = 1, for routines whose signature
/// carries no config.
pub const DEFAULT_POLE_EXCLUSION_RADIUS: f64 = 1e-8;

/// Falling factorials and binomial coefficients use the direct product up to
/// this order; beyond it they route through log-gamma. The product path
/// preserves exact zeros at integer arguments.
pub const PRODUCT_CUTOFF: u32 = 64;

/// Tolerances and truncation limits for every series and quadrature.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalConfig {
    /// Relative tolerance for truncated sums.
    pub rel_tol: f64,
    /// Hard cap on series terms before reporting non-convergence.
    pub max_terms: usize,
    /// Euler-Maclaurin cutoff N (partial-sum length).
    pub em_cutoff_n: u32,
    /// Euler-Maclaurin correction order M (number of Bernoulli terms is M/2).
    pub em_order_m: u32,
    /// Inputs within this distance of an integer snap to the integer path.
    pub integer_snap_radius: f64,
    /// Hard-error disk around the pole s = 1.
    pub pole_exclusion_radius: f64,
    /// Relative tolerance for quadratures.
    pub quad_tol: f64,
    /// Upper truncation point of the Bose integrals is quad_tmax_factor/scale.
    pub quad_tmax_factor: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            max_terms: 10_000,
            em_cutoff_n: 32,
            em_order_m: 16,
            integer_snap_radius: DEFAULT_INTEGER_SNAP_RADIUS,
            pole_exclusion_radius: DEFAULT_POLE_EXCLUSION_RADIUS,
            quad_tol: 1e-11,
            quad_tmax_factor: 40.0,
        }
    }
}

impl EvalConfig {
    /// Checks the structural invariants. Call after building a config by hand.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("rel_tol", self.rel_tol),
            ("integer_snap_radius", self.integer_snap_radius),
            ("pole_exclusion_radius", self.pole_exclusion_radius),
            ("quad_tol", self.quad_tol),
            ("quad_tmax_factor", self.quad_tmax_factor),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!(
                    "{name} must be strictly positive, got {v}"
                )));
            }
        }
        if self.max_terms < 64 {
            return Err(Error::Domain(format!(
                "max_terms must be at least 64, got {}",
                self.max_terms
            )));
        }
        if self.em_order_m < 2 || self.em_order_m % 2 != 0 {
            return Err(Error::Domain(format!(
                "em_order_M must be even and at least 2, got {}",
                self.em_order_m
            )));
        }
        if self.em_cutoff_n < 2 {
            return Err(Error::Domain(format!(
                "em_cutoff_N must be at least 2, got {}",
                self.em_cutoff_n
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        EvalConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_odd_em_order() {
        let cfg = EvalConfig {
            em_order_m: 7,
            ..EvalConfig::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn rejects_tiny_max_terms() {
        let cfg = EvalConfig {
            max_terms: 10,
            ..EvalConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
