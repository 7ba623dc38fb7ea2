//! Truncated-sum bookkeeping: the stopping rule, tail estimates, and
//! limit extrapolation.

use num_complex::Complex64;

use crate::config::EvalConfig;
use crate::error::{Error, Result};

/// Magnitude floor used in relative comparisons so that identically-zero
/// sums do not divide by zero.
pub(crate) const ABS_FLOOR: f64 = 1e-30;

/// Result of a truncated infinite sum or quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEvaluation {
    pub value: Complex64,
    pub terms_used: usize,
    /// Estimated modulus of everything not summed.
    pub tail_estimate: f64,
    /// True when the tail estimate met the requested relative tolerance.
    pub converged: bool,
}

/// Incremental Kahan accumulator with the shared stopping rule: a sum stops
/// after three consecutive terms smaller than the tolerance threshold times
/// max(|partial|, floor). Single-term tests are unsafe for the alternating
/// and oscillatory complex series here. The tail estimate is the sum of
/// those three term moduli plus a geometric extrapolation from the last
/// observed term ratio; since the three terms were themselves just below
/// the threshold, the threshold carries a 1/8 safety factor so the final
/// estimate still clears rel_tol * |value|.
pub(crate) struct TermSum {
    sum: Complex64,
    compensation: Complex64,
    terms: usize,
    small_run: usize,
    small_run_mass: f64,
    prev_mag: f64,
    last_ratio: f64,
    rel_tol: f64,
    max_terms: usize,
    context: &'static str,
}

pub(crate) enum SumState {
    Continue,
    Done,
}

impl TermSum {
    pub fn new(cfg: &EvalConfig, context: &'static str) -> Self {
        Self {
            sum: Complex64::new(0.0, 0.0),
            compensation: Complex64::new(0.0, 0.0),
            terms: 0,
            small_run: 0,
            small_run_mass: 0.0,
            prev_mag: f64::NAN,
            last_ratio: 0.5,
            rel_tol: cfg.rel_tol,
            max_terms: cfg.max_terms,
            context,
        }
    }

    pub fn add(&mut self, term: Complex64) -> Result<SumState> {
        let y = term - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;

        let mag = term.norm();
        self.terms += 1;
        if self.prev_mag.is_finite() && self.prev_mag > 0.0 {
            self.last_ratio = mag / self.prev_mag;
        }
        self.prev_mag = mag;

        let threshold = 0.125 * self.rel_tol * self.sum.norm().max(ABS_FLOOR);
        if mag < threshold {
            self.small_run += 1;
            self.small_run_mass += mag;
            if self.small_run >= 3 {
                return Ok(SumState::Done);
            }
        } else {
            self.small_run = 0;
            self.small_run_mass = 0.0;
        }

        if self.terms >= self.max_terms {
            return Err(Error::NonConvergence {
                context: self.context,
                terms_used: self.terms,
                tail_estimate: self.tail_estimate(),
            });
        }
        Ok(SumState::Continue)
    }

    fn tail_estimate(&self) -> f64 {
        let r = self.last_ratio.clamp(0.0, 0.95);
        self.small_run_mass + self.prev_mag * r / (1.0 - r)
    }

    pub fn finish(self) -> SeriesEvaluation {
        let tail = self.tail_estimate();
        let converged = tail <= self.rel_tol * self.sum.norm().max(ABS_FLOOR);
        SeriesEvaluation {
            value: self.sum,
            terms_used: self.terms,
            tail_estimate: tail,
            converged,
        }
    }
}

/// Neville polynomial extrapolation of (x_i, y_i) to x = 0. Returns the
/// highest-order extrapolant and the modulus of its last correction, which
/// serves as the convergence estimate. Abscissae must be distinct.
pub(crate) fn extrapolate_to_zero(xs: &[f64], ys: &[Complex64]) -> (Complex64, f64) {
    assert_eq!(xs.len(), ys.len());
    assert!(!xs.is_empty());
    let mut table: Vec<Complex64> = ys.to_vec();
    let n = xs.len();
    let mut last_diff = f64::INFINITY;
    for m in 1..n {
        for i in 0..(n - m) {
            // P_{i..i+m}(0) = (x_i * P_{i+1..} - x_{i+m} * P_{i..}) / (x_i - x_{i+m})
            table[i] = (table[i + 1] * xs[i] - table[i] * xs[i + m]) / (xs[i] - xs[i + m]);
        }
        last_diff = (table[0] - table[1]).norm();
    }
    if n == 1 {
        last_diff = f64::INFINITY;
    }
    (table[0], last_diff)
}
