//! Riemann zeta on the complex plane minus s = 1.
//!
//! Euler-Maclaurin summation carries the half-plane Re(s) >= 0.5; the
//! functional equation
//!     zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
//! reflects everything to the left of the critical line. zeta_minus_one
//! evaluates zeta(s) - 1 without cancellation by omitting the n = 1 term
//! from the partial sum instead of subtracting 1 afterwards.

use num_complex::Complex64;

use crate::bernoulli::bernoulli_f64;
use crate::config::EvalConfig;
use crate::error::{ensure_finite, Error, Result};
use crate::gamma::{ln_sin_pi_half, log_gamma, sin_pi_half};
use crate::report::IdentityReport;
use crate::series::{extrapolate_to_zero, SeriesEvaluation, ABS_FLOOR};

const LN_PI: f64 = 1.1447298858494001741;
const LN_2: f64 = std::f64::consts::LN_2;

/// Both residue limits must land within this distance of 1.
pub const RESIDUE_TOL: f64 = 1e-8;

/// Euler-Maclaurin evaluation, valid on Re(s) >= 0.5 and, with the default
/// correction order, in a neighbourhood of the origin (needed because the
/// reflection formula pairs a sin zero with the zeta pole at s = 0).
///
/// With `skip_leading_term` the n = 1 term is left out of the partial sum,
/// which turns the result into zeta(s) - 1 with no cancellation.
fn euler_maclaurin(s: Complex64, cfg: &EvalConfig, skip_leading_term: bool) -> Result<SeriesEvaluation> {
    // The default (N, M) keeps the remainder below ~1e-14 only up to
    // |Im s| ~ 30; scale N with the height so the bound holds for the
    // advertised range.
    let n = (cfg.em_cutoff_n as usize).max(s.im.abs().ceil() as usize + 8);
    let order = (cfg.em_order_m / 2) as usize;

    let start = if skip_leading_term { 2 } else { 1 };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    for k in start..n {
        let term = (-s * (k as f64).ln()).exp();
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow_minus_s = (-s * ln_n).exp(); // N^{-s}
    // Integral completion and the half-sample correction.
    sum += n_pow_minus_s * nf / (s - 1.0); // N^{1-s}/(s-1)
    sum += n_pow_minus_s * 0.5;

    // Bernoulli corrections: B_{2k}/(2k)! * (s)(s+1)...(s+2k-2) * N^{1-s-2k}.
    let mut rising = s; // product over j = 0 .. 2k-2
    let mut n_pow = n_pow_minus_s / nf; // N^{-s-2k+1}, starting at k = 1
    let inv_n2 = 1.0 / (nf * nf);
    let mut coeff_fact = 2.0; // (2k)!
    for k in 1..=order {
        let c = bernoulli_f64(2 * k as u32) / coeff_fact;
        sum += rising * c * n_pow;
        // advance to k+1
        let two_k = 2.0 * k as f64;
        rising *= (s + (two_k - 1.0)) * (s + two_k);
        n_pow *= inv_n2;
        coeff_fact *= (two_k + 1.0) * (two_k + 2.0);
    }

    // Standard remainder bound: |next term| * |s + M + 1| / (sigma + M + 1).
    let m = 2.0 * order as f64;
    let next_coeff = bernoulli_f64((2 * order + 2) as u32).abs() / coeff_fact;
    let tail = next_coeff
        * rising.norm()
        * n_pow.norm()
        * (s + (m + 1.0)).norm()
        / (s.re + m + 1.0);

    let value = ensure_finite(sum, "zeta euler-maclaurin")?;
    let converged = tail <= cfg.rel_tol * value.norm().max(ABS_FLOOR);
    if !converged {
        return Err(Error::NonConvergence {
            context: "zeta euler-maclaurin remainder",
            terms_used: n + order,
            tail_estimate: tail,
        });
    }
    Ok(SeriesEvaluation {
        value,
        terms_used: n - start + order,
        tail_estimate: tail,
        converged,
    })
}

fn pole_guard(s: Complex64, cfg: &EvalConfig, context: &'static str) -> Result<()> {
    if (s - 1.0).norm() <= cfg.pole_exclusion_radius {
        return Err(Error::Pole {
            location: s,
            context,
        });
    }
    Ok(())
}

/// The reflection factor chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s).
fn reflection_factor(s: Complex64) -> Result<Complex64> {
    let lg = log_gamma(1.0 - s)?;
    let exponent = s * LN_2 + (s - 1.0) * LN_PI + lg;
    if s.im.abs() <= 40.0 {
        // Keep the reduced sine as an explicit factor so the trivial zeros
        // come out exact.
        Ok(sin_pi_half(s) * exponent.exp())
    } else {
        Ok((exponent + ln_sin_pi_half(s)).exp())
    }
}

/// zeta(s) to the configured relative tolerance.
pub fn zeta(s: Complex64, cfg: &EvalConfig) -> Result<SeriesEvaluation> {
    pole_guard(s, cfg, "zeta")?;
    if s.re >= 0.5 {
        return euler_maclaurin(s, cfg, false);
    }
    // Reflection would pair sin(pi s/2) -> 0 with zeta(1-s) -> pole at the
    // origin; Euler-Maclaurin remains valid there, so use it directly.
    if s.norm() <= 64.0 * cfg.pole_exclusion_radius {
        return euler_maclaurin(s, cfg, false);
    }
    let reflected = euler_maclaurin(1.0 - s, cfg, false)?;
    let chi = reflection_factor(s)?;
    let value = ensure_finite(chi * reflected.value, "zeta reflection")?;
    Ok(SeriesEvaluation {
        value,
        terms_used: reflected.terms_used,
        tail_estimate: reflected.tail_estimate * chi.norm(),
        converged: reflected.converged,
    })
}

/// zeta(s) - 1 without catastrophic cancellation.
///
/// On Re(s) >= 0.5 the n = 1 term is omitted from the Euler-Maclaurin
/// partial sum, which is exactly the direct sum over n >= 2 with its tail
/// completed rigorously; for Re(s) >= 2 the leading 2^(-s) dominates and the
/// result keeps full relative accuracy however small it is. To the left of
/// the critical line zeta(s) - 1 is of order one and plain subtraction is
/// harmless.
pub fn zeta_minus_one(s: Complex64, cfg: &EvalConfig) -> Result<SeriesEvaluation> {
    pole_guard(s, cfg, "zeta_minus_one")?;
    if s.re >= 0.5 {
        return euler_maclaurin(s, cfg, true);
    }
    let mut eval = zeta(s, cfg)?;
    eval.value -= 1.0;
    Ok(eval)
}

/// Verifies the residue limits eps*zeta(1+eps) -> 1 and eps*Gamma(eps) -> 1
/// by Richardson extrapolation along the supplied sequence. The two limits
/// certify that zeta and Gamma approach their poles at the same first-order
/// rate, which is what collapses the binomial/zeta product in alpha(p).
pub fn residue_check(eps_sequence: &[f64], cfg: &EvalConfig) -> Result<IdentityReport> {
    if eps_sequence.len() < 2 {
        return Err(Error::Domain(
            "residue_check needs at least two epsilon samples".into(),
        ));
    }
    for w in eps_sequence.windows(2) {
        if !(w[1] < w[0]) {
            return Err(Error::Domain(
                "epsilon sequence must be strictly decreasing".into(),
            ));
        }
    }
    let floor = cfg.pole_exclusion_radius.max(cfg.integer_snap_radius);
    for &e in eps_sequence {
        if !(e > 0.0 && e <= 0.1) {
            return Err(Error::Domain(format!(
                "epsilon samples must lie in (0, 0.1], got {e}"
            )));
        }
        if e <= floor {
            return Err(Error::Domain(format!(
                "epsilon {e} is inside the pole exclusion radius"
            )));
        }
    }

    let mut zeta_samples = Vec::with_capacity(eps_sequence.len());
    let mut gamma_samples = Vec::with_capacity(eps_sequence.len());
    let mut terms = 0usize;
    for &e in eps_sequence {
        let z = zeta(Complex64::new(1.0 + e, 0.0), cfg)?;
        terms = terms.max(z.terms_used);
        zeta_samples.push(z.value * e);
        let g = log_gamma(Complex64::new(e, 0.0))?.exp();
        gamma_samples.push(g * e);
    }
    let (zeta_limit, zdiff) = extrapolate_to_zero(eps_sequence, &zeta_samples);
    let (gamma_limit, gdiff) = extrapolate_to_zero(eps_sequence, &gamma_samples);
    if zdiff > RESIDUE_TOL || gdiff > RESIDUE_TOL {
        return Err(Error::NonConvergence {
            context: "residue_check extrapolation",
            terms_used: eps_sequence.len(),
            tail_estimate: zdiff.max(gdiff),
        });
    }
    let one = Complex64::new(1.0, 0.0);
    let passed =
        (zeta_limit - one).norm() <= RESIDUE_TOL && (gamma_limit - one).norm() <= RESIDUE_TOL;
    let point = Complex64::new(*eps_sequence.last().unwrap(), 0.0);
    Ok(IdentityReport::with_verdict(
        "pole_residues_unity",
        point,
        zeta_limit,
        gamma_limit,
        passed,
        terms,
    ))
}
