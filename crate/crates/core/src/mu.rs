//! The monomial-integral function mu and its series machinery: the interval
//! integrals P_n, the binomial/zeta series lambda(s), the exact integer-point
//! split beta + alpha, the continuation mu(s) = 1/(s-1), and its functional
//! equation.
//!
//! lambda is evaluated on two complementary domains. Away from the
//! non-positive integers it is the series
//!     lambda(s) = sum_{k>=1} (-1)^k C(1-s, k) (zeta(k+s-1) - 1) = 1,
//! and at s = m <= 0 every term past k = 1-m vanishes identically while the
//! k = 2-m term becomes the 0 * infinity limit alpha(2-m); the exact rational
//! path evaluates beta(m) + (-1)^(-m) alpha(2-m) = 1 with no floating point.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::bernoulli::{binomial_int, zeta_neg_int};
use crate::config::{EvalConfig, DEFAULT_POLE_EXCLUSION_RADIUS};
use crate::error::{ensure_finite, Error, Result};
use crate::gamma::{alpha, binom, snap_integer};
use crate::report::IdentityReport;
use crate::series::{SeriesEvaluation, SumState, TermSum, ABS_FLOOR};
use crate::zeta::zeta_minus_one;

/// mu_direct requires Re(s) > 1 + this margin; the defining series is only
/// absolutely convergent for Re(s) > 1 and no resummation is attempted on
/// the boundary.
pub const MU_DIRECT_MARGIN: f64 = 0.05;

/// |mu(s) + mu(2-s)| must cancel to this absolute level.
pub const MU_FUNCTIONAL_ABS_TOL: f64 = 1e-14;

/// Between the snap radius and this distance from a non-positive integer the
/// generic lambda series pairs a large zeta value with a small binomial
/// coefficient; results are flagged.
pub const NEAR_SINGULAR_BAND: f64 = 1e-3;

/// Which of the two lambda domains a point falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaMode {
    GenericSeries,
    IntegerExact,
}

/// Routing decision for lambda(s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaRouting {
    pub mode: LambdaMode,
    /// Present exactly when mode is IntegerExact.
    pub snapped_integer: Option<i64>,
    /// Generic path inside the guard annulus around a non-positive integer:
    /// zeta(k+s-1) is large at k = 2-m while the binomial is small, so the
    /// term cancellation is near-singular.
    pub near_singular_cancellation: bool,
}

/// Decides between the generic series and the exact integer path.
pub fn route_lambda(s: Complex64, cfg: &EvalConfig) -> LambdaRouting {
    if let Some(m) = snap_integer(s, cfg.integer_snap_radius) {
        if m <= 0 {
            return LambdaRouting {
                mode: LambdaMode::IntegerExact,
                snapped_integer: Some(m),
                near_singular_cancellation: false,
            };
        }
    }
    let near = {
        let m = s.re.round();
        m <= 0.0 && Complex64::new(s.re - m, s.im).norm() < NEAR_SINGULAR_BAND
    };
    LambdaRouting {
        mode: LambdaMode::GenericSeries,
        snapped_integer: None,
        near_singular_cancellation: near,
    }
}

fn pole_guard(s: Complex64, radius: f64, context: &'static str) -> Result<()> {
    if (s - 1.0).norm() <= radius {
        return Err(Error::Pole {
            location: s,
            context,
        });
    }
    Ok(())
}

/// exp(w) - 1 with full relative accuracy for small w.
fn expm1_complex(w: Complex64) -> Complex64 {
    let em = w.re.exp_m1();
    let half_sin = (w.im / 2.0).sin();
    Complex64::new(
        em * w.im.cos() - 2.0 * half_sin * half_sin,
        (em + 1.0) * w.im.sin(),
    )
}

/// P_n(s) = integral of x^(-s) over [n-1, n] = (n^(1-s) - (n-1)^(1-s))/(1-s).
///
/// Evaluated as (n-1)^(1-s) expm1((1-s) ln(n/(n-1))) / (1-s) so accuracy is
/// uniform as s approaches the excluded pole.
pub fn p_n_closed(n: u32, s: Complex64) -> Result<Complex64> {
    assert!(n >= 2, "P_n is defined for n >= 2");
    pole_guard(s, DEFAULT_POLE_EXCLUSION_RADIUS, "p_n_closed")?;
    let one_minus_s = 1.0 - s;
    let nm1 = (n - 1) as f64;
    let log_ratio = (1.0 / nm1).ln_1p(); // ln(n/(n-1))
    let base = (one_minus_s * nm1.ln()).exp(); // (n-1)^(1-s)
    ensure_finite(
        base * expm1_complex(one_minus_s * log_ratio) / one_minus_s,
        "p_n_closed",
    )
}

/// P_n(s) by the binomial series (1/(s-1)) sum_{k>=1} (-1)^k C(1-s,k) n^(1-s-k).
///
/// The successive-term ratio is (k+s-1)/((k+1) n) -> 1/n, so the series
/// converges absolutely for every s; the stopping rule handles truncation.
pub fn p_n_series(n: u32, s: Complex64, cfg: &EvalConfig) -> Result<SeriesEvaluation> {
    assert!(n >= 2, "P_n is defined for n >= 2");
    pole_guard(s, cfg.pole_exclusion_radius, "p_n_series")?;
    let nf = n as f64;
    let mut acc = TermSum::new(cfg, "p_n_series");
    // t_k = (-1)^k C(1-s, k) n^{-k}; t_1 = (s-1)/n.
    let mut term = (s - 1.0) / nf;
    let mut k = 1.0;
    loop {
        match acc.add(term)? {
            SumState::Done => break,
            SumState::Continue => {
                term *= (k + s - 1.0) / ((k + 1.0) * nf);
                k += 1.0;
            }
        }
    }
    let inner = acc.finish();
    let scale = ((1.0 - s) * nf.ln()).exp() / (s - 1.0); // n^{1-s}/(s-1)
    let value = ensure_finite(inner.value * scale, "p_n_series")?;
    Ok(SeriesEvaluation {
        value,
        terms_used: inner.terms_used,
        tail_estimate: inner.tail_estimate * scale.norm(),
        converged: inner.converged,
    })
}

/// Empirical successive-term ratio |t_{k+1}/t_k| of the P_n series at a
/// probe index, with both terms computed independently through the binomial
/// routine. Tends to 1/n.
pub fn p_n_term_ratio(n: u32, s: Complex64, k_probe: u32) -> f64 {
    let nf = n as f64;
    let a = binom(1.0 - s, k_probe);
    let b = binom(1.0 - s, k_probe + 1);
    (b / a).norm() / nf
}

/// Direct evaluation of mu(s) = sum_{n>=2} P_n(s) in the absolute-convergence
/// region Re(s) > 1. The truncation point comes from the integral tail bound
/// int_N^inf x^(-Re s) dx; the remainder beyond N is itself the convergent
/// integral N^(1-s)/(s-1) and is added in closed form, so the reported tail
/// estimate only carries accumulated round-off.
pub fn mu_direct(s: Complex64, cfg: &EvalConfig) -> Result<SeriesEvaluation> {
    let sigma = s.re;
    if sigma <= 1.0 + MU_DIRECT_MARGIN {
        return Err(Error::Domain(format!(
            "mu_direct requires Re(s) > {}, got {}",
            1.0 + MU_DIRECT_MARGIN,
            sigma
        )));
    }
    // N from N^(1-sigma)/(sigma-1) <= rel_tol * |1/(s-1)|, capped by the
    // term budget.
    let target = cfg.rel_tol / (s - 1.0).norm();
    let n_bound = (-(target * (sigma - 1.0)).ln() / (sigma - 1.0)).exp();
    let n_max = if n_bound.is_finite() && n_bound < cfg.max_terms as f64 {
        (n_bound.ceil() as usize).max(8)
    } else {
        cfg.max_terms
    };

    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    for n in 2..=n_max {
        let term = p_n_closed(n as u32, s)?;
        abs_sum += term.norm();
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    let nf = n_max as f64;
    let remainder = ((1.0 - s) * nf.ln()).exp() / (s - 1.0); // int_N^inf x^-s dx
    let value = ensure_finite(sum + remainder, "mu_direct")?;
    let tail = 2.0 * f64::EPSILON * (abs_sum + remainder.norm());
    Ok(SeriesEvaluation {
        value,
        terms_used: n_max - 1,
        tail_estimate: tail,
        converged: tail <= cfg.rel_tol * value.norm().max(ABS_FLOOR),
    })
}

/// One generic-path lambda term: (-1)^k C(1-s,k) (zeta(k+s-1) - 1), with the
/// coefficient supplied by the incremental recurrence.
fn lambda_term(coeff: Complex64, s: Complex64, k: f64, cfg: &EvalConfig) -> Result<Complex64> {
    if coeff.norm() == 0.0 {
        // Exactly-vanished binomial: the term is 0 regardless of the zeta
        // factor, which may sit on its pole at k = 2 - s.
        return Ok(Complex64::new(0.0, 0.0));
    }
    let z = zeta_minus_one(s + (k - 1.0), cfg)?;
    Ok(coeff * z.value)
}

/// lambda(s): 1 on both domains.
///
/// Generic-path convergence is checked empirically per point; the ratio of
/// successive coefficients tends to 1 while zeta(k+s-1)-1 decays like 2^-k.
pub fn lambda(s: Complex64, cfg: &EvalConfig) -> Result<SeriesEvaluation> {
    pole_guard(s, cfg.pole_exclusion_radius, "lambda")?;
    let routing = route_lambda(s, cfg);
    if let Some(m) = routing.snapped_integer {
        let exact = lambda_integer_exact(m);
        let value = Complex64::new(exact.to_f64().unwrap(), 0.0);
        let terms = (2 - m) as usize;
        return Ok(SeriesEvaluation {
            value,
            terms_used: terms,
            tail_estimate: 0.0,
            converged: true,
        });
    }
    let mut acc = TermSum::new(cfg, "lambda");
    // coeff_k = (-1)^k C(1-s, k); coeff_1 = s - 1.
    let mut coeff = s - 1.0;
    let mut k = 1.0;
    loop {
        let term = lambda_term(coeff, s, k, cfg)?;
        match acc.add(term)? {
            SumState::Done => break,
            SumState::Continue => {
                coeff *= (k + s - 1.0) / (k + 1.0);
                k += 1.0;
            }
        }
    }
    Ok(acc.finish())
}

/// Exact rational lambda at a non-positive integer:
/// beta(m) + (-1)^(-m) alpha(2-m). Always exactly 1.
pub fn lambda_integer_exact(m: i64) -> BigRational {
    assert!(m <= 0, "integer path requires m <= 0");
    let sign = if m % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    beta_exact(m) + sign * alpha((2 - m) as u32)
}

/// beta(m) = sum_{k=1}^{1-m} (-1)^k C(1-m, k) (zeta(k+m-1) - 1) in exact
/// rational arithmetic; every zeta argument on this range is a non-positive
/// integer. Equals (-1)^(-m)/(2-m) + 1.
pub fn beta_exact(m: i64) -> BigRational {
    assert!(m <= 0, "beta_exact requires m <= 0");
    let q = (1 - m) as u64;
    let mut acc = BigRational::zero();
    for k in 1..=q {
        let zeta_arg = 1 - (k as i64) - m; // = -(k+m-1) >= 0
        let z = zeta_neg_int(zeta_arg as u32) - BigRational::one();
        let c = BigRational::from_integer(binomial_int(q, k));
        let term = c * z;
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The analytic continuation itself: mu(s) = 1/(s-1) on C minus {1}.
pub fn mu(s: Complex64) -> Result<Complex64> {
    pole_guard(s, DEFAULT_POLE_EXCLUSION_RADIUS, "mu")?;
    Ok(1.0 / (s - 1.0))
}

/// Checks the functional equation mu(s) + mu(2-s) = 0. The closed forms
/// cancel exactly up to rounding, so the verdict is absolute at 1e-14.
pub fn mu_functional_check(s: Complex64) -> Result<IdentityReport> {
    let lhs = mu(s)?;
    let other = mu(2.0 - s)?;
    let passed = (lhs + other).norm() <= MU_FUNCTIONAL_ABS_TOL;
    Ok(IdentityReport::with_verdict(
        "mu_functional_equation",
        s,
        lhs,
        -other,
        passed,
        0,
    ))
}

/// The continuation route through the zeta bridge: mu(s) = lambda(s)/(s-1),
/// valid on all of C minus {1}.
pub fn mu_dirichlet(s: Complex64, cfg: &EvalConfig) -> Result<SeriesEvaluation> {
    let lam = lambda(s, cfg)?;
    let value = ensure_finite(lam.value / (s - 1.0), "mu_dirichlet")?;
    Ok(SeriesEvaluation {
        value,
        terms_used: lam.terms_used,
        tail_estimate: lam.tail_estimate / (s - 1.0).norm(),
        converged: lam.converged,
    })
}

/// sum_{k=2}^K (zeta(k) - 1) = 1, truncated once the geometric tail bound
/// 2^(-(K-1)) * 2 drops below the tolerance.
pub fn goldbach_sum(cfg: &EvalConfig) -> Result<SeriesEvaluation> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut terms = 0usize;
    let mut k = 2u32;
    let tail_bound = loop {
        let z = zeta_minus_one(Complex64::new(k as f64, 0.0), cfg)?;
        sum += z.value;
        terms += z.terms_used;
        let bound = 2.0 * f64::powi(2.0, -(k as i32 - 1));
        if bound < cfg.rel_tol * sum.norm().max(ABS_FLOOR) {
            break bound;
        }
        if k as usize >= cfg.max_terms {
            return Err(Error::NonConvergence {
                context: "goldbach_sum",
                terms_used: terms,
                tail_estimate: bound,
            });
        }
        k += 1;
    };
    Ok(SeriesEvaluation {
        value: sum,
        terms_used: terms,
        tail_estimate: tail_bound,
        converged: true,
    })
}

/// Evaluates sum_{k>=1} C(k+s-2, k)(zeta(k+s-1) - 1) and checks it against
/// lambda(s) term by term (each coefficient computed independently, related
/// through the reflection (-1)^k C(1-s,k) = C(k+s-2,k)) and against 1
/// overall.
pub fn apostol_form_check(s: Complex64, cfg: &EvalConfig) -> Result<IdentityReport> {
    pole_guard(s, cfg.pole_exclusion_radius, "apostol_form_check")?;
    if let Some(m) = snap_integer(s, cfg.integer_snap_radius) {
        if m <= 0 {
            return Err(Error::Domain(format!(
                "apostol form is not defined at non-positive integer s = {m}"
            )));
        }
    }
    const TERMWISE_TOL: f64 = 1e-12;

    let mut acc = TermSum::new(cfg, "apostol_form_check");
    let mut lambda_coeff = s - 1.0;
    let mut k = 1.0;
    let mut termwise_ok = true;
    let mut lambda_sum = Complex64::new(0.0, 0.0);
    loop {
        let lam_term = lambda_term(lambda_coeff, s, k, cfg)?;
        lambda_sum += lam_term;
        // Independent coefficient for the reflected form.
        let apostol_term = if lam_term.norm() == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            binom(s + (k - 2.0), k as u32) * zeta_minus_one(s + (k - 1.0), cfg)?.value
        };
        let scale = lam_term.norm().max(apostol_term.norm());
        if scale > ABS_FLOOR && (lam_term - apostol_term).norm() > TERMWISE_TOL * scale {
            termwise_ok = false;
        }
        match acc.add(apostol_term)? {
            SumState::Done => break,
            SumState::Continue => {
                lambda_coeff *= (k + s - 1.0) / (k + 1.0);
                k += 1.0;
            }
        }
    }
    let eval = acc.finish();
    let one = Complex64::new(1.0, 0.0);
    let passed = termwise_ok
        && (eval.value - lambda_sum).norm() <= cfg.rel_tol * lambda_sum.norm().max(1.0)
        && (eval.value - one).norm() <= cfg.rel_tol;
    Ok(IdentityReport::with_verdict(
        "apostol_reflected_form",
        s,
        eval.value,
        lambda_sum,
        passed,
        eval.terms_used,
    ))
}

/// Continuation value of the lower-limit-zero integral:
/// int_0^1 x^(-s) dx = mu(2-s) = 1/(1-s). For Re(s) < 1 the integral
/// converges classically and direct quadrature must agree.
pub fn mu_lower_limit_zero(s: Complex64) -> Result<Complex64> {
    pole_guard(s, DEFAULT_POLE_EXCLUSION_RADIUS, "mu_lower_limit_zero")?;
    Ok(1.0 / (1.0 - s))
}
