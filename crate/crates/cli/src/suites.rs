//! Identity-verification suites. Every suite produces a deterministic row
//! list: random sample points come from a fixed-seed generator and all
//! iteration orders are explicit, so repeated runs yield byte-identical
//! reports.

use muzeta::abel_plana::{
    abel_plana_zeta_check, bose_integral, gamma_zeta_integral_check, monomial_unit_integral,
    sin_identity_check,
};
use muzeta::bernoulli::{bernoulli_exact, bernoulli_sum_check, binomial_int, zeta_neg_int};
use muzeta::gamma::{
    alpha, alpha_limit, binom, binom_exact, default_eps_sequence, falling_factorial, gamma,
    sin_pi_half,
};
use muzeta::mu::{
    apostol_form_check, beta_exact, goldbach_sum, lambda, lambda_integer_exact, mu, mu_dirichlet,
    mu_direct, mu_functional_check, mu_lower_limit_zero, p_n_closed, p_n_series,
};
use muzeta::zeta::{residue_check, zeta};
use muzeta::{BigRational, Complex64, EvalConfig, IdentityReport};
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grid::GridSpec;

const LN_PI: f64 = 1.1447298858494001741;

/// A suite aborted at a specific point (non-convergence or a precondition
/// violation that the guards should have caught).
#[derive(Debug)]
pub struct SuiteFailure {
    pub point: Complex64,
    pub error: muzeta::Error,
}

type SuiteResult = Result<Vec<IdentityReport>, SuiteFailure>;

fn at<T>(r: muzeta::Result<T>, point: Complex64) -> Result<T, SuiteFailure> {
    r.map_err(|error| SuiteFailure { point, error })
}

/// Identities whose thresholds are pinned (1e-10..1e-12) are evaluated at
/// full precision regardless of the suite-wide tolerance; --tol only governs
/// the grid identities it is meant for.
fn pinned(cfg: &EvalConfig) -> EvalConfig {
    EvalConfig {
        rel_tol: cfg.rel_tol.min(1e-12),
        ..cfg.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Lambda,
    Beta,
    AbelPlana,
    Binomial,
    Bernoulli,
    Functional,
}

pub fn run_suite(suite: Suite, grid: &GridSpec, cfg: &EvalConfig) -> SuiteResult {
    match suite {
        Suite::Lambda => lambda_suite(grid, cfg),
        Suite::Beta => Ok(beta_suite()),
        Suite::AbelPlana => abel_plana_suite(cfg),
        Suite::Binomial => binomial_suite(cfg),
        Suite::Bernoulli => bernoulli_suite(cfg),
        Suite::Functional => functional_suite(grid, cfg),
        Suite::All => {
            let mut rows = lambda_suite(grid, cfg)?;
            rows.extend(beta_suite());
            rows.extend(abel_plana_suite(cfg)?);
            rows.extend(binomial_suite(cfg)?);
            rows.extend(bernoulli_suite(cfg)?);
            rows.extend(functional_suite(grid, cfg)?);
            Ok(rows)
        }
    }
}

fn rational_report(
    id: &str,
    point: Complex64,
    lhs: &BigRational,
    rhs: &BigRational,
) -> IdentityReport {
    let l = Complex64::new(lhs.to_f64().unwrap_or(f64::NAN), 0.0);
    let r = Complex64::new(rhs.to_f64().unwrap_or(f64::NAN), 0.0);
    IdentityReport::with_verdict(id, point, l, r, lhs == rhs, 0)
}

/// lambda(s) = 1 over the guarded grid, the continuation route against the
/// closed form, and the reflected (Apostol) series form.
fn lambda_suite(grid: &GridSpec, cfg: &EvalConfig) -> SuiteResult {
    let mut rows = Vec::new();
    let one = Complex64::new(1.0, 0.0);
    for (s, excluded) in grid.points() {
        if excluded {
            continue;
        }
        let lam = at(lambda(s, cfg), s)?;
        rows.push(IdentityReport::from_sides(
            "lambda_eq_one",
            s,
            lam.value,
            one,
            cfg.rel_tol,
            lam.terms_used,
        ));
        let bridge = at(mu_dirichlet(s, cfg), s)?;
        let closed = at(mu(s), s)?;
        rows.push(IdentityReport::from_sides(
            "mu_dirichlet_eq_mu",
            s,
            bridge.value,
            closed,
            cfg.rel_tol,
            bridge.terms_used,
        ));
    }
    for s in [
        Complex64::new(2.5, 0.0),
        Complex64::new(3.0, 1.0),
        Complex64::new(0.5, 2.0),
        Complex64::new(-2.5, 0.5),
        Complex64::new(4.0, -2.0),
    ] {
        rows.push(at(apostol_form_check(s, cfg), s)?);
    }
    Ok(rows)
}

/// Exact rational identities at the non-positive integers.
fn beta_suite() -> Vec<IdentityReport> {
    let mut rows = Vec::new();
    for m in 0..=20i64 {
        let m = -m;
        let point = Complex64::new(m as f64, 0.0);
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let closed = BigRational::new(sign.into(), (2 - m).into()) + BigRational::one();
        rows.push(rational_report(
            "beta_closed_form",
            point,
            &beta_exact(m),
            &closed,
        ));
        rows.push(rational_report(
            "lambda_integer_exact_one",
            point,
            &lambda_integer_exact(m),
            &BigRational::one(),
        ));
    }
    for q in 1..=20u32 {
        let point = Complex64::new(q as f64, 0.0);
        rows.push(rational_report(
            "bernoulli_binomial_sum",
            point,
            &bernoulli_sum_check(q),
            &(-BigRational::one()),
        ));
    }
    rows
}

/// Bose integrals against zeta, scale covariance, the sine identity, and
/// the lower-limit-zero quadrature agreement.
fn abel_plana_suite(cfg: &EvalConfig) -> SuiteResult {
    let tight = pinned(cfg);
    let mut rows = Vec::new();
    let mut points = vec![
        Complex64::new(-1.0, 0.0),
        Complex64::new(-2.5, 0.0),
        Complex64::new(-0.5, 2.0),
        Complex64::new(-0.5, -2.0),
        Complex64::new(-4.2, 1.0),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x41424c50);
    for _ in 0..20 {
        let re = rng.gen_range(-6.0..-0.1);
        let im = rng.gen_range(-5.0..5.0);
        points.push(Complex64::new(re, im));
    }
    for s in points {
        rows.push(at(abel_plana_zeta_check(s, cfg), s)?);
    }
    for s in [
        Complex64::new(-1.0, 0.0),
        Complex64::new(-3.0, 0.0),
        Complex64::new(-1.5, 0.0),
        Complex64::new(-2.2, 1.3),
    ] {
        rows.push(at(gamma_zeta_integral_check(s, cfg), s)?);
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    for s in [
        Complex64::new(-0.5, 0.0),
        Complex64::new(-1.25, 1.0),
        Complex64::new(-2.8, -2.2),
        Complex64::new(-4.4, 0.7),
        Complex64::new(-5.5, 2.0),
    ] {
        let a = at(bose_integral(s, two_pi, cfg), s)?;
        let factor = ((s - 1.0) * two_pi.ln()).exp();
        let b = at(bose_integral(s, 1.0, cfg), s)?;
        rows.push(IdentityReport::from_sides(
            "bose_scale_covariance",
            s,
            a.value,
            factor * b.value,
            1e-11,
            a.nodes_used + b.nodes_used,
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x53494e49);
    for _ in 0..50 {
        let re = rng.gen_range(-14.0..14.0);
        let im = rng.gen_range(-14.0..14.0);
        rows.push(sin_identity_check(Complex64::new(re, im)));
    }
    for s in [
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(-2.0, 1.5),
        Complex64::new(0.9, -3.0),
        Complex64::new(-6.5, 0.25),
    ] {
        let q = at(monomial_unit_integral(s, &tight), s)?;
        let cont = at(mu_lower_limit_zero(s), s)?;
        rows.push(IdentityReport::from_sides(
            "unit_monomial_continuation",
            s,
            q.value,
            cont,
            1e-10,
            q.nodes_used,
        ));
    }
    Ok(rows)
}

/// Binomial identities: reflection, the exact successive-coefficient form,
/// alternating sums, the Pascal recurrence, the product/log-gamma overlap,
/// and the alpha limit.
fn binomial_suite(cfg: &EvalConfig) -> SuiteResult {
    let mut rows = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x42494e4f);
    for _ in 0..200 {
        let s = Complex64::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        let k = rng.gen_range(0u32..=40);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let lhs = binom(1.0 - s, k) * sign;
        let rhs = binom(s + (k as f64 - 2.0), k);
        rows.push(IdentityReport::from_sides(
            "binom_reflection",
            s,
            lhs,
            rhs,
            1e-12,
            k as usize,
        ));
    }
    for m in 0..=10i64 {
        let s = -m;
        for k in 1..=(2 + m) {
            let lhs = binom_exact(1 - s, k as u32);
            let coeff = BigRational::new((2 - k - s).into(), (2 - s).into());
            let rhs = coeff * binom_exact(2 - s, (2 - k - s) as u32);
            rows.push(rational_report(
                "binom_successive_exact",
                Complex64::new(s as f64, k as f64),
                &lhs,
                &rhs,
            ));
        }
    }
    for n in 1..=30i64 {
        let mut acc = BigRational::zero();
        for j in 0..=n {
            let term = binom_exact(n, j as u32);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        rows.push(rational_report(
            "binom_alternating_sum",
            Complex64::new(n as f64, 0.0),
            &acc,
            &BigRational::zero(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x50415343);
    for _ in 0..100 {
        let s = Complex64::new(rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
        let k = rng.gen_range(0u32..=70);
        let lhs = binom(s, k + 1) * (k as f64 + 1.0);
        let rhs = binom(s, k) * (s - k as f64);
        rows.push(IdentityReport::from_sides(
            "binom_pascal_recurrence",
            s,
            lhs,
            rhs,
            1e-13,
            k as usize,
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4f564c50);
    for _ in 0..50 {
        let im = rng.gen_range(0.05f64..6.0) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
        let s = Complex64::new(rng.gen_range(-8.0..8.0), im);
        let k = rng.gen_range(65u32..=110);
        let log_route = falling_factorial(s, k);
        let mut product = Complex64::new(1.0, 0.0);
        for j in 0..k {
            product *= s - j as f64;
        }
        rows.push(IdentityReport::from_sides(
            "falling_factorial_paths",
            s,
            log_route,
            product,
            1e-11,
            k as usize,
        ));
    }
    let eps = default_eps_sequence();
    for p in 1..=10u32 {
        let point = Complex64::new(p as f64, 0.0);
        let got = at(alpha_limit(p, &eps, cfg), point)?;
        let closed = Complex64::new(alpha(p).to_f64().unwrap(), 0.0);
        rows.push(IdentityReport::from_sides(
            "alpha_limit",
            point,
            got.value,
            closed,
            1e-8,
            got.terms_used,
        ));
    }
    Ok(rows)
}

/// Exact Bernoulli identities plus the float bridge to zeta.
fn bernoulli_suite(cfg: &EvalConfig) -> SuiteResult {
    let tight = pinned(cfg);
    let mut rows = Vec::new();
    for k in 1..=25u32 {
        let q = 2 * k + 1;
        rows.push(rational_report(
            "bernoulli_odd_vanishes",
            Complex64::new(q as f64, 0.0),
            &bernoulli_exact(q),
            &BigRational::zero(),
        ));
    }
    for q in 2..=50u64 {
        let mut acc = BigRational::zero();
        for k in 0..q {
            acc += BigRational::from_integer(binomial_int(q, k)) * bernoulli_exact(k as u32);
        }
        rows.push(rational_report(
            "bernoulli_recurrence",
            Complex64::new(q as f64, 0.0),
            &acc,
            &BigRational::zero(),
        ));
    }
    for k in 1..=12u32 {
        rows.push(rational_report(
            "zeta_trivial_zero_exact",
            Complex64::new(-(2.0 * k as f64), 0.0),
            &zeta_neg_int(2 * k),
            &BigRational::zero(),
        ));
    }
    for q in 0..=12u32 {
        let s = Complex64::new(-(q as f64), 0.0);
        let exact = Complex64::new(zeta_neg_int(q).to_f64().unwrap(), 0.0);
        let float = at(zeta(s, &tight), s)?;
        rows.push(IdentityReport::from_sides(
            "zeta_bernoulli_bridge",
            s,
            float.value,
            exact,
            1e-12,
            float.terms_used,
        ));
    }
    for k in 1..=12u32 {
        let b = bernoulli_exact(2 * k).to_f64().unwrap();
        let expected_sign = if (k + 1) % 2 == 0 { 1.0 } else { -1.0 };
        rows.push(IdentityReport::with_verdict(
            "bernoulli_even_sign",
            Complex64::new(2.0 * k as f64, 0.0),
            Complex64::new(b.signum(), 0.0),
            Complex64::new(expected_sign, 0.0),
            b.signum() == expected_sign,
            0,
        ));
    }
    Ok(rows)
}

/// The zeta functional equation, conjugate symmetry, the mu functional
/// equation, route consistency, Goldbach, and the pole residues.
fn functional_suite(grid: &GridSpec, cfg: &EvalConfig) -> SuiteResult {
    let tight = pinned(cfg);
    let mut rows = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x46554e43);
    for _ in 0..200 {
        let s = Complex64::new(rng.gen_range(-10.0..-0.5), rng.gen_range(-8.0..8.0));
        let lhs = at(zeta(s, cfg), s)?;
        let chi = (s * std::f64::consts::LN_2 + (s - 1.0) * LN_PI).exp()
            * sin_pi_half(s)
            * at(gamma(1.0 - s), s)?;
        let rhs = chi * at(zeta(1.0 - s, cfg), s)?.value;
        rows.push(IdentityReport::from_sides(
            "zeta_reflection",
            s,
            lhs.value,
            rhs,
            1e-10,
            lhs.terms_used,
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x434f4e4a);
    let mut done = 0;
    while done < 50 {
        let s = Complex64::new(rng.gen_range(-8.0..8.0), rng.gen_range(0.05..8.0));
        if (s - 1.0).norm() <= 0.05 {
            continue;
        }
        let a = at(zeta(s.conj(), cfg), s)?;
        let b = at(zeta(s, cfg), s)?;
        rows.push(IdentityReport::from_sides(
            "zeta_conjugate_symmetry",
            s,
            a.value,
            b.value.conj(),
            1e-13,
            a.terms_used,
        ));
        done += 1;
    }
    for (s, excluded) in grid.points() {
        if excluded {
            continue;
        }
        rows.push(at(mu_functional_check(s), s)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x504e5345);
    for _ in 0..30 {
        let n = rng.gen_range(2u32..=50);
        let s = Complex64::new(rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
        if (s - 1.0).norm() <= 0.1 {
            continue;
        }
        let series = at(p_n_series(n, s, &tight), s)?;
        let closed = at(p_n_closed(n, s), s)?;
        rows.push(IdentityReport::from_sides(
            "p_n_series_eq_closed",
            s,
            series.value,
            closed,
            1e-10,
            series.terms_used,
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x4d554449);
    for _ in 0..50 {
        let s = Complex64::new(rng.gen_range(1.06..6.0), rng.gen_range(-3.0..3.0));
        let direct = at(mu_direct(s, &tight), s)?;
        let closed = at(mu(s), s)?;
        rows.push(IdentityReport::from_sides(
            "mu_direct_closed_form",
            s,
            direct.value,
            closed,
            1e-10,
            direct.terms_used,
        ));
    }
    let origin = Complex64::new(0.0, 0.0);
    let gold = at(goldbach_sum(&tight), origin)?;
    rows.push(IdentityReport::from_sides(
        "goldbach_sum",
        origin,
        gold.value,
        Complex64::new(1.0, 0.0),
        1e-11,
        gold.terms_used,
    ));
    rows.push(at(residue_check(&default_eps_sequence(), cfg), origin)?);
    Ok(rows)
}
