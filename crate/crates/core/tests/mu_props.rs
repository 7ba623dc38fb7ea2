//! Invariants of the mu machinery: P_n series/closed-form equivalence,
//! telescoping, lambda = 1 on both domains, the beta closed form, the
//! continuation consistency of all three mu routes, and the vanishing of
//! generic-path terms beyond the exact split.

use muzeta::gamma::binom;
use muzeta::mu::{
    beta_exact, lambda, lambda_integer_exact, mu, mu_dirichlet, mu_direct, mu_functional_check,
    p_n_closed, p_n_series,
};
use muzeta::zeta::zeta_minus_one;
use muzeta::{BigInt, BigRational, Complex64, EvalConfig};
use num_traits::One;
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// p_n_series and p_n_closed agree on |Re s| <= 8, |Im s| <= 8 away
    /// from the pole.
    #[test]
    fn p_n_routes_agree(
        n in 2u32..=50,
        re in -8.0f64..8.0,
        im in -8.0f64..8.0,
    ) {
        let cfg = EvalConfig::default();
        let s = c(re, im);
        prop_assume!((s - 1.0).norm() > 0.1);
        let series = p_n_series(n, s, &cfg).unwrap();
        let closed = p_n_closed(n, s).unwrap();
        let scale = closed.norm().max(1e-30);
        prop_assert!(
            (series.value - closed).norm() <= 1e-10 * scale,
            "n={n}, s={s}: series {} closed {closed}",
            series.value
        );
    }

    /// Partial sums telescope: sum_{n=2}^N P_n = (N^(1-s) - 1)/(1-s).
    #[test]
    fn telescoping(
        n_max in 2u32..=80,
        re in -6.0f64..6.0,
        im in -6.0f64..6.0,
    ) {
        let s = c(re, im);
        prop_assume!((s - 1.0).norm() > 0.1);
        let mut sum = Complex64::new(0.0, 0.0);
        for n in 2..=n_max {
            sum += p_n_closed(n, s).unwrap();
        }
        let one_minus_s = 1.0 - s;
        let closed = ((one_minus_s * (n_max as f64).ln()).exp() - 1.0) / one_minus_s;
        let scale = closed.norm().max(1.0);
        prop_assert!((sum - closed).norm() <= 1e-12 * scale, "N={n_max}, s={s}");
    }

    /// mu(s) + mu(2-s) = 0 to absolute 1e-14.
    #[test]
    fn functional_equation(
        re in -10.0f64..10.0,
        im in -10.0f64..10.0,
    ) {
        let s = c(re, im);
        prop_assume!((s - 1.0).norm() > 0.05);
        let report = mu_functional_check(s).unwrap();
        prop_assert!(report.passed, "s={s}: {report:?}");
    }

    /// mu_direct reproduces 1/(s-1) in the absolute-convergence region.
    #[test]
    fn direct_route_matches_closed_form(
        re in 1.06f64..6.0,
        im in -3.0f64..3.0,
    ) {
        let cfg = EvalConfig::default();
        let s = c(re, im);
        let v = mu_direct(s, &cfg).unwrap();
        let want = mu(s).unwrap();
        prop_assert!(
            (v.value - want).norm() <= 1e-10 * want.norm(),
            "s={s}: {} vs {want}",
            v.value
        );
    }
}

#[test]
fn lambda_is_one_on_a_deterministic_grid() {
    let cfg = EvalConfig::default();
    // Sparse version of the acceptance grid, skipping guard disks.
    for i in 0..=10 {
        for j in 0..=10 {
            let s = c(-5.0 + i as f64, -5.0 + j as f64);
            if (s - 1.0).norm() < 0.05 {
                continue;
            }
            if s.im == 0.0 && s.re <= 0.0 {
                // Exact integer path, asserted separately.
                continue;
            }
            let v = lambda(s, &cfg).unwrap();
            assert!(
                (v.value - 1.0).norm() < 1e-9,
                "lambda({s}) = {} after {} terms",
                v.value,
                v.terms_used
            );
        }
    }
}

#[test]
fn lambda_integer_path_is_exactly_one() {
    for m in 0..=20 {
        assert_eq!(lambda_integer_exact(-m), BigRational::one(), "m = -{m}");
    }
}

#[test]
fn beta_closed_form_exact() {
    for m in 0..=20i64 {
        let m = -m;
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let expect =
            BigRational::new(BigInt::from(sign), BigInt::from(2 - m)) + BigRational::one();
        assert_eq!(beta_exact(m), expect, "m = {m}");
    }
}

#[test]
fn continuation_routes_agree() {
    let cfg = EvalConfig::default();
    let points = [
        c(2.5, 0.0),
        c(-3.5, 0.0),
        c(0.5, 2.0),
        c(-4.5, -4.5),
        c(3.0, 3.0),
        c(-0.5, 0.5),
    ];
    for s in points {
        let bridge = mu_dirichlet(s, &cfg).unwrap().value;
        let closed = mu(s).unwrap();
        assert!(
            (bridge - closed).norm() <= 1e-9 * closed.norm(),
            "s={s}: bridge {bridge}, closed {closed}"
        );
    }
}

#[test]
fn generic_terms_vanish_beyond_the_exact_split() {
    // For s = -m the binomial C(1-s, k) is exactly zero for k > 1+m, and
    // the zeta factor there is finite, so every generic-path term with
    // k > 2-s contributes exactly 0.
    let cfg = EvalConfig::default();
    for m in 0..=10i64 {
        let s = c(-m as f64, 0.0);
        for k in (3 + m as u32)..(3 + m as u32 + 20) {
            let coeff = binom(1.0 - s, k);
            assert_eq!(coeff, Complex64::new(0.0, 0.0), "m={m}, k={k}");
            // zeta(k+s-1) is finite on this range (argument >= 2).
            let arg = s + (k as f64 - 1.0);
            assert!(zeta_minus_one(arg, &cfg).unwrap().value.norm().is_finite());
        }
    }
}
