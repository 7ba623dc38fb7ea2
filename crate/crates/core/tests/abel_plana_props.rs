//! Abel-Plana invariants: the zeta comparison over random points in the
//! left half-plane, scale covariance of the Bose integral, the sine
//! identity, and agreement of the unit-interval quadrature with the
//! lower-limit-zero continuation.

use muzeta::abel_plana::{
    abel_plana_zeta_check, bose_integral, monomial_unit_integral, sin_identity_check,
};
use muzeta::mu::mu_lower_limit_zero;
use muzeta::{Complex64, EvalConfig};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

proptest! {
    // Quadrature cases are costlier; keep the case count moderate.
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// abel_plana_zeta_check passes at quad_tol = 1e-10 across the strip.
    #[test]
    fn abel_plana_random_points(
        re in -6.0f64..-0.1,
        im in -5.0f64..5.0,
    ) {
        let cfg = EvalConfig {
            quad_tol: 1e-10,
            ..EvalConfig::default()
        };
        let s = c(re, im);
        let report = abel_plana_zeta_check(s, &cfg).unwrap();
        prop_assert!(report.passed, "s={s}: {report:?}");
    }

    /// i^(1-s) + (-i)^(1-s) = 2 sin(pi s/2) over |s| <= 20.
    #[test]
    fn sin_identity_random(
        re in -20.0f64..20.0,
        im in -20.0f64..20.0,
    ) {
        let s = c(re, im);
        prop_assume!(s.norm() <= 20.0);
        let report = sin_identity_check(s);
        let scale = report.lhs.norm().max(report.rhs.norm());
        if scale >= 1.0 {
            prop_assert!(report.rel_error <= 1e-12, "s={s}: {report:?}");
        } else {
            prop_assert!(report.abs_error <= 1e-12, "s={s}: {report:?}");
        }
    }
}

#[test]
fn scale_covariance_on_sample_points() {
    // bose(s, 2pi) = (2pi)^(s-1) bose(s, 1); the substitution u = 2 pi t.
    let cfg = EvalConfig::default();
    let two_pi = 2.0 * std::f64::consts::PI;
    for s in [
        c(-0.5, 0.0),
        c(-1.25, 1.0),
        c(-2.8, -2.2),
        c(-4.4, 0.7),
        c(-5.5, 2.0),
    ] {
        let a = bose_integral(s, two_pi, &cfg).unwrap().value;
        let b = bose_integral(s, 1.0, &cfg).unwrap().value;
        let factor = ((s - 1.0) * two_pi.ln()).exp();
        let scale = a.norm().max((factor * b).norm());
        assert!(
            (a - factor * b).norm() <= 1e-11 * scale,
            "s={s}: {a} vs {}",
            factor * b
        );
    }
}

#[test]
fn lower_limit_zero_agrees_with_quadrature() {
    // For Re(s) < 1 the integral converges classically; the continuation
    // value 1/(1-s) must match direct tanh-sinh quadrature.
    let cfg = EvalConfig::default();
    for s in [
        c(0.5, 0.0),
        c(0.0, 0.0),
        c(-2.0, 1.5),
        c(0.9, -3.0),
        c(-6.5, 0.25),
    ] {
        let quad = monomial_unit_integral(s, &cfg).unwrap();
        let cont = mu_lower_limit_zero(s).unwrap();
        assert!(
            (quad.value - cont).norm() <= 1e-10 * cont.norm(),
            "s={s}: quadrature {} vs continuation {cont}",
            quad.value
        );
    }
}
