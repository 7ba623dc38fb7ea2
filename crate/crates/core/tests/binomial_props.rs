//! Property tests for the binomial kernel: the reflection identity, the
//! successive-coefficient identity in exact arithmetic, alternating-sum
//! vanishing, and consistency between the product and log-gamma paths.

use muzeta::gamma::{binom, binom_exact, falling_factorial};
use muzeta::{BigInt, BigRational, Complex64};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// (-1)^k C(1-s, k) = C(k+s-2, k) for all complex s, k <= 40.
    #[test]
    fn reflection_identity(
        re in -10.0f64..10.0,
        im in -10.0f64..10.0,
        k in 0u32..=40,
    ) {
        let s = c(re, im);
        let lhs = binom(1.0 - s, k) * if k % 2 == 0 { 1.0 } else { -1.0 };
        let rhs = binom(s + (k as f64 - 2.0), k);
        let scale = lhs.norm().max(rhs.norm());
        // Both sides may vanish exactly (snapped integer arguments).
        if scale > 0.0 {
            prop_assert!(
                (lhs - rhs).norm() <= 1e-12 * scale,
                "s={s}, k={k}: lhs={lhs}, rhs={rhs}"
            );
        }
    }

    /// Pascal-type recurrence C(s, k+1)(k+1) = C(s, k)(s - k), which also
    /// crosses the product/log-gamma boundary at k = 64.
    #[test]
    fn pascal_recurrence(
        re in -12.0f64..12.0,
        im in -12.0f64..12.0,
        k in 0u32..=80,
    ) {
        let s = c(re, im);
        let lhs = binom(s, k + 1) * (k as f64 + 1.0);
        let rhs = binom(s, k) * (s - k as f64);
        let scale = lhs.norm().max(rhs.norm());
        if scale > 1e-280 {
            prop_assert!(
                (lhs - rhs).norm() <= 1e-13 * scale,
                "s={s}, k={k}: lhs={lhs}, rhs={rhs}"
            );
        }
    }

    /// The direct product and the log-gamma route agree where both apply.
    #[test]
    fn falling_factorial_paths_agree(
        re in -8.0f64..8.0,
        im0 in 0.02f64..6.0,
        negative in proptest::bool::ANY,
        k in 65u32..=120,
    ) {
        // Keep a safe distance from the real axis so neither path is near
        // a pole of its gamma arguments.
        let im = if negative { -im0 } else { im0 };
        let s = c(re, im);
        let log_route = falling_factorial(s, k);
        let mut product = Complex64::new(1.0, 0.0);
        for j in 0..k {
            product *= s - j as f64;
        }
        let scale = log_route.norm().max(product.norm());
        if scale.is_finite() && scale > 0.0 {
            prop_assert!(
                (log_route - product).norm() <= 1e-11 * scale,
                "s={s}, k={k}: log {log_route}, product {product}"
            );
        }
    }
}

#[test]
fn successive_binomial_identity_exact() {
    // C(1-s, k) = ((2-k-s)/(2-s)) C(2-s, 2-k-s) exactly in rationals, for
    // s = -m, m in 0..=10, over the k range where the right side is defined.
    for m in 0..=10i64 {
        let s = -m;
        for k in 1..=(2 + m) {
            let lhs = binom_exact(1 - s, k as u32);
            let coeff = BigRational::new(BigInt::from(2 - k - s), BigInt::from(2 - s));
            let rhs = coeff * binom_exact(2 - s, (2 - k - s) as u32);
            assert_eq!(lhs, rhs, "m={m}, k={k}");
        }
    }
}

#[test]
fn alternating_binomial_sum_vanishes() {
    // sum_{j=0}^n (-1)^j C(n, j) = 0 exactly for n in 1..=30.
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
        assert!(acc.is_zero(), "n = {n}: sum = {acc}");
    }
}

#[test]
fn partial_alternating_sum_is_minus_one() {
    // sum_{k=1}^{1-s} (-1)^k C(1-s, k) = -1 for s = -m (the j=0 term is +1).
    for m in 0..=20i64 {
        let n = 1 + m;
        let mut acc = BigRational::zero();
        for k in 1..=n {
            let term = binom_exact(n, k as u32);
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        assert_eq!(acc, -BigRational::one(), "m = {m}");
    }
}
