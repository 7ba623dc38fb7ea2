//! Zeta invariants: reflection self-consistency, conjugate symmetry, the
//! trivial zeros, the Bernoulli bridge at negative integers, and agreement
//! between zeta_minus_one and zeta.

#![allow(clippy::excessive_precision)]

use muzeta::gamma::{gamma, sin_pi_half};
use muzeta::zeta::{zeta, zeta_minus_one};
use muzeta::{Complex64, EvalConfig};
use num_traits::ToPrimitive;
use proptest::prelude::*;

const LN_PI: f64 = 1.1447298858494001741;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s) for
    /// Re(s) in (-10, -0.5), assembling the right side from the pieces.
    #[test]
    fn reflection_self_consistency(
        re in -10.0f64..-0.5,
        im in -8.0f64..8.0,
    ) {
        let cfg = EvalConfig::default();
        let s = c(re, im);
        let lhs = zeta(s, &cfg).unwrap().value;
        let chi = (s * std::f64::consts::LN_2 + (s - 1.0) * LN_PI).exp()
            * sin_pi_half(s)
            * gamma(1.0 - s).unwrap();
        let rhs = chi * zeta(1.0 - s, &cfg).unwrap().value;
        let scale = lhs.norm().max(rhs.norm());
        if scale > 1e-13 {
            prop_assert!(
                (lhs - rhs).norm() <= 1e-10 * scale,
                "s={s}: lhs={lhs}, rhs={rhs}"
            );
        }
    }

    /// zeta(conj s) = conj(zeta(s)).
    #[test]
    fn conjugate_symmetry(
        re in -8.0f64..8.0,
        im in 0.05f64..8.0,
    ) {
        let cfg = EvalConfig::default();
        let s = c(re, im);
        prop_assume!((s - 1.0).norm() > 0.05);
        let a = zeta(s.conj(), &cfg).unwrap().value;
        let b = zeta(s, &cfg).unwrap().value.conj();
        let scale = a.norm().max(b.norm()).max(1e-30);
        prop_assert!((a - b).norm() <= 1e-13 * scale, "s={s}: {a} vs {b}");
    }

    /// zeta_minus_one(s) + 1 = zeta(s) wherever both paths are defined.
    #[test]
    fn minus_one_consistency(
        re in -8.0f64..12.0,
        im in -8.0f64..8.0,
    ) {
        let cfg = EvalConfig::default();
        let s = c(re, im);
        prop_assume!((s - 1.0).norm() > 0.05);
        let a = zeta_minus_one(s, &cfg).unwrap().value + 1.0;
        let b = zeta(s, &cfg).unwrap().value;
        let scale = a.norm().max(b.norm()).max(1.0);
        prop_assert!((a - b).norm() <= 1e-12 * scale, "s={s}: {a} vs {b}");
    }
}

#[test]
fn trivial_zeros() {
    let cfg = EvalConfig::default();
    for k in 1..=8 {
        let v = zeta(c(-2.0 * k as f64, 0.0), &cfg).unwrap().value;
        assert!(v.norm() < 1e-12, "zeta(-{}) = {v}", 2 * k);
    }
}

#[test]
fn bernoulli_bridge_at_negative_integers() {
    // Float zeta at -q against the exact rational zeta_neg_int(q).
    let cfg = EvalConfig::default();
    for q in 0..=12u32 {
        let exact = muzeta::bernoulli::zeta_neg_int(q).to_f64().unwrap();
        let float = zeta(c(-(q as f64), 0.0), &cfg).unwrap().value;
        assert!(float.im.abs() < 1e-14);
        let err = (float.re - exact).abs();
        let bound = 1e-12 * exact.abs().max(1.0);
        assert!(err <= bound, "q={q}: float {} vs exact {exact}", float.re);
    }
}

#[test]
fn euler_maclaurin_handles_large_height() {
    // The remainder safeguard must keep accuracy at |Im s| = 50.
    let cfg = EvalConfig::default();
    let v = zeta(c(0.5, 30.0), &cfg).unwrap();
    let want = c(-0.1206422875900437, -0.58369121476370629);
    assert!((v.value - want).norm() <= 1e-12 * want.norm());
    // No reference needed at 50i: reflection consistency is the check.
    let s = c(-0.5, 50.0);
    let lhs = zeta(s, &cfg).unwrap().value;
    let chi = (s * std::f64::consts::LN_2 + (s - 1.0) * LN_PI).exp()
        * sin_pi_half(s)
        * gamma(1.0 - s).unwrap();
    let rhs = chi * zeta(1.0 - s, &cfg).unwrap().value;
    assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm().max(rhs.norm()));
}
