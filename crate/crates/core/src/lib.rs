//! Special functions around the analytic continuation of the monomial
//! integral mu(s) = int_1^inf x^(-s) dx.
//!
//! The integral converges to 1/(s-1) for Re(s) > 1 and extends to all of
//! C minus {1} through a Dirichlet-series bridge to the Riemann zeta
//! function. This crate provides the pieces and verifies every identity
//! along the way:
//!
//! - [`gamma`]: complex log-gamma, falling factorials, generalized binomial
//!   coefficients, and the binomial/zeta limit alpha(p) = -1/p.
//! - [`bernoulli`]: exact rational Bernoulli numbers and zeta at
//!   non-positive integers.
//! - [`zeta`]: complex zeta via Euler-Maclaurin plus reflection, the
//!   cancellation-safe zeta(s) - 1, and the pole-residue checks.
//! - [`mu`]: the interval integrals P_n, the series lambda(s) = 1, the
//!   exact integer-point split beta/alpha, the continuation mu(s) = 1/(s-1),
//!   and its functional equation mu(s) = -mu(2-s).
//! - [`abel_plana`]: tanh-sinh evaluation of the Bose integrals and the
//!   Abel-Plana consistency checks.
//!
//! Everything is pure and stateless (the Bernoulli memo table initializes
//! once behind a lock and is read lock-free afterwards), so values and
//! evaluations move freely between threads.

// Reference constants keep their full oracle digits; negated comparisons on
// floats are deliberate NaN rejection.
#![allow(clippy::excessive_precision)]
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_is_multiple_of)]

pub mod abel_plana;
pub mod bernoulli;
pub mod config;
pub mod error;
pub mod gamma;
pub mod mu;
pub mod report;
pub mod series;
pub mod zeta;

pub use config::{
    EvalConfig, DEFAULT_INTEGER_SNAP_RADIUS, DEFAULT_POLE_EXCLUSION_RADIUS, PRODUCT_CUTOFF,
};
pub use error::{Error, Result};
pub use report::{relative_error, IdentityReport};
pub use series::SeriesEvaluation;

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;
