//! Exact-rational Bernoulli numbers and zeta at non-positive integers.
//!
//! Convention B_1 = -1/2, forced by zeta(0) = -1/2 and by the binomial sum
//! identity sum_{k=1}^{q} C(q+1, k) B_k = -1 that the exact lambda path
//! depends on. The recurrence sum_{k=0}^{q-1} C(q, k) B_k = 0 (valid for
//! q >= 2) is solved for B_{q-1} in big-integer arithmetic; floating point
//! is catastrophic here because the recurrence cancels to machine zero.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Size of the memoized table: B_0 .. B_128 computed on first use.
pub const TABLE_MAX: u32 = 128;

static TABLE: OnceLock<Vec<BigRational>> = OnceLock::new();

/// Exact binomial coefficient C(n, k); zero when k > n.
pub fn binomial_int(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= n - j;
        den *= j + 1;
    }
    num / den
}

fn compute_table(up_to: u32) -> Vec<BigRational> {
    let n = up_to as usize;
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for q in 2..=(n as u64 + 1) {
        // sum_{k=0}^{q-1} C(q, k) B_k = 0, solved for B_{q-1}.
        if (q - 1) % 2 == 1 && q - 1 > 1 {
            // Odd-index values above B_1 vanish; skip the O(q) sum.
            b.push(BigRational::zero());
            continue;
        }
        let mut acc = BigRational::zero();
        for (k, bk) in b.iter().enumerate().take(q as usize - 1) {
            if !bk.is_zero() {
                acc += BigRational::from_integer(binomial_int(q, k as u64)) * bk;
            }
        }
        let lead = BigRational::from_integer(binomial_int(q, q - 1));
        b.push(-acc / lead);
    }
    b
}

fn table() -> &'static [BigRational] {
    TABLE.get_or_init(|| compute_table(TABLE_MAX))
}

/// Bernoulli number B_q as an exact rational (B_1 = -1/2).
pub fn bernoulli_exact(q: u32) -> BigRational {
    let t = table();
    if (q as usize) < t.len() {
        t[q as usize].clone()
    } else {
        // Above the memoized range: extend from the cached prefix without
        // touching the shared table.
        let ext = compute_table(q);
        ext[q as usize].clone()
    }
}

/// Float projection of B_q, for the Euler-Maclaurin coefficients.
pub(crate) fn bernoulli_f64(q: u32) -> f64 {
    bernoulli_exact(q)
        .to_f64()
        .expect("Bernoulli number out of f64 range")
}

/// zeta(-q) = (-1)^q B_{q+1} / (q+1), exact.
pub fn zeta_neg_int(q: u32) -> BigRational {
    let b = bernoulli_exact(q + 1);
    let v = b / BigRational::from_integer(BigInt::from(q + 1));
    if q % 2 == 0 {
        v
    } else {
        -v
    }
}

/// sum_{k=1}^{q} C(q+1, k) B_k, exactly. Equals -1 for every q >= 1; the
/// exact lambda path relies on this value.
pub fn bernoulli_sum_check(q: u32) -> BigRational {
    assert!(q >= 1, "bernoulli_sum_check requires q >= 1");
    let mut acc = BigRational::zero();
    for k in 1..=q {
        let b = bernoulli_exact(k);
        if !b.is_zero() {
            acc += BigRational::from_integer(binomial_int(q as u64 + 1, k as u64)) * b;
        }
    }
    acc
}
