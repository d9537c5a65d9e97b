//! Quantities attached to the semigroup of all linear transformations of
//! `F_q^n`: Gaussian coefficients, group orders, the pentagonal-series
//! constant `c(q)`, and the exact chain-length lower bound.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Gaussian binomial coefficient: the number of `k`-dimensional subspaces
/// of `F_q^n`. Computed as Π (q^{n-i} - 1) / (q^{k-i} - 1), which divides
/// exactly at every step when done as a single quotient.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((k - i) as u32) - 1u32;
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

/// `|GL(n,q)| = Π_{k=1}^n (q^n - q^{n-k})`.
pub fn gl_order(n: u64, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let qn = q.pow(n as u32);
    (1..=n).map(|k| &qn - q.pow((n - k) as u32)).product()
}

/// The semigroup of all linear maps on `F_q^n` has order `q^{n²}`.
pub fn gls_order(n: u64, q: u64) -> BigUint {
    BigUint::from(q).pow((n * n) as u32)
}

/// Partial sums of the pentagonal-number series
/// `c(q) = Σ_{k=-∞}^{∞} (-1)^k q^{-k(3k-1)/2}`; terms are added in order of
/// growing exponent until the next pair of terms is below `tolerance`
/// (exponents grow quadratically, so the tail is below twice the next term).
/// Returns the approximation and a bound on the truncation error.
pub fn c_q(q: u64, tolerance: f64) -> (f64, f64) {
    assert!(q >= 2);
    assert!(tolerance > 0.0);
    let q = q as f64;
    let mut sum = 1.0; // k = 0
    let mut k = 1i64;
    loop {
        // exponents k(3k-1)/2 for k and -k
        let e_pos = (k * (3 * k - 1) / 2) as f64;
        let e_neg = (k * (3 * k + 1) / 2) as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let pair = sign * (q.powf(-e_pos) + q.powf(-e_neg));
        let bound = 2.0 * (q.powf(-e_pos) + q.powf(-e_neg));
        if bound < tolerance {
            return (sum, bound);
        }
        sum += pair;
        k += 1;
    }
}

/// Exact rational value of the lower bound
/// `(1 - 1/q)² q^{-n} (|GLS(n,q)| - |GL(n,q)|) - 1`
/// on the subsemigroup chain length, with its clamped value `max(⌊raw⌋, 0)`.
pub fn gls_lower_bound(n: u64, q: u64) -> (BigRational, BigUint) {
    let qr = BigRational::from(num_bigint::BigInt::from(q));
    let one = BigRational::one();
    let prefactor = (&one - one.clone() / &qr).pow(2) / qr.pow(n as i32);
    let gap = BigRational::from(num_bigint::BigInt::from(gls_order(n, q)) - num_bigint::BigInt::from(gl_order(n, q)));
    let raw = prefactor * gap - BigRational::one();
    let clamped = if raw.is_negative() {
        BigUint::zero()
    } else {
        raw.floor().to_integer().to_biguint().unwrap()
    };
    (raw, clamped)
}
