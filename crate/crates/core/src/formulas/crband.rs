//! Lengths of completely regular semigroups, bands, and free bands.

use num_bigint::BigUint;

use super::combi::binomial;

/// `l(S) = m + n - r - 1 + Σ l(G_i)` for a completely regular semigroup with
/// `m` L-classes, `n` R-classes, `r` J-classes, and maximal subgroups `G_i`.
/// With all group lengths zero this is the band case `m + n - r - 1`.
pub fn completely_regular_length(m: &BigUint, n: &BigUint, r: u64, group_lengths: &[u64]) -> BigUint {
    assert_eq!(group_lengths.len() as u64, r);
    assert!(m >= &BigUint::from(r) && n >= &BigUint::from(r));
    let groups: u64 = group_lengths.iter().sum();
    m + n - r - 1u32 + groups
}

/// Number of J-classes of content size `k` in a free band:
/// `a_k = k Π_{i=1}^{k-2} (k-i)^{2^i}` (empty product for `k <= 2`).
pub fn band_jclass_count(k: u64) -> BigUint {
    assert!(k >= 1);
    let mut acc = BigUint::from(k);
    for i in 1..=k.saturating_sub(2) {
        acc *= BigUint::from(k - i).pow(1u32 << i);
    }
    acc
}

/// `l(B_n) = 2 Σ_k C(n,k) a_k - 2^n` for the free band on `n` generators.
pub fn free_band_length(n: u64) -> BigUint {
    assert!(n >= 1);
    let sum: BigUint = (1..=n).map(|k| binomial(n, k) * band_jclass_count(k)).sum();
    sum * 2u32 - BigUint::from(2u32).pow(n as u32)
}
