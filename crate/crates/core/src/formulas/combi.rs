use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Stirling number of the second kind `S(n, k)`, via the recurrence
/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`.
pub fn stirling2(n: u64, k: u64) -> BigUint {
    if n == 0 && k == 0 {
        return BigUint::one();
    }
    if k == 0 || k > n {
        return BigUint::zero();
    }
    // row-by-row table
    let k = k as usize;
    let mut row = vec![BigUint::zero(); k + 1];
    row[0] = BigUint::one(); // S(0,0)
    for _ in 1..=n {
        let mut next = vec![BigUint::zero(); k + 1];
        for j in 1..=k {
            next[j] = &row[j] * j as u64 + &row[j - 1];
        }
        row = next;
    }
    row[k].clone()
}

/// Number of rank-`k` maps in `T_n`: `N(n,k) = S(n,k) C(n,k) k!`.
pub fn nmaps(n: u64, k: u64) -> BigUint {
    stirling2(n, k) * binomial(n, k) * factorial(k)
}

/// Number of rank-`k` order-preserving maps in `O_n`:
/// `N*(n,k) = C(n,k) C(n-1,k-1)`.
pub fn nmaps_op(n: u64, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::zero();
    }
    binomial(n, k) * binomial(n - 1, k - 1)
}

/// Maximum order of the null subsemigroup of `T_n` built from the singleton
/// league at rank `k`: `max_k (n-k) N(n-1,k-1)`, with the maximising `k`.
/// This order is simultaneously the base-2 log lower bound on the number of
/// subsemigroups of `T_n` and the lower bound on the generator number.
pub fn tn_null_max_order(n: u64) -> (BigUint, u64) {
    assert!(n >= 2);
    let mut best = BigUint::zero();
    let mut best_k = 1;
    for k in 1..=n {
        let value = nmaps(n - 1, k - 1) * (n - k);
        if value > best {
            best = value;
            best_k = k;
        }
    }
    (best, best_k)
}
