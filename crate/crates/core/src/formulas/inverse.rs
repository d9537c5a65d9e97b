//! Length formulas for Brandt semigroups and finite inverse semigroups,
//! plus their instantiation for the four classical inverse monoid families.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::combi::{binomial, factorial, stirling2};
use crate::error::{Result, SemiError};
use crate::finsemi::{classify, CayleyTable, GreensStructure};
use crate::grouplen::{group_length, length_symmetric, omega};

/// Per-J-class data feeding the inverse length theorem: the common number
/// `n_i` of L-classes and R-classes, and the length and order of a maximal
/// subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JClassSummary {
    pub n_lr: BigUint,
    pub group_length: u64,
    pub group_order: BigUint,
}

impl JClassSummary {
    pub fn new(n_lr: u64, group_length: u64, group_order: u64) -> Self {
        JClassSummary {
            n_lr: BigUint::from(n_lr),
            group_length,
            group_order: BigUint::from(group_order),
        }
    }
}

/// `l(B(G,n)) = n(l(G)+1) + n(n-1)/2 |G| + n - 1` for a Brandt semigroup
/// over a group of length `l_g` and order `order_g`.
pub fn brandt_length(l_g: u64, order_g: &BigUint, n: &BigUint) -> BigUint {
    assert!(!n.is_zero());
    let two = BigUint::from(2u32);
    n * (l_g + 1) + n * (n - 1u32) / two * order_g + n - 1u32
}

/// `l(S) = -1 + Σ l(B(G_i, n_i))` over the J-classes of a finite inverse
/// semigroup.
pub fn inverse_length(classes: &[JClassSummary]) -> BigUint {
    assert!(!classes.is_empty());
    let total: BigUint = classes
        .iter()
        .map(|c| brandt_length(c.group_length, &c.group_order, &c.n_lr))
        .sum();
    total - 1u32
}

/// `l*(B(G,n)) = n(l(G)+2) - 1`: the longest chain of inverse subsemigroups
/// of a Brandt semigroup.
pub fn inverse_star_brandt(l_g: u64, n: &BigUint) -> BigUint {
    assert!(!n.is_zero());
    n * (l_g + 2) - 1u32
}

/// `l*(S) = -1 + Σ l*(B(G_i, n_i))` over the J-classes.
pub fn inverse_star_length(classes: &[JClassSummary]) -> BigUint {
    assert!(!classes.is_empty());
    let total: BigUint = classes
        .iter()
        .map(|c| inverse_star_brandt(c.group_length, &c.n_lr))
        .sum();
    total - 1u32
}

/// Extract `JClassSummary` data directly from an inverse Cayley table: per
/// J-class, the L/R class count and the length/order of the maximal
/// subgroup at an idempotent. Group lengths come from exact subgroup-chain
/// search, so this is independent of the closed-form instantiations.
pub fn jclass_summaries(
    table: &CayleyTable,
    greens: &GreensStructure,
) -> Result<Vec<JClassSummary>> {
    if !classify(table).inverse {
        return Err(SemiError::NotInverse);
    }
    let mut out = Vec::new();
    for j in 0..greens.j_class_count() {
        let (l_count, r_count) = greens.lr_counts_in_j(j);
        debug_assert_eq!(l_count, r_count);
        let idem = greens.j_class_members[j]
            .iter()
            .find(|&x| table.product(x, x) == x)
            .expect("inverse semigroup J-class contains an idempotent");
        let h_of_idem = greens.h_class_of[idem];
        let mut members = crate::finsemi::ElementSet::empty(table.size());
        for x in 0..table.size() {
            if greens.h_class_of[x] == h_of_idem {
                members.insert(x);
            }
        }
        let group = crate::oracle::decompose::sub_table(table, &members);
        let result = group_length(&group)?;
        out.push(JClassSummary::new(
            l_count as u64,
            result.length as u64,
            members.count() as u64,
        ));
    }
    Ok(out)
}

/// The four classical families with known J-class structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum InverseFamily {
    /// Symmetric inverse monoid `I_n`: partial permutations of `n` points.
    SymmetricInverse,
    /// Dual symmetric inverse monoid `I_n*`: block bijections.
    DualSymmetricInverse,
    /// Partial order-preserving injective maps on an `n`-chain.
    Poi,
    /// Partial orientation-preserving injective maps on an `n`-chain.
    Popi,
}

impl InverseFamily {
    pub const ALL: [InverseFamily; 4] = [
        InverseFamily::SymmetricInverse,
        InverseFamily::DualSymmetricInverse,
        InverseFamily::Poi,
        InverseFamily::Popi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InverseFamily::SymmetricInverse => "I",
            InverseFamily::DualSymmetricInverse => "I*",
            InverseFamily::Poi => "POI",
            InverseFamily::Popi => "POPI",
        }
    }

    /// J-class summaries for the degree-`n` member of the family.
    ///
    /// `I_n`: class per domain size `i = 0..n`, `n_i = C(n,i)`, group `S_i`;
    /// `I_n*`: class per `i = 1..n`, `n_i = S(n,i)`, group `S_i`;
    /// `POI_n`: same class shape as `I_n` with trivial groups;
    /// `POPI_n`: rank-`d` class has group `C_d` (trivial at `d <= 1`).
    pub fn summaries(self, n: u64) -> Vec<JClassSummary> {
        match self {
            InverseFamily::SymmetricInverse => (0..=n)
                .map(|i| JClassSummary {
                    n_lr: binomial(n, i),
                    group_length: sym_length(i),
                    group_order: factorial(i),
                })
                .collect(),
            InverseFamily::DualSymmetricInverse => (1..=n)
                .map(|i| JClassSummary {
                    n_lr: stirling2(n, i),
                    group_length: sym_length(i),
                    group_order: factorial(i),
                })
                .collect(),
            InverseFamily::Poi => (0..=n)
                .map(|i| JClassSummary {
                    n_lr: binomial(n, i),
                    group_length: 0,
                    group_order: BigUint::one(),
                })
                .collect(),
            InverseFamily::Popi => (0..=n)
                .map(|d| JClassSummary {
                    n_lr: binomial(n, d),
                    group_length: if d > 0 { omega(d) as u64 } else { 0 },
                    group_order: BigUint::from(d.max(1)),
                })
                .collect(),
        }
    }
}

fn sym_length(i: u64) -> u64 {
    if i == 0 {
        0
    } else {
        length_symmetric(i)
    }
}

/// Closed-form `l` (or `l*` when `starred`) of the degree-`n` member of the
/// named family, by instantiating the general theorem.
pub fn named_inverse_monoid_length(family: InverseFamily, n: u64, starred: bool) -> BigUint {
    let classes = family.summaries(n);
    if starred {
        inverse_star_length(&classes)
    } else {
        inverse_length(&classes)
    }
}

/// `|I_n| = Σ_i C(n,i)² i!`.
pub fn symmetric_inverse_order(n: u64) -> BigUint {
    (0..=n)
        .map(|i| {
            let b = binomial(n, i);
            &b * &b * factorial(i)
        })
        .sum()
}
