//! Randomized invariants: closure is a closure operator, oracle
//! certificates verify, league JSON round-trips, and partition encodings
//! agree with their block lists.

use proptest::prelude::*;

use semichain::finsemi::{build_family, closure, is_closed};
use semichain::leagues::{
    is_transversal, max_content_exact, League, SetPartition,
};
use semichain::oracle::{longest_chain_exact, verify_chain};
use semichain::{CayleyTable, ElementSet, FamilySpec, SearchBudget};

/// A pool of small tables with varied structure (groups, null, monogenic,
/// Brandt, the free band) to run the table-generic properties over.
fn table_pool() -> Vec<CayleyTable> {
    let triv = build_family(&FamilySpec::CyclicGroup(1)).unwrap();
    [
        FamilySpec::Null(5),
        FamilySpec::Monogenic(3, 2),
        FamilySpec::Monogenic(2, 4),
        FamilySpec::CyclicGroup(6),
        FamilySpec::SymmetricGroup(3),
        FamilySpec::FreeBand2,
        FamilySpec::Brandt(Box::new(triv), 2),
        FamilySpec::FullTransformation(2),
    ]
    .iter()
    .map(|spec| build_family(spec).unwrap())
    .collect()
}

fn subset_of(size: usize) -> impl Strategy<Value = Vec<bool>> {
    proptest::collection::vec(any::<bool>(), size)
}

fn to_set(bits: &[bool]) -> ElementSet {
    let indices: Vec<usize> = bits
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i))
        .collect();
    ElementSet::from_indices(bits.len(), &indices)
}

proptest! {
    #[test]
    fn closure_is_extensive_idempotent_and_closed(
        which in 0usize..8,
        bits in subset_of(8),
    ) {
        let pool = table_pool();
        let table = &pool[which.min(pool.len() - 1)];
        let seed = to_set(&bits[..table.size().min(bits.len())]
            .iter().copied().chain(std::iter::repeat(false))
            .take(table.size()).collect::<Vec<_>>());
        let closed = closure(table, &seed);
        prop_assert!(seed.indices().iter().all(|&x| closed.contains(x)));
        prop_assert!(is_closed(table, &closed));
        prop_assert_eq!(closure(table, &closed), closed);
    }

    #[test]
    fn closure_is_monotone(which in 0usize..8, bits_a in subset_of(8), bits_b in subset_of(8)) {
        let pool = table_pool();
        let table = &pool[which.min(pool.len() - 1)];
        let n = table.size();
        // force a ⊆ b by intersecting
        let a_bits: Vec<bool> = (0..n).map(|i| bits_a[i % 8] && bits_b[i % 8]).collect();
        let b_bits: Vec<bool> = (0..n).map(|i| bits_b[i % 8]).collect();
        let ca = closure(table, &to_set(&a_bits));
        let cb = closure(table, &to_set(&b_bits));
        prop_assert!(ca.indices().iter().all(|&x| cb.contains(x)));
    }

    #[test]
    fn oracle_certificates_verify(which in 0usize..8) {
        let pool = table_pool();
        let table = &pool[which.min(pool.len() - 1)];
        let (length, cert) = longest_chain_exact(table, &SearchBudget::default()).unwrap();
        prop_assert_eq!(cert.length(), length);
        prop_assert!(verify_chain(table, &cert));
    }

    #[test]
    fn league_json_round_trips(n in 3usize..=6, k_offset in 0usize..3) {
        let k = (2 + k_offset).min(n);
        let result = max_content_exact(n, k, false, &SearchBudget::default());
        let league = result.witness;
        let parsed = League::from_json(&league.to_json()).unwrap();
        prop_assert_eq!(parsed.n, league.n);
        prop_assert_eq!(parsed.content(), league.content());
        prop_assert_eq!(parsed.subsets, league.subsets);
    }

    #[test]
    fn partition_codes_round_trip(ids in proptest::collection::vec(0usize..4, 1..9)) {
        let p = SetPartition::from_block_ids(&ids);
        let rebuilt = SetPartition::from_blocks(p.n(), &p.blocks()).unwrap();
        prop_assert_eq!(rebuilt.block_of(), p.block_of());
        // restricted growth: first element in block 0, labels increase by
        // at most 1 over the running maximum
        let codes = p.block_of();
        prop_assert_eq!(codes[0], 0);
        let mut max = 0usize;
        for &c in codes {
            prop_assert!(c <= max + 1);
            max = max.max(c);
        }
    }

    #[test]
    fn transversal_matches_definition(ids in proptest::collection::vec(0usize..3, 4..8), bits in subset_of(8)) {
        let p = SetPartition::from_block_ids(&ids);
        let subset: Vec<usize> = (0..p.n()).filter(|&i| bits[i % 8]).collect();
        // is_transversal is only defined for k-subsets against k-partitions
        prop_assume!(subset.len() == p.block_count());
        let naive = p.blocks().iter().all(|block| {
            block.iter().filter(|x| subset.contains(x)).count() == 1
        });
        prop_assert_eq!(is_transversal(&subset, &p), naive);
    }
}
