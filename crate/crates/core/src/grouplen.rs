//! Lengths of chains of subgroups in finite groups: the symmetric-group
//! closed form, the prime-factor count for soluble groups, and exact search
//! on small tables.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Result, SemiError};
use crate::finsemi::{classify, closure, CayleyTable, ElementSet};

/// How a group length was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupLengthMethod {
    SymmetricFormula,
    SolubleOmega,
    ExactSearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupLengthResult {
    pub length: usize,
    pub method: GroupLengthMethod,
}

/// Number of prime divisors of `n` counted with multiplicity.
pub fn omega(n: u64) -> usize {
    assert!(n >= 1, "omega is defined for n >= 1");
    let mut n = n;
    let mut count = 0;
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            n /= p;
            count += 1;
        }
        p += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

/// Number of ones in the binary expansion of `n`.
pub fn binary_ones(n: u64) -> usize {
    n.count_ones() as usize
}

/// Length of the symmetric group: `ceil(3n/2) - b(n) - 1` where `b(n)` is
/// the number of ones in binary `n`.
pub fn length_symmetric(n: u64) -> u64 {
    assert!(n >= 1);
    let ceil_3n_2 = (3 * n).div_ceil(2);
    ceil_3n_2 - binary_ones(n) as u64 - 1
}

/// Length of a group given by its table: the prime-factor count for soluble
/// groups, exact subgroup-chain search otherwise.
pub fn group_length(table: &CayleyTable) -> Result<GroupLengthResult> {
    let c = classify(table);
    if !c.group {
        return Err(SemiError::NotAGroup);
    }
    if is_soluble(table, c.identity.expect("groups have an identity")) {
        return Ok(GroupLengthResult {
            length: omega(table.size() as u64),
            method: GroupLengthMethod::SolubleOmega,
        });
    }
    Ok(GroupLengthResult {
        length: subgroup_chain_search(table)?,
        method: GroupLengthMethod::ExactSearch,
    })
}

fn inverse_map(table: &CayleyTable, identity: usize) -> Vec<usize> {
    (0..table.size())
        .map(|x| {
            (0..table.size())
                .find(|&y| table.product(x, y) == identity && table.product(y, x) == identity)
                .expect("every group element has an inverse")
        })
        .collect()
}

/// Derived-series solubility test: repeatedly take the subgroup generated by
/// all commutators until it stabilises; soluble iff it reaches the trivial
/// subgroup.
pub fn is_soluble(table: &CayleyTable, identity: usize) -> bool {
    let n = table.size();
    let inv = inverse_map(table, identity);
    let mut current = table.full_set();
    loop {
        let members = current.indices();
        let mut commutators = ElementSet::singleton(n, identity);
        for &a in &members {
            for &b in &members {
                // a^-1 b^-1 a b
                let c = table.product(
                    table.product(table.product(inv[a], inv[b]), a),
                    b,
                );
                commutators.insert(c);
            }
        }
        let derived = closure(table, &commutators);
        if derived == current {
            return current.count() == 1;
        }
        current = derived;
    }
}

/// All subgroups of a small group, enumerated by closing element subsets.
pub fn all_subgroups(table: &CayleyTable, identity: usize) -> Vec<ElementSet> {
    let n = table.size();
    let trivial = closure(table, &ElementSet::singleton(n, identity));
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut queue: VecDeque<ElementSet> = VecDeque::new();
    seen.insert(trivial.clone());
    queue.push_back(trivial);
    while let Some(h) = queue.pop_front() {
        for x in 0..n {
            if h.contains(x) {
                continue;
            }
            let mut seed = h.clone();
            seed.insert(x);
            let extended = closure(table, &seed);
            if seen.insert(extended.clone()) {
                queue.push_back(extended);
            }
        }
    }
    let mut out: Vec<ElementSet> = seen.into_iter().collect();
    out.sort();
    out
}

const MAX_EXACT_SEARCH_ORDER: usize = 1024;

/// Longest chain of subgroups, by dynamic programming over the subgroup
/// containment order.
fn subgroup_chain_search(table: &CayleyTable) -> Result<usize> {
    let n = table.size();
    if n > MAX_EXACT_SEARCH_ORDER {
        return Err(SemiError::SearchTooLarge { order: n });
    }
    let identity = classify(table).identity.ok_or(SemiError::NotAGroup)?;
    let subgroups = all_subgroups(table, identity);
    // subgroups are sorted by cardinality, so predecessors come first
    let mut longest = vec![0usize; subgroups.len()];
    for i in 0..subgroups.len() {
        for j in 0..i {
            if subgroups[j].is_proper_subset(&subgroups[i]) {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
    }
    Ok(*longest.last().expect("at least the whole group"))
}

/// Quotient group table from a normal subgroup, with cosets as elements.
/// Returns `None` if `normal` is not a normal subgroup.
pub fn quotient_group(table: &CayleyTable, normal: &ElementSet) -> Option<CayleyTable> {
    let n = table.size();
    let members = normal.indices();
    // normality: x N x^-1 = N for all x
    let identity = (0..n).find(|&e| (0..n).all(|x| table.product(e, x) == x))?;
    let inv = inverse_map(table, identity);
    for (x, &xinv) in inv.iter().enumerate() {
        for &h in &members {
            let conj = table.product(table.product(x, h), xinv);
            if !normal.contains(conj) {
                return None;
            }
        }
    }
    // cosets xN, keyed by their element sets
    let mut coset_ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut coset_of = vec![0usize; n];
    let mut reps: Vec<usize> = Vec::new();
    for (x, slot) in coset_of.iter_mut().enumerate() {
        let mut coset: Vec<usize> = members.iter().map(|&h| table.product(x, h)).collect();
        coset.sort_unstable();
        let next = coset_ids.len();
        *slot = *coset_ids.entry(coset).or_insert_with(|| {
            reps.push(x);
            next
        });
    }
    let k = reps.len();
    let mut flat = Vec::with_capacity(k * k);
    for a in 0..k {
        for b in 0..k {
            flat.push(coset_of[table.product(reps[a], reps[b])]);
        }
    }
    crate::finsemi::validate_table(k, flat).ok()
}
