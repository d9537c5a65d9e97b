//! Ground-truth computation of chain lengths by exhaustive search over the
//! poset of subsemigroups (or inverse subsemigroups), chain-certificate
//! verification, and the ideal/principal-factor decomposition.

pub(crate) mod decompose;
mod enumerate;

pub use decompose::{decompose_length, DecompositionTrace};
pub use enumerate::enumerate_closed_sets;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SemiError};
use crate::finsemi::{classify, is_closed, CayleyTable, ElementSet};

/// Limits for the exhaustive searches. `max_subsemigroups` caps the closed
/// sets the oracle materialises; `max_nodes` caps branch-and-bound tree
/// nodes, which are orders of magnitude cheaper to visit.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_subsemigroups: usize,
    pub max_nodes: u64,
    pub max_millis: u64,
    pub threads: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_subsemigroups: 2_000_000,
            max_nodes: 500_000_000,
            max_millis: 60_000,
            threads: 1,
        }
    }
}

/// Which poset a chain lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChainKind {
    #[serde(rename = "subsemigroup")]
    Subsemigroup,
    #[serde(rename = "inverseSubsemigroup")]
    InverseSubsemigroup,
}

/// A strictly increasing list of closed element subsets witnessing a chain.
/// The reported length is the number of subsets minus 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCertificate {
    pub kind: ChainKind,
    pub subsets: Vec<ElementSet>,
}

impl ChainCertificate {
    pub fn length(&self) -> usize {
        self.subsets.len().saturating_sub(1)
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    kind: ChainKind,
    length: usize,
    subsets: Vec<Vec<usize>>,
}

impl ChainCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&CertificateJson {
            kind: self.kind,
            length: self.length(),
            subsets: self.subsets.iter().map(|s| s.indices()).collect(),
        })
        .expect("certificate serialises")
    }

    pub fn from_json(input: &str, universe: usize) -> Result<Self> {
        let raw: CertificateJson = serde_json::from_str(input)
            .map_err(|e| SemiError::MalformedInput(format!("bad certificate JSON: {e}")))?;
        Ok(ChainCertificate {
            kind: raw.kind,
            subsets: raw
                .subsets
                .iter()
                .map(|s| ElementSet::from_indices(universe, s))
                .collect(),
        })
    }
}

/// Exact `l(S)` with a witness chain, by enumerating all nonempty closed
/// subsets and running longest-path dynamic programming over the containment
/// order.
pub fn longest_chain_exact(
    table: &CayleyTable,
    budget: &SearchBudget,
) -> Result<(usize, ChainCertificate)> {
    // a null table of any size has l = |S| - 1 with the obvious chain;
    // short-circuit before the 2^(size-1) subsemigroups melt the oracle
    if table.size() > 20 {
        if let Some(zero) = classify(table).zero {
            return Ok(null_chain(table, zero, ChainKind::Subsemigroup));
        }
    }
    let sets = enumerate_closed_sets(table, None, budget)?;
    Ok(longest_chain_in(sets, ChainKind::Subsemigroup))
}

/// Exact `l*(S)` over inverse subsemigroups; the table must be an inverse
/// semigroup.
pub fn longest_inverse_chain_exact(
    table: &CayleyTable,
    budget: &SearchBudget,
) -> Result<(usize, ChainCertificate)> {
    let c = classify(table);
    let inverse_of = c.inverse_of.ok_or(SemiError::NotInverse)?;
    let sets = enumerate_closed_sets(table, Some(&inverse_of), budget)?;
    Ok(longest_chain_in(sets, ChainKind::InverseSubsemigroup))
}

fn null_chain(table: &CayleyTable, zero: usize, kind: ChainKind) -> (usize, ChainCertificate) {
    let n = table.size();
    let mut subsets = Vec::with_capacity(n);
    let mut cur = ElementSet::singleton(n, zero);
    subsets.push(cur.clone());
    for x in 0..n {
        if x != zero {
            cur.insert(x);
            subsets.push(cur.clone());
        }
    }
    (n - 1, ChainCertificate { kind, subsets })
}

/// Longest-path DP over the containment order of the given closed sets.
/// Ties are broken canonically (smallest set in the cardinality-then-lex
/// order), so the witness is deterministic.
fn longest_chain_in(mut sets: Vec<ElementSet>, kind: ChainKind) -> (usize, ChainCertificate) {
    sets.sort();
    let n = sets.len();
    let mut best_len = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    for i in 0..n {
        for j in 0..i {
            if best_len[j] + 1 > best_len[i] && sets[j].is_proper_subset(&sets[i]) {
                best_len[i] = best_len[j] + 1;
                parent[i] = j;
            }
        }
    }
    let end = (0..n)
        .max_by_key(|&i| (best_len[i], std::cmp::Reverse(i)))
        .expect("at least one closed set");
    let mut chain = Vec::with_capacity(best_len[end] + 1);
    let mut cur = end;
    while cur != usize::MAX {
        chain.push(sets[cur].clone());
        cur = parent[cur];
    }
    chain.reverse();
    let length = chain.len() - 1;
    (
        length,
        ChainCertificate {
            kind,
            subsets: chain,
        },
    )
}

/// Check every certificate invariant against the table; on failure the
/// report names the first violation.
pub fn verify_chain_report(table: &CayleyTable, cert: &ChainCertificate) -> std::result::Result<(), String> {
    let inverse_of = match cert.kind {
        ChainKind::Subsemigroup => None,
        ChainKind::InverseSubsemigroup => {
            let c = classify(table);
            Some(c.inverse_of.ok_or("table is not an inverse semigroup")?)
        }
    };
    if cert.subsets.is_empty() {
        return Err("certificate contains no subsets".into());
    }
    for (i, s) in cert.subsets.iter().enumerate() {
        if s.is_empty() {
            return Err(format!("subset {i} is empty"));
        }
        if s.universe() != table.size() {
            return Err(format!("subset {i} is over the wrong universe"));
        }
        if !is_closed(table, s) {
            return Err(format!("subset {i} is not closed under products"));
        }
        if let Some(inv) = &inverse_of {
            for x in s.iter() {
                if !s.contains(inv[x]) {
                    return Err(format!("subset {i} is not closed under inverses ({x})"));
                }
            }
        }
        if i > 0 && !cert.subsets[i - 1].is_proper_subset(s) {
            return Err(format!("subset {} is not strictly contained in subset {i}", i - 1));
        }
    }
    Ok(())
}

/// True iff all certificate invariants hold against `table`.
pub fn verify_chain(table: &CayleyTable, cert: &ChainCertificate) -> bool {
    verify_chain_report(table, cert).is_ok()
}
