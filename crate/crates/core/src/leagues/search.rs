//! Branch-and-bound maximization of league content.
//!
//! The search branches on the subset side only: for a fixed family S of
//! k-subsets the best partition side is forced (every k-partition with no
//! transversal in S), so the state is the set of chosen subsets plus the
//! bitset of still-compatible partitions. The bound
//! (|S| + |remaining candidates|) · |P(S)| is admissible because P(S) only
//! shrinks as subsets are added.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{enumerate_partitions, enumerate_subsets, League, SetPartition};
use crate::oracle::SearchBudget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchStatus {
    #[serde(rename = "exact")]
    Exact,
    #[serde(rename = "lowerBoundOnly")]
    LowerBoundOnly,
}

#[derive(Debug, Clone)]
pub struct LeagueSearchResult {
    pub optimum: u64,
    pub witness: League,
    pub status: SearchStatus,
    pub nodes_explored: u64,
}

/// F(n,k) (or F*(n,k) when `interval`) by exhaustive branch-and-bound.
pub fn max_content_exact(
    n: usize,
    k: usize,
    interval: bool,
    budget: &SearchBudget,
) -> LeagueSearchResult {
    max_content_search(n, k, interval, budget, false)
}

/// As `max_content_exact`, with optional symmetry reduction: any nonempty
/// league can be relabelled so its family contains {1..k}, so the root may
/// force the first candidate in. Only valid for general partitions, where
/// the objective is invariant under all point relabellings; it is ignored
/// for the interval variant.
pub fn max_content_search(
    n: usize,
    k: usize,
    interval: bool,
    budget: &SearchBudget,
    symmetry: bool,
) -> LeagueSearchResult {
    assert!(1 <= k && k <= n && n <= 32);
    let partitions = enumerate_partitions(n, k, interval);
    let subsets = enumerate_subsets(n, k);
    let words = partitions.len().div_ceil(64);

    // transversal incidence, as per-subset bitsets over the partitions
    let block_masks: Vec<Vec<u64>> = partitions.iter().map(SetPartition::block_masks).collect();
    let transversed: Vec<Vec<u64>> = subsets
        .iter()
        .map(|s| {
            let mask = s.iter().fold(0u64, |m, &x| m | 1 << x);
            let mut bits = vec![0u64; words];
            for (p, blocks) in block_masks.iter().enumerate() {
                if blocks.iter().all(|&b| (b & mask).count_ones() == 1) {
                    bits[p / 64] |= 1 << (p % 64);
                }
            }
            bits
        })
        .collect();

    let full = full_bits(words, partitions.len());
    let mut search = Search {
        transversed: &transversed,
        candidates: subsets.len(),
        budget,
        start: Instant::now(),
        nodes: 0,
        best: 0,
        best_subsets: Vec::new(),
        exhausted: false,
    };
    let root_symmetry = symmetry && !interval;
    search.dfs(0, &mut Vec::new(), full, root_symmetry);

    // reconstruct the witness: chosen subsets plus all compatible partitions
    let chosen: Vec<Vec<usize>> = search
        .best_subsets
        .iter()
        .map(|&i| subsets[i].clone())
        .collect();
    let witness_partitions: Vec<SetPartition> = if chosen.is_empty() {
        Vec::new()
    } else {
        let mut compatible = full_bits(words, partitions.len());
        for &i in &search.best_subsets {
            for (w, t) in compatible.iter_mut().zip(&transversed[i]) {
                *w &= !t;
            }
        }
        partitions
            .iter()
            .enumerate()
            .filter(|(p, _)| compatible[p / 64] >> (p % 64) & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect()
    };
    let witness = League {
        n,
        k,
        interval,
        partitions: witness_partitions,
        subsets: chosen,
    };
    debug_assert_eq!(witness.content(), search.best);
    LeagueSearchResult {
        optimum: search.best,
        witness,
        status: if search.exhausted {
            SearchStatus::LowerBoundOnly
        } else {
            SearchStatus::Exact
        },
        nodes_explored: search.nodes,
    }
}

fn full_bits(words: usize, len: usize) -> Vec<u64> {
    let mut full = vec![u64::MAX; words];
    if !len.is_multiple_of(64) {
        full[words - 1] = (1u64 << (len % 64)) - 1;
    }
    full
}

struct Search<'a> {
    transversed: &'a [Vec<u64>],
    candidates: usize,
    budget: &'a SearchBudget,
    start: Instant,
    nodes: u64,
    best: u64,
    best_subsets: Vec<usize>,
    exhausted: bool,
}

impl Search<'_> {
    fn dfs(&mut self, next: usize, chosen: &mut Vec<usize>, compatible: Vec<u64>, force_first: bool) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes.is_multiple_of(1024)
                && self.start.elapsed().as_millis() as u64 > self.budget.max_millis)
        {
            self.exhausted = true;
            return;
        }
        let live = compatible.iter().map(|w| w.count_ones() as u64).sum::<u64>();
        let content = chosen.len() as u64 * live;
        if content > self.best {
            self.best = content;
            self.best_subsets = chosen.clone();
        }
        if next == self.candidates {
            return;
        }
        // admissible bound: P(S) only shrinks
        if (chosen.len() + (self.candidates - next)) as u64 * live <= self.best {
            return;
        }
        // include candidate `next` first (the greedy direction), then skip it
        let mut narrowed = compatible.clone();
        for (w, t) in narrowed.iter_mut().zip(&self.transversed[next]) {
            *w &= !t;
        }
        chosen.push(next);
        self.dfs(next + 1, chosen, narrowed, false);
        chosen.pop();
        if !force_first {
            self.dfs(next + 1, chosen, compatible, false);
        }
    }
}
