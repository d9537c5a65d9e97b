//! Leagues: pairs (P, S) of k-partitions and k-subsets of {1..n} with no
//! transversal incidence. The content |P|·|S| governs the order of the null
//! subsemigroups of rank-k maps, and its maximum F(n,k) (F*(n,k) when the
//! partitions must be intervals) drives the chain-length lower bounds for
//! the full transformation and order-preserving monoids.

mod search;

pub use search::{max_content_exact, max_content_search, LeagueSearchResult, SearchStatus};

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Result, SemiError};
use crate::finsemi::{build_family, tn_map_index, CayleyTable, ElementSet, FamilySpec};
use crate::formulas::{binomial, stirling2};
use crate::oracle::{ChainCertificate, ChainKind, SearchBudget};

/// A partition of {0..n-1} into `block_count` nonempty blocks, stored as a
/// restricted-growth string: `block_of[i]` is the block id of point `i`, and
/// block ids appear in order of first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    block_of: Vec<usize>,
    block_count: usize,
}

impl SetPartition {
    /// Build from an arbitrary block-id assignment; ids are renumbered to
    /// restricted-growth form.
    pub fn from_block_ids(ids: &[usize]) -> Self {
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(ids.len());
        let mut next = 0;
        for &id in ids {
            let b = *relabel.entry(id).or_insert_with(|| {
                let b = next;
                next += 1;
                b
            });
            block_of.push(b);
        }
        SetPartition {
            n: ids.len(),
            block_of,
            block_count: next,
        }
    }

    /// Build from explicit blocks (0-based points).
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut ids = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(SemiError::MalformedInput("empty partition block".into()));
            }
            for &p in block {
                if p >= n || ids[p] != usize::MAX {
                    return Err(SemiError::MalformedInput(format!(
                        "point {p} missing, repeated, or out of range"
                    )));
                }
                ids[p] = b;
            }
        }
        if ids.contains(&usize::MAX) {
            return Err(SemiError::MalformedInput("blocks do not cover {1..n}".into()));
        }
        Ok(SetPartition::from_block_ids(&ids))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count];
        for (p, &b) in self.block_of.iter().enumerate() {
            blocks[b].push(p);
        }
        blocks
    }

    /// True when every block is a contiguous interval; in restricted-growth
    /// form that is exactly monotonicity of the block-id string.
    pub fn is_interval(&self) -> bool {
        self.block_of.windows(2).all(|w| w[0] <= w[1])
    }

    /// Per-block membership bitmasks.
    pub(crate) fn block_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.block_count];
        for (p, &b) in self.block_of.iter().enumerate() {
            masks[b] |= 1 << p;
        }
        masks
    }
}

/// All partitions of {0..n-1} into exactly k blocks (restricted-growth
/// enumeration), or into k intervals when `interval` is set (divider
/// positions). Counts: S(n,k) and C(n-1,k-1) respectively.
pub fn enumerate_partitions(n: usize, k: usize, interval: bool) -> Vec<SetPartition> {
    assert!(1 <= k && k <= n);
    let mut out = Vec::new();
    if interval {
        // choose k-1 divider gaps out of n-1
        let mut dividers: Vec<usize> = (0..k - 1).collect();
        loop {
            let mut ids = Vec::with_capacity(n);
            let mut block = 0;
            for p in 0..n {
                ids.push(block);
                if block < k - 1 && dividers[block] == p {
                    block += 1;
                }
            }
            out.push(SetPartition::from_block_ids(&ids));
            if !advance_combination(&mut dividers, n - 1) {
                break;
            }
        }
    } else {
        let mut ids = vec![0usize; n];
        rgs_rec(&mut ids, 1, 0, n, k, &mut out);
    }
    out
}

fn rgs_rec(
    ids: &mut Vec<usize>,
    pos: usize,
    max_used: usize,
    n: usize,
    k: usize,
    out: &mut Vec<SetPartition>,
) {
    if pos == n {
        if max_used + 1 == k {
            out.push(SetPartition {
                n,
                block_of: ids.clone(),
                block_count: k,
            });
        }
        return;
    }
    // blocks still to be opened must fit in the remaining positions
    if k - 1 > max_used + (n - pos) {
        return;
    }
    for b in 0..=(max_used + 1).min(k - 1) {
        ids[pos] = b;
        rgs_rec(ids, pos + 1, max_used.max(b), n, k, out);
    }
}

/// Lexicographic successor of a combination (sorted positions < limit);
/// false when exhausted.
fn advance_combination(c: &mut [usize], limit: usize) -> bool {
    let k = c.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < limit - (k - i) {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All k-subsets of {0..n-1} in lexicographic order.
pub(crate) fn enumerate_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut c: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    loop {
        out.push(c.clone());
        if !advance_combination(&mut c, n) {
            break;
        }
    }
    out
}

/// A k-subset is a transversal of a k-partition when it meets every block
/// exactly once.
pub fn is_transversal(subset: &[usize], partition: &SetPartition) -> bool {
    assert_eq!(subset.len(), partition.block_count());
    let mut seen = vec![false; partition.block_count()];
    for &p in subset {
        let b = partition.block_of[p];
        if seen[b] {
            return false;
        }
        seen[b] = true;
    }
    true
}

/// A pair of families with no transversal incidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct League {
    pub n: usize,
    pub k: usize,
    pub interval: bool,
    pub partitions: Vec<SetPartition>,
    pub subsets: Vec<Vec<usize>>,
}

impl League {
    pub fn empty(n: usize, k: usize, interval: bool) -> Self {
        League {
            n,
            k,
            interval,
            partitions: Vec::new(),
            subsets: Vec::new(),
        }
    }

    pub fn content(&self) -> u64 {
        self.partitions.len() as u64 * self.subsets.len() as u64
    }

    /// JSON with 1-based points:
    /// `{"n":., "k":., "interval":., "partitions":[[[..],..],..], "subsets":[[..],..], "content":.}`.
    pub fn to_json(&self) -> String {
        let partitions: Vec<Value> = self
            .partitions
            .iter()
            .map(|p| {
                json!(p
                    .blocks()
                    .iter()
                    .map(|b| b.iter().map(|x| x + 1).collect::<Vec<_>>())
                    .collect::<Vec<_>>())
            })
            .collect();
        let subsets: Vec<Value> = self
            .subsets
            .iter()
            .map(|s| json!(s.iter().map(|x| x + 1).collect::<Vec<_>>()))
            .collect();
        json!({
            "n": self.n,
            "k": self.k,
            "interval": self.interval,
            "partitions": partitions,
            "subsets": subsets,
            "content": self.content(),
        })
        .to_string()
    }

    pub fn from_json(input: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(input)
            .map_err(|e| SemiError::MalformedInput(format!("bad league JSON: {e}")))?;
        let bad = |what: &str| SemiError::MalformedInput(format!("league JSON: bad {what}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        let k = v["k"].as_u64().ok_or_else(|| bad("k"))? as usize;
        let interval = v["interval"].as_bool().ok_or_else(|| bad("interval"))?;
        let mut partitions = Vec::new();
        for p in v["partitions"].as_array().ok_or_else(|| bad("partitions"))? {
            let mut blocks = Vec::new();
            for b in p.as_array().ok_or_else(|| bad("partition"))? {
                let block: Vec<usize> = b
                    .as_array()
                    .ok_or_else(|| bad("block"))?
                    .iter()
                    .map(|x| x.as_u64().map(|x| x as usize - 1).ok_or_else(|| bad("point")))
                    .collect::<Result<_>>()?;
                blocks.push(block);
            }
            partitions.push(SetPartition::from_blocks(n, &blocks)?);
        }
        let mut subsets = Vec::new();
        for s in v["subsets"].as_array().ok_or_else(|| bad("subsets"))? {
            let mut subset: Vec<usize> = s
                .as_array()
                .ok_or_else(|| bad("subset"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize - 1).ok_or_else(|| bad("point")))
                .collect::<Result<_>>()?;
            subset.sort_unstable();
            subsets.push(subset);
        }
        Ok(League {
            n,
            k,
            interval,
            partitions,
            subsets,
        })
    }
}

/// True iff no subset of the league is a transversal of any of its
/// partitions (and the shapes are consistent).
pub fn league_check(league: &League) -> bool {
    league
        .partitions
        .iter()
        .all(|p| p.n() == league.n && p.block_count() == league.k)
        && league
            .subsets
            .iter()
            .all(|s| s.len() == league.k && s.iter().all(|&x| x < league.n))
        && !league
            .subsets
            .iter()
            .any(|s| league.partitions.iter().any(|p| is_transversal(s, p)))
}

/// Lower bound on F(n,k) from the singleton-point construction:
/// C(n-1,k) S(n-1,k-1).
pub fn league_lb1(n: u64, k: u64) -> BigUint {
    if k < 1 || n < 1 {
        return BigUint::zero();
    }
    binomial(n - 1, k) * stirling2(n - 1, k - 1)
}

/// Lower bound on F(n,k) from gluing two points: C(n-2,k-2) S(n-1,k).
pub fn league_lb2(n: u64, k: u64) -> BigUint {
    if k < 2 || n < 2 {
        return BigUint::zero();
    }
    binomial(n - 2, k - 2) * stirling2(n - 1, k)
}

/// Lower bound on F*(n,k): C(n-1,k) C(n-2,n-k).
pub fn league_lb_interval(n: u64, k: u64) -> BigUint {
    if n < 2 || k > n {
        return BigUint::zero();
    }
    binomial(n - 1, k) * binomial(n - 2, n - k)
}

/// Exact F(n,k) in the extreme cases k ∈ {1, 2 (n>3), n-1, n}; None
/// otherwise.
pub fn closed_form_f(n: u64, k: u64) -> Option<BigUint> {
    if k == 1 || k == n {
        return Some(BigUint::zero());
    }
    if k + 1 == n && n >= 3 {
        let s = n / 3;
        let v = match n % 3 {
            0 => s * s * (2 * s - 1),
            1 => s * s * (2 * s + 1),
            _ => s * (s + 1) * (2 * s + 1),
        };
        return Some(BigUint::from(v));
    }
    if k == 2 && n > 3 {
        return Some(BigUint::from(3u32) * (BigUint::from(2u32).pow(n as u32 - 3) - 1u32));
    }
    None
}

/// Exact F*(n,k) in the extreme cases; None otherwise. The k=2 case
/// maximises (n-r+1)(n-r)(r-1)/2 at the floor and ceiling of the continuous
/// optimum r* = (2(n+1) - sqrt((n+1)² - 3n))/3.
pub fn closed_form_fstar(n: u64, k: u64) -> Option<BigUint> {
    if k == 1 || k == n {
        return Some(BigUint::zero());
    }
    if k + 1 == n && n >= 3 {
        return Some(BigUint::from((n - 1) / 2) * BigUint::from(n / 2));
    }
    if k == 2 && n > 3 {
        let r_star = (2.0 * (n as f64 + 1.0) - (((n + 1) * (n + 1) - 3 * n) as f64).sqrt()) / 3.0;
        let g = |r: u64| (n - r + 1) * (n - r) * (r - 1) / 2;
        return Some(BigUint::from(g(r_star.floor() as u64).max(g(r_star.ceil() as u64))));
    }
    None
}

/// Chain-length lower bound for T_n: Σ_k F(n,k) k! - 1. With `use_exact_f`
/// the F values come from the branch-and-bound search (erroring if any cell
/// fails to complete within the budget); otherwise max(lb1, lb2) is used.
pub fn tn_lower_bound(n: u64, use_exact_f: bool, budget: &SearchBudget) -> Result<BigUint> {
    let mut total = BigUint::zero();
    let mut fact = BigUint::one();
    for k in 1..=n {
        fact *= k;
        let f = if use_exact_f {
            let r = max_content_exact(n as usize, k as usize, false, budget);
            if r.status != SearchStatus::Exact {
                return Err(SemiError::MissingExactValues(format!(
                    "F({n},{k}) search incomplete after {} nodes",
                    r.nodes_explored
                )));
            }
            BigUint::from(r.optimum)
        } else {
            league_lb1(n, k).max(league_lb2(n, k))
        };
        total += f * &fact;
    }
    // T_1 degenerates to total 0; clamp the -1
    Ok(if total.is_zero() { total } else { total - 1u32 })
}

/// Chain-length lower bound for O_n: raw value C(2n-3,n) - 1 (which is -1
/// at n=2) together with its clamp to zero.
pub fn on_lower_bound(n: u64) -> (BigInt, BigUint) {
    assert!(n >= 2);
    let raw = BigInt::from(binomial(2 * n - 3, n)) - BigInt::one();
    let clamped = if raw.is_negative() {
        BigUint::zero()
    } else {
        raw.to_biguint().unwrap()
    };
    (raw, clamped)
}

/// Exact expected rank of a uniformly random map in T_n:
/// E(n) = n [1 - (1 - 1/n)^n].
pub fn rank_expectation(n: u64) -> BigRational {
    assert!(n >= 1);
    let nn = BigRational::from(BigInt::from(n));
    let p = (BigRational::one() - BigRational::one() / &nn).pow(n as i32);
    &nn * (BigRational::one() - p)
}

/// Exact variance of the rank:
/// V(n) = n [(1-1/n)^n - (1-2/n)^n] + n² [(1-2/n)^n - (1-1/n)^{2n}].
pub fn rank_variance(n: u64) -> BigRational {
    assert!(n >= 1);
    let nn = BigRational::from(BigInt::from(n));
    let one = BigRational::one();
    let a = (&one - &one / &nn).pow(n as i32);
    let b = (&one - BigRational::from(BigInt::from(2)) / &nn).pow(n as i32);
    let a2 = (&one - &one / &nn).pow(2 * n as i32);
    &nn * (&a - &b) + &nn * &nn * (&b - &a2)
}

/// The null subsemigroup of T_n carved out by a league at rank k, together
/// with a chain certificate: the ideal of maps of rank below k, then one
/// league map at a time.
pub struct NullChain {
    pub table: CayleyTable,
    pub members: ElementSet,
    pub certificate: ChainCertificate,
}

pub fn build_null_from_league(n: usize, league: &League) -> Result<NullChain> {
    if n > 5 {
        return Err(SemiError::TableTooLarge { n });
    }
    if league.n != n || league.k < 2 || league.k > n {
        return Err(SemiError::MalformedInput(format!(
            "league shape ({}, {}) unusable in T_{n}",
            league.n, league.k
        )));
    }
    if !league_check(league) {
        return Err(SemiError::MalformedInput("not a league".into()));
    }
    let table = build_family(&FamilySpec::FullTransformation(n))?;
    let k = league.k;
    let subset_masks: Vec<u64> = league
        .subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();

    let mut ideal = ElementSet::empty(table.size());
    let mut members = ElementSet::empty(table.size());
    let mut images = vec![0usize; n];
    for e in 0..table.size() {
        // decode the map in the same digit order used by tn_map_index
        let mut rest = e;
        for i in (0..n).rev() {
            images[i] = rest % n;
            rest /= n;
        }
        debug_assert_eq!(tn_map_index(n, &images), e);
        let image_mask = images.iter().fold(0u64, |m, &x| m | 1 << x);
        let rank = image_mask.count_ones() as usize;
        if rank < k {
            ideal.insert(e);
        } else if rank == k
            && subset_masks.contains(&image_mask)
            && league
                .partitions
                .contains(&SetPartition::from_block_ids(&images))
        {
            members.insert(e);
        }
    }
    let mut subsets = vec![ideal.clone()];
    let mut acc = ideal;
    for e in members.iter() {
        acc.insert(e);
        subsets.push(acc.clone());
    }
    Ok(NullChain {
        table,
        members,
        certificate: ChainCertificate {
            kind: ChainKind::Subsemigroup,
            subsets,
        },
    })
}
