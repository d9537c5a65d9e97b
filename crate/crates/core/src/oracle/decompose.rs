use serde::Serialize;

use crate::error::{Result, SemiError};
use crate::finsemi::{
    classify, greens_structure, is_closed, principal_factor, CayleyTable, ElementSet,
    GreensStructure,
};
use crate::grouplen::group_length;

use super::{longest_chain_exact, SearchBudget};

/// How each piece of a decomposition was resolved.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "node")]
pub enum DecompositionTrace {
    /// A piece resolved by a closed form or by the oracle.
    Leaf {
        kind: String,
        size: usize,
        length: usize,
    },
    /// A regular semigroup: sum of principal-factor lengths minus 1.
    RegularSum {
        length: usize,
        factors: Vec<DecompositionTrace>,
    },
    /// A maximal J-class peeled off as `l(S) = l(I) + l(S/I)`.
    Peel {
        length: usize,
        ideal: Box<DecompositionTrace>,
        factor: Box<DecompositionTrace>,
    },
}

impl DecompositionTrace {
    pub fn length(&self) -> usize {
        match self {
            DecompositionTrace::Leaf { length, .. }
            | DecompositionTrace::RegularSum { length, .. }
            | DecompositionTrace::Peel { length, .. } => *length,
        }
    }

    fn leaf(kind: &str, size: usize, length: usize) -> Self {
        DecompositionTrace::Leaf {
            kind: kind.to_string(),
            size,
            length,
        }
    }
}

/// Restrict the table to a closed subset.
pub(crate) fn sub_table(table: &CayleyTable, set: &ElementSet) -> CayleyTable {
    debug_assert!(is_closed(table, set));
    let members = set.indices();
    let index_of: std::collections::HashMap<usize, usize> =
        members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let m = members.len();
    let mut flat = Vec::with_capacity(m * m);
    for &a in &members {
        for &b in &members {
            flat.push(index_of[&table.product(a, b)]);
        }
    }
    let mut t = crate::finsemi::validate_table(m, flat)
        .expect("restriction of an associative table is associative");
    t.set_labels(members.iter().map(|&x| table.label(x)).collect());
    t
}

fn absorbing_zero(table: &CayleyTable) -> Option<usize> {
    let n = table.size();
    (0..n).find(|&z| (0..n).all(|x| table.product(z, x) == z && table.product(x, z) == z))
}

/// The maximal subgroup at an idempotent: its H-class, as a group table.
fn maximal_subgroup_at(table: &CayleyTable, greens: &GreensStructure, e: usize) -> CayleyTable {
    let n = table.size();
    let members: Vec<usize> = (0..n)
        .filter(|&x| {
            greens.l_class_of[x] == greens.l_class_of[e] && greens.r_class_of[x] == greens.r_class_of[e]
        })
        .collect();
    sub_table(table, &ElementSet::from_indices(n, &members))
}

fn find_idempotent_in(table: &CayleyTable, set: &ElementSet) -> Option<usize> {
    set.iter().find(|&x| table.product(x, x) == x)
}

/// Length of a semigroup via structural decomposition: ideal additivity and
/// the regular sum over principal factors, with closed-form leaves for
/// groups (with zero), Brandt and completely simple factors, and null
/// semigroups. Leaves matching no closed form fall back to the exhaustive
/// oracle under `budget`.
pub fn decompose_length(
    table: &CayleyTable,
    budget: &SearchBudget,
) -> Result<(usize, DecompositionTrace)> {
    let trace = decompose(table, budget)?;
    Ok((trace.length(), trace))
}

fn decompose(table: &CayleyTable, budget: &SearchBudget) -> Result<DecompositionTrace> {
    let n = table.size();
    if n == 1 {
        return Ok(DecompositionTrace::leaf("trivial", 1, 0));
    }
    let c = classify(table);
    if c.null {
        return Ok(DecompositionTrace::leaf("null", n, n - 1));
    }
    if c.group {
        let l = group_length(table).map_err(|e| not_decomposable(table, &e))?;
        return Ok(DecompositionTrace::leaf("group", n, l.length));
    }

    let greens = greens_structure(table);
    if greens.j_class_count() == 1 {
        if c.regular {
            // completely simple: l = #L + #R + l(G) - 2
            let e = find_idempotent_in(table, &table.full_set())
                .expect("a finite regular semigroup has an idempotent");
            let group = maximal_subgroup_at(table, &greens, e);
            let lg = group_length(&group).map_err(|e| not_decomposable(table, &e))?;
            let length = greens.l_class_count() + greens.r_class_count() + lg.length - 2;
            return Ok(DecompositionTrace::leaf("completely-simple", n, length));
        }
        return oracle_leaf(table, budget);
    }

    if c.regular {
        let mut factors = Vec::new();
        let mut total = 0usize;
        for j in 0..greens.j_class_count() {
            let factor = principal_factor(table, &greens, j);
            let t = factor_length(&factor, budget)?;
            total += t.length();
            factors.push(t);
        }
        return Ok(DecompositionTrace::RegularSum {
            length: total - 1,
            factors,
        });
    }

    // peel a maximal J-class: I = S \ J is an ideal, S/I is the principal factor
    let j = greens.maximal_j_classes()[0];
    let ideal_set = table.full_set().difference(&greens.j_class_members[j]);
    let factor = principal_factor(table, &greens, j);
    let factor_trace = factor_length(&factor, budget)?;
    let ideal_trace = decompose(&sub_table(table, &ideal_set), budget)?;
    Ok(DecompositionTrace::Peel {
        length: ideal_trace.length() + factor_trace.length(),
        ideal: Box::new(ideal_trace),
        factor: Box::new(factor_trace),
    })
}

/// Length of a principal factor (a semigroup with an absorbing zero).
fn factor_length(factor: &CayleyTable, budget: &SearchBudget) -> Result<DecompositionTrace> {
    let n = factor.size();
    let c = classify(factor);
    if c.null {
        return Ok(DecompositionTrace::leaf("null", n, n - 1));
    }
    if c.group {
        let l = group_length(factor).map_err(|e| not_decomposable(factor, &e))?;
        return Ok(DecompositionTrace::leaf("group", n, l.length));
    }
    if let Some(zero) = absorbing_zero(factor) {
        let nonzero = factor.full_set().difference(&ElementSet::singleton(n, zero));
        if is_closed(factor, &nonzero) {
            // adjoined zero is never hit: l(S ∪ {0}) = l(S) + 1
            let inner = decompose(&sub_table(factor, &nonzero), budget)?;
            return Ok(DecompositionTrace::Peel {
                length: inner.length() + 1,
                ideal: Box::new(DecompositionTrace::leaf("adjoined-zero", 1, 0)),
                factor: Box::new(inner),
            });
        }
        if c.inverse {
            // finite inverse 0-simple factor: a Brandt semigroup B(G, n)
            let greens = greens_structure(factor);
            let e = find_idempotent_in(factor, &nonzero)
                .expect("an inverse semigroup has nonzero idempotents");
            let group = maximal_subgroup_at(factor, &greens, e);
            let lg = group_length(&group).map_err(|e| not_decomposable(factor, &e))?;
            let top = greens.j_class_of[e];
            let (_, r_count) = greens.lr_counts_in_j(top);
            let g = group.size();
            let length = r_count * (lg.length + 1) + r_count * (r_count - 1) / 2 * g + r_count - 1;
            return Ok(DecompositionTrace::leaf("brandt", n, length));
        }
    }
    oracle_leaf(factor, budget)
}

fn oracle_leaf(table: &CayleyTable, budget: &SearchBudget) -> Result<DecompositionTrace> {
    match longest_chain_exact(table, budget) {
        Ok((l, _)) => Ok(DecompositionTrace::leaf("oracle", table.size(), l)),
        Err(e) => Err(not_decomposable(table, &e)),
    }
}

fn not_decomposable(table: &CayleyTable, cause: &SemiError) -> SemiError {
    SemiError::NotDecomposable(format!(
        "factor of size {} has no closed form: {cause}",
        table.size()
    ))
}
