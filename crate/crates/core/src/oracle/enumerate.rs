use std::collections::{HashSet, VecDeque};
use std::time::Instant;

use crate::error::{Result, SemiError};
use crate::finsemi::{closure, CayleyTable, ElementSet};

use super::SearchBudget;

/// Closure under products, and under the inverse map when given.
fn close(table: &CayleyTable, inverse_of: Option<&[usize]>, seed: &ElementSet) -> ElementSet {
    let mut current = seed.clone();
    loop {
        let mut next = closure(table, &current);
        if let Some(inv) = inverse_of {
            let mut with_inverses = next.clone();
            for x in next.iter() {
                with_inverses.insert(inv[x]);
            }
            next = with_inverses;
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Enumerate every nonempty closed subset of `table` (inverse-closed as well
/// when `inverse_of` is given), by extending known closed sets one element
/// at a time and closing. Every closed set is reachable this way because the
/// closure of a subset of a closed set stays inside it.
pub fn enumerate_closed_sets(
    table: &CayleyTable,
    inverse_of: Option<&[usize]>,
    budget: &SearchBudget,
) -> Result<Vec<ElementSet>> {
    let n = table.size();
    let start = Instant::now();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut queue: VecDeque<ElementSet> = VecDeque::new();

    let admit = |set: ElementSet,
                     seen: &mut HashSet<ElementSet>,
                     queue: &mut VecDeque<ElementSet>|
     -> Result<()> {
        if seen.contains(&set) {
            return Ok(());
        }
        if seen.len() >= budget.max_subsemigroups {
            return Err(SemiError::BudgetExceeded {
                enumerated: seen.len(),
            });
        }
        seen.insert(set.clone());
        queue.push_back(set);
        Ok(())
    };

    for x in 0..n {
        let c = close(table, inverse_of, &ElementSet::singleton(n, x));
        admit(c, &mut seen, &mut queue)?;
    }
    let mut steps = 0usize;
    while let Some(s) = queue.pop_front() {
        for x in 0..n {
            if s.contains(x) {
                continue;
            }
            let mut seed = s.clone();
            seed.insert(x);
            let extended = close(table, inverse_of, &seed);
            admit(extended, &mut seen, &mut queue)?;
        }
        steps += 1;
        if steps.is_multiple_of(64) && start.elapsed().as_millis() as u64 > budget.max_millis {
            return Err(SemiError::BudgetExceeded {
                enumerated: seen.len(),
            });
        }
    }
    Ok(seen.into_iter().collect())
}
