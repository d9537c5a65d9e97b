use std::collections::HashMap;

use crate::error::{Result, SemiError};

use super::table::{CayleyTable, ElementSet};

/// Green's L/R/H/J equivalence classes of a finite semigroup, together with
/// the strict partial order on J-classes.
///
/// Classes are computed from principal ideals with an identity adjoined
/// virtually: `S^1 x = {x} ∪ Sx` and so on. Class ids are contiguous from 0,
/// in order of the least element of each class.
#[derive(Clone, Debug)]
pub struct GreensStructure {
    pub l_class_of: Vec<usize>,
    pub r_class_of: Vec<usize>,
    pub h_class_of: Vec<usize>,
    pub j_class_of: Vec<usize>,
    /// `j_order[a].contains(b)` iff the principal ideal of class `a` is
    /// strictly contained in that of class `b` (irreflexive, transitive).
    pub j_below: Vec<Vec<usize>>,
    pub j_class_members: Vec<ElementSet>,
}

impl GreensStructure {
    pub fn j_class_count(&self) -> usize {
        self.j_class_members.len()
    }

    pub fn l_class_count(&self) -> usize {
        self.l_class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn r_class_count(&self) -> usize {
        self.r_class_of.iter().max().map_or(0, |m| m + 1)
    }

    /// Is J-class `a` strictly below `b` in the J-order?
    pub fn j_lt(&self, a: usize, b: usize) -> bool {
        self.j_below[a].contains(&b)
    }

    /// J-classes maximal in the J-order.
    pub fn maximal_j_classes(&self) -> Vec<usize> {
        (0..self.j_class_count())
            .filter(|&a| self.j_below[a].is_empty())
            .collect()
    }

    /// Number of distinct L-classes (resp. R-classes) inside a J-class.
    pub fn lr_counts_in_j(&self, j: usize) -> (usize, usize) {
        let mut ls = std::collections::HashSet::new();
        let mut rs = std::collections::HashSet::new();
        for x in self.j_class_members[j].iter() {
            ls.insert(self.l_class_of[x]);
            rs.insert(self.r_class_of[x]);
        }
        (ls.len(), rs.len())
    }
}

fn classes_from_keys(keys: Vec<ElementSet>) -> Vec<usize> {
    let mut ids: HashMap<ElementSet, usize> = HashMap::new();
    let mut out = Vec::with_capacity(keys.len());
    for key in keys {
        let next = ids.len();
        out.push(*ids.entry(key).or_insert(next));
    }
    out
}

/// Compute Green's L/R/H/J structure of `table`.
pub fn greens_structure(table: &CayleyTable) -> GreensStructure {
    let n = table.size();

    // principal right ideals xS^1 = {x} ∪ xS (already right ideals)
    let right_ideals: Vec<ElementSet> = (0..n)
        .map(|x| {
            let mut s = ElementSet::singleton(n, x);
            for y in 0..n {
                s.insert(table.product(x, y));
            }
            s
        })
        .collect();
    let left_ideals: Vec<ElementSet> = (0..n)
        .map(|x| {
            let mut s = ElementSet::singleton(n, x);
            for y in 0..n {
                s.insert(table.product(y, x));
            }
            s
        })
        .collect();
    // S^1 x S^1 = {x} ∪ xS ∪ Sx ∪ SxS
    let two_sided: Vec<ElementSet> = (0..n)
        .map(|x| {
            let mut s = right_ideals[x].clone();
            s.union_with(&left_ideals[x]);
            for a in 0..n {
                let ax = table.product(a, x);
                for b in 0..n {
                    s.insert(table.product(ax, b));
                }
            }
            s
        })
        .collect();

    let r_class_of = classes_from_keys(right_ideals);
    let l_class_of = classes_from_keys(left_ideals);

    // H = L ∩ R
    let h_keys: Vec<(usize, usize)> = (0..n).map(|x| (l_class_of[x], r_class_of[x])).collect();
    let mut h_ids: HashMap<(usize, usize), usize> = HashMap::new();
    let h_class_of: Vec<usize> = h_keys
        .into_iter()
        .map(|key| {
            let next = h_ids.len();
            *h_ids.entry(key).or_insert(next)
        })
        .collect();

    let j_class_of = classes_from_keys(two_sided.clone());
    let j_count = j_class_of.iter().max().map_or(0, |m| m + 1);
    let mut j_class_members = vec![ElementSet::empty(n); j_count];
    let mut j_ideal: Vec<Option<ElementSet>> = vec![None; j_count];
    for x in 0..n {
        let j = j_class_of[x];
        j_class_members[j].insert(x);
        if j_ideal[j].is_none() {
            j_ideal[j] = Some(two_sided[x].clone());
        }
    }
    let j_ideal: Vec<ElementSet> = j_ideal.into_iter().map(Option::unwrap).collect();

    let j_below: Vec<Vec<usize>> = (0..j_count)
        .map(|a| {
            (0..j_count)
                .filter(|&b| a != b && j_ideal[a].is_proper_subset(&j_ideal[b]))
                .collect()
        })
        .collect();

    GreensStructure {
        l_class_of,
        r_class_of,
        h_class_of,
        j_class_of,
        j_below,
        j_class_members,
    }
}

/// The principal factor of a J-class: the elements of the class plus an
/// adjoined zero (the last index), with products leaving the class sent to
/// zero. The zero is present even when the class is minimal.
pub fn principal_factor(table: &CayleyTable, greens: &GreensStructure, j_class: usize) -> CayleyTable {
    let members = greens.j_class_members[j_class].indices();
    let m = members.len();
    let index_of: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let size = m + 1;
    let mut flat = Vec::with_capacity(size * size);
    for a in 0..size {
        for b in 0..size {
            if a == m || b == m {
                flat.push(m);
                continue;
            }
            let p = table.product(members[a], members[b]);
            flat.push(*index_of.get(&p).unwrap_or(&m));
        }
    }
    let mut t = super::table::validate_table(size, flat)
        .expect("principal factor of an associative table is associative");
    let mut labels: Vec<String> = members.iter().map(|&x| table.label(x)).collect();
    labels.push("0".to_string());
    t.set_labels(labels);
    t
}

/// The Rees quotient `S/I`: elements of `S \ I` plus an adjoined zero (the
/// last index); products landing in `I` are sent to zero. `I` must be a
/// nonempty ideal.
pub fn rees_quotient(table: &CayleyTable, ideal: &ElementSet) -> Result<CayleyTable> {
    let n = table.size();
    if ideal.is_empty() {
        return Err(SemiError::NotAnIdeal { element: 0 });
    }
    for x in ideal.iter() {
        for y in 0..n {
            if !ideal.contains(table.product(x, y)) {
                return Err(SemiError::NotAnIdeal { element: x });
            }
            if !ideal.contains(table.product(y, x)) {
                return Err(SemiError::NotAnIdeal { element: x });
            }
        }
    }
    let survivors: Vec<usize> = (0..n).filter(|&x| !ideal.contains(x)).collect();
    let m = survivors.len();
    let index_of: HashMap<usize, usize> =
        survivors.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let size = m + 1;
    let mut flat = Vec::with_capacity(size * size);
    for a in 0..size {
        for b in 0..size {
            if a == m || b == m {
                flat.push(m);
                continue;
            }
            let p = table.product(survivors[a], survivors[b]);
            flat.push(*index_of.get(&p).unwrap_or(&m));
        }
    }
    let mut t = super::table::validate_table(size, flat)
        .expect("Rees quotient of an associative table is associative");
    let mut labels: Vec<String> = survivors.iter().map(|&x| table.label(x)).collect();
    labels.push("0".to_string());
    t.set_labels(labels);
    Ok(t)
}

/// Enumerate all nonempty ideals of `table` (practical for small tables
/// only; the search is over subsets grouped by J-class unions).
pub fn all_ideals(table: &CayleyTable, greens: &GreensStructure) -> Vec<ElementSet> {
    // An ideal is a downward-closed union of J-classes.
    let jc = greens.j_class_count();
    let mut out = Vec::new();
    for mask in 1u64..(1 << jc) {
        let chosen: Vec<usize> = (0..jc).filter(|&j| mask >> j & 1 == 1).collect();
        // downward closed: every class below a chosen class is chosen
        let ok = chosen.iter().all(|&j| {
            (0..jc).all(|k| !greens.j_lt(k, j) || mask >> k & 1 == 1)
        });
        if !ok {
            continue;
        }
        let mut set = ElementSet::empty(table.size());
        for &j in &chosen {
            set.union_with(&greens.j_class_members[j]);
        }
        out.push(set);
    }
    out
}
