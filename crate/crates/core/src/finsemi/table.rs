use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SemiError};

/// A finite semigroup given by its multiplication table.
///
/// Elements are the indices `0..size`. The table is validated for
/// associativity on construction; see [`validate_table`].
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    size: usize,
    product: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CayleyTable(size={})", self.size)
    }
}

impl CayleyTable {
    pub fn size(&self) -> usize {
        self.size
    }

    /// The product of elements `a` and `b`.
    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.product[a * self.size + b]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(ls) => ls[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.size);
        self.labels = Some(labels);
    }

    /// All elements as an [`ElementSet`].
    pub fn full_set(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.size);
        for x in 0..self.size {
            s.insert(x);
        }
        s
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|a| self.product[a * self.size..(a + 1) * self.size].to_vec())
            .collect()
    }

    /// Serialise to the text format: first line `n`, then `n` rows of
    /// whitespace-separated entries, then optional `# label` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.size);
        for a in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|b| self.product(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if let Some(labels) = &self.labels {
            for l in labels {
                out.push_str(&format!("# {l}\n"));
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    size: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Serialize for CayleyTable {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            size: self.size,
            table: self.rows(),
            labels: self.labels.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CayleyTable {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = TableJson::deserialize(de)?;
        table_from_rows(raw.size, raw.table, raw.labels).map_err(serde::de::Error::custom)
    }
}

fn table_from_rows(size: usize, rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<CayleyTable> {
    if rows.len() != size {
        return Err(SemiError::MalformedInput(format!(
            "expected {size} rows, got {}",
            rows.len()
        )));
    }
    let mut flat = Vec::with_capacity(size * size);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != size {
            return Err(SemiError::MalformedInput(format!(
                "row {i} has {} entries, expected {size}",
                row.len()
            )));
        }
        flat.extend_from_slice(row);
    }
    let mut t = validate_table(size, flat)?;
    if let Some(labels) = labels {
        if labels.len() != size {
            return Err(SemiError::MalformedInput(format!(
                "expected {size} labels, got {}",
                labels.len()
            )));
        }
        t.set_labels(labels);
    }
    Ok(t)
}

/// Build a [`CayleyTable`] from a flat row-major table, checking that every
/// entry is in range and that the operation is associative. Associativity is
/// verified with `size^3` multiplications; the error carries a witness
/// triple.
pub fn validate_table(size: usize, product: Vec<usize>) -> Result<CayleyTable> {
    if size == 0 {
        return Err(SemiError::MalformedInput("size must be at least 1".into()));
    }
    if product.len() != size * size {
        return Err(SemiError::MalformedInput(format!(
            "expected {} entries, got {}",
            size * size,
            product.len()
        )));
    }
    for a in 0..size {
        for b in 0..size {
            let v = product[a * size + b];
            if v >= size {
                return Err(SemiError::IndexOutOfRange {
                    row: a,
                    col: b,
                    value: v,
                    size,
                });
            }
        }
    }
    let p = |a: usize, b: usize| product[a * size + b];
    for a in 0..size {
        for b in 0..size {
            let ab = p(a, b);
            for c in 0..size {
                if p(ab, c) != p(a, p(b, c)) {
                    return Err(SemiError::NonAssociative(a, b, c));
                }
            }
        }
    }
    Ok(CayleyTable {
        size,
        product,
        labels: None,
    })
}

/// Parse the plain-text table format: first line `n`, then `n` lines of `n`
/// whitespace-separated 0-based entries, then optional `# label` lines.
pub fn parse_table_text(input: &str) -> Result<CayleyTable> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let size: usize = lines
        .next()
        .ok_or_else(|| SemiError::MalformedInput("empty input".into()))?
        .trim()
        .parse()
        .map_err(|e| SemiError::MalformedInput(format!("bad size line: {e}")))?;
    let mut rows = Vec::with_capacity(size);
    let mut labels = Vec::new();
    for line in lines {
        let line = line.trim();
        if let Some(label) = line.strip_prefix('#') {
            labels.push(label.trim().to_string());
            continue;
        }
        if !labels.is_empty() {
            return Err(SemiError::MalformedInput(
                "table rows may not follow label lines".into(),
            ));
        }
        let row: std::result::Result<Vec<usize>, _> =
            line.split_whitespace().map(str::parse).collect();
        rows.push(row.map_err(|e| SemiError::MalformedInput(format!("bad table row: {e}")))?);
    }
    table_from_rows(size, rows, if labels.is_empty() { None } else { Some(labels) })
}

/// Parse the JSON table format `{"size": n, "table": [[...],...], "labels": [...]}`.
pub fn parse_table_json(input: &str) -> Result<CayleyTable> {
    let raw: TableJson = serde_json::from_str(input)
        .map_err(|e| SemiError::MalformedInput(format!("bad JSON: {e}")))?;
    table_from_rows(raw.size, raw.table, raw.labels)
}

/// A subset of the elements of a fixed [`CayleyTable`], stored as a
/// bit-vector. Ordering is by cardinality first, then by the bit pattern,
/// which gives the canonical order used for deterministic witnesses.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    len: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl ElementSet {
    pub fn empty(len: usize) -> Self {
        ElementSet {
            len,
            bits: vec![0; len.div_ceil(64)],
        }
    }

    pub fn singleton(len: usize, x: usize) -> Self {
        let mut s = Self::empty(len);
        s.insert(x);
        s
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(len);
        for &x in indices {
            s.insert(x);
        }
        s
    }

    /// Universe size (not the cardinality).
    pub fn universe(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.bits[x / 64] >> (x % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        debug_assert!(x < self.len);
        let w = &mut self.bits[x / 64];
        let mask = 1u64 << (x % 64);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn remove(&mut self, x: usize) {
        self.bits[x / 64] &= !(1u64 << (x % 64));
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &ElementSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            len: self.len,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            len: self.len,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&x| self.contains(x))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.count()
            .cmp(&other.count())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

/// The smallest closed superset of `seed`: the subsemigroup generated by the
/// seed elements. Extensive, monotone, and idempotent.
pub fn closure(table: &CayleyTable, seed: &ElementSet) -> ElementSet {
    let mut result = seed.clone();
    let mut frontier: Vec<usize> = seed.indices();
    let mut members: Vec<usize> = frontier.clone();
    while let Some(x) = frontier.pop() {
        // products with everything currently in the set, both ways round
        let mut i = 0;
        while i < members.len() {
            let y = members[i];
            for p in [table.product(x, y), table.product(y, x)] {
                if result.insert(p) {
                    frontier.push(p);
                    members.push(p);
                }
            }
            i += 1;
        }
    }
    result
}

/// `members * members ⊆ members`?
pub fn is_closed(table: &CayleyTable, set: &ElementSet) -> bool {
    let members = set.indices();
    for &a in &members {
        for &b in &members {
            if !set.contains(table.product(a, b)) {
                return false;
            }
        }
    }
    true
}
