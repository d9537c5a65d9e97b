use crate::error::{Result, SemiError};

use super::table::CayleyTable;

/// Default cap on the number of elements a constructed family table may have.
pub const DEFAULT_SIZE_CAP: usize = 10_000;

/// A named finite semigroup family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// All maps on an `n`-chain, `n^n` elements.
    FullTransformation(usize),
    /// All order-preserving (non-decreasing) maps on an `n`-chain,
    /// `C(2n-1, n)` elements.
    OrderPreserving(usize),
    /// All partial injective maps on `n` points, `sum C(n,i)^2 i!` elements.
    SymmetricInverse(usize),
    /// Partial injective order-preserving maps on an `n`-chain.
    Poi(usize),
    /// Partial injective orientation-preserving maps on an `n`-chain.
    Popi(usize),
    /// Brandt semigroup `B(G, n)` over the given group table, `n^2|G| + 1`
    /// elements.
    Brandt(Box<CayleyTable>, usize),
    /// Rees matrix semigroup `M[I, G, L; P]` without zero: elements
    /// `(i, g, l)`, product `(i, g, l)(j, h, m) = (i, g p[l][j] h, m)`.
    /// `matrix` is `cols x rows`, entries are group element indices.
    ReesMatrixOverGroup {
        group: Box<CayleyTable>,
        rows: usize,
        cols: usize,
        matrix: Vec<Vec<usize>>,
    },
    /// Null semigroup on `m` elements; element 0 is the zero.
    Null(usize),
    CyclicGroup(usize),
    SymmetricGroup(usize),
    /// Monogenic semigroup with index `m` and period `r`, `m + r - 1`
    /// elements.
    Monogenic(usize, usize),
    /// The 6-element free band on two generators.
    FreeBand2,
}

/// Build the table for a named family under the default size cap.
pub fn build_family(spec: &FamilySpec) -> Result<CayleyTable> {
    build_family_capped(spec, DEFAULT_SIZE_CAP)
}

/// Build the table for a named family, failing if it would exceed `cap`
/// elements.
pub fn build_family_capped(spec: &FamilySpec, cap: usize) -> Result<CayleyTable> {
    let table = match spec {
        FamilySpec::FullTransformation(n) => full_transformation(*n, cap)?,
        FamilySpec::OrderPreserving(n) => order_preserving(*n, cap)?,
        FamilySpec::SymmetricInverse(n) => partial_maps(*n, cap, PartialKind::All)?,
        FamilySpec::Poi(n) => partial_maps(*n, cap, PartialKind::OrderPreserving)?,
        FamilySpec::Popi(n) => partial_maps(*n, cap, PartialKind::OrientationPreserving)?,
        FamilySpec::Brandt(group, n) => brandt(group, *n, cap)?,
        FamilySpec::ReesMatrixOverGroup {
            group,
            rows,
            cols,
            matrix,
        } => rees_matrix(group, *rows, *cols, matrix, cap)?,
        FamilySpec::Null(m) => null_semigroup(*m, cap)?,
        FamilySpec::CyclicGroup(n) => cyclic_group(*n, cap)?,
        FamilySpec::SymmetricGroup(n) => symmetric_group(*n, cap)?,
        FamilySpec::Monogenic(m, r) => monogenic(*m, *r, cap)?,
        FamilySpec::FreeBand2 => free_band_2(),
    };
    Ok(table)
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(SemiError::SizeCapExceeded { size, cap })
    } else {
        Ok(())
    }
}

fn check_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(SemiError::UnsupportedFamily(format!(
            "{what} must be at least 1"
        )))
    } else {
        Ok(())
    }
}

fn table_from_product(size: usize, product: impl Fn(usize, usize) -> usize) -> CayleyTable {
    let mut flat = Vec::with_capacity(size * size);
    for a in 0..size {
        for b in 0..size {
            flat.push(product(a, b));
        }
    }
    super::table::validate_table(size, flat).expect("family construction produced a bad table")
}

fn map_label(f: &[usize]) -> String {
    let imgs: Vec<String> = f.iter().map(|&v| (v + 1).to_string()).collect();
    format!("[{}]", imgs.join(" "))
}

/// Index of a full transformation in the lexicographic enumeration of `T_n`.
pub fn tn_map_index(n: usize, f: &[usize]) -> usize {
    f.iter().fold(0, |acc, &v| acc * n + v)
}

fn full_transformation(n: usize, cap: usize) -> Result<CayleyTable> {
    check_positive(n, "n")?;
    let size = n.checked_pow(n as u32).ok_or(SemiError::TableTooLarge { n })?;
    check_cap(size, cap)?;
    // maps in lexicographic order of their image tuples
    let mut maps: Vec<Vec<usize>> = Vec::with_capacity(size);
    let mut cur = vec![0usize; n];
    loop {
        maps.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if cur[i] + 1 < n {
                cur[i] += 1;
                for v in cur.iter_mut().skip(i + 1) {
                    *v = 0;
                }
                break;
            } else if i == 0 {
                let labels = maps.iter().map(|f| map_label(f)).collect();
                return Ok(compose_table(&maps, labels));
            }
        }
    }
}

/// Product `f * g` is "apply f, then g": `(f*g)(x) = g(f(x))`.
fn compose_table(maps: &[Vec<usize>], labels: Vec<String>) -> CayleyTable {
    use std::collections::HashMap;
    let index: HashMap<&[usize], usize> = maps
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let size = maps.len();
    let mut t = table_from_product(size, |a, b| {
        let composed: Vec<usize> = maps[a].iter().map(|&x| maps[b][x]).collect();
        index[composed.as_slice()]
    });
    t.set_labels(labels);
    t
}

fn order_preserving(n: usize, cap: usize) -> Result<CayleyTable> {
    check_positive(n, "n")?;
    let mut maps = Vec::new();
    let mut cur = vec![0usize; n];
    gen_monotone(n, 0, 0, &mut cur, &mut maps);
    check_cap(maps.len(), cap)?;
    let labels = maps.iter().map(|f| map_label(f)).collect();
    Ok(compose_table(&maps, labels))
}

fn gen_monotone(n: usize, pos: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pos == n {
        out.push(cur.clone());
        return;
    }
    for v in min..n {
        cur[pos] = v;
        gen_monotone(n, pos + 1, v, cur, out);
    }
}

#[derive(Clone, Copy, PartialEq)]
enum PartialKind {
    All,
    OrderPreserving,
    OrientationPreserving,
}

/// Image sequence over the sorted domain, used for the orientation test.
fn image_sequence(f: &[Option<usize>]) -> Vec<usize> {
    f.iter().filter_map(|v| *v).collect()
}

fn is_orientation_preserving(seq: &[usize]) -> bool {
    // cyclic rotation of an increasing sequence: at most one cyclic descent
    let k = seq.len();
    if k <= 2 {
        return true;
    }
    let descents = (0..k).filter(|&i| seq[i] > seq[(i + 1) % k]).count();
    descents <= 1
}

fn partial_maps(n: usize, cap: usize, kind: PartialKind) -> Result<CayleyTable> {
    check_positive(n, "n")?;
    let mut maps: Vec<Vec<Option<usize>>> = Vec::new();
    let mut cur = vec![None; n];
    let mut used = vec![false; n];
    gen_partial(n, 0, &mut cur, &mut used, kind, &mut maps);
    check_cap(maps.len(), cap)?;

    use std::collections::HashMap;
    let index: HashMap<&[Option<usize>], usize> = maps
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let size = maps.len();
    let mut t = table_from_product(size, |a, b| {
        let composed: Vec<Option<usize>> = maps[a]
            .iter()
            .map(|&x| x.and_then(|x| maps[b][x]))
            .collect();
        index[composed.as_slice()]
    });
    let labels = maps
        .iter()
        .map(|f| {
            let parts: Vec<String> = f
                .iter()
                .map(|v| match v {
                    Some(v) => (v + 1).to_string(),
                    None => "-".to_string(),
                })
                .collect();
            format!("[{}]", parts.join(" "))
        })
        .collect();
    t.set_labels(labels);
    Ok(t)
}

fn gen_partial(
    n: usize,
    pos: usize,
    cur: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    kind: PartialKind,
    out: &mut Vec<Vec<Option<usize>>>,
) {
    if pos == n {
        let keep = match kind {
            PartialKind::All => true,
            PartialKind::OrderPreserving => image_sequence(cur).windows(2).all(|w| w[0] < w[1]),
            PartialKind::OrientationPreserving => is_orientation_preserving(&image_sequence(cur)),
        };
        if keep {
            out.push(cur.clone());
        }
        return;
    }
    cur[pos] = None;
    gen_partial(n, pos + 1, cur, used, kind, out);
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            cur[pos] = Some(v);
            gen_partial(n, pos + 1, cur, used, kind, out);
            cur[pos] = None;
            used[v] = false;
        }
    }
}

fn group_identity(group: &CayleyTable) -> Result<usize> {
    (0..group.size())
        .find(|&e| (0..group.size()).all(|x| group.product(e, x) == x && group.product(x, e) == x))
        .ok_or(SemiError::NotAGroup)
}

fn brandt(group: &CayleyTable, n: usize, cap: usize) -> Result<CayleyTable> {
    check_positive(n, "n")?;
    group_identity(group)?;
    let g = group.size();
    let size = n * n * g + 1;
    check_cap(size, cap)?;
    // element 0 is the zero; (i, x, j) is 1 + ((i*n + j)*g + x)
    let enc = |i: usize, x: usize, j: usize| 1 + (i * n + j) * g + x;
    let mut t = table_from_product(size, |a, b| {
        if a == 0 || b == 0 {
            return 0;
        }
        let (ra, xa, ca) = ((a - 1) / g / n, (a - 1) % g, (a - 1) / g % n);
        let (rb, xb, cb) = ((b - 1) / g / n, (b - 1) % g, (b - 1) / g % n);
        if ca == rb {
            enc(ra, group.product(xa, xb), cb)
        } else {
            0
        }
    });
    let mut labels = vec!["0".to_string()];
    labels.resize(size, String::new());
    for i in 0..n {
        for j in 0..n {
            for x in 0..g {
                labels[enc(i, x, j)] = format!("({},{},{})", i + 1, group.label(x), j + 1);
            }
        }
    }
    t.set_labels(labels);
    Ok(t)
}

fn rees_matrix(
    group: &CayleyTable,
    rows: usize,
    cols: usize,
    matrix: &[Vec<usize>],
    cap: usize,
) -> Result<CayleyTable> {
    check_positive(rows, "rows")?;
    check_positive(cols, "cols")?;
    group_identity(group)?;
    let g = group.size();
    if matrix.len() != cols || matrix.iter().any(|row| row.len() != rows) {
        return Err(SemiError::UnsupportedFamily(format!(
            "sandwich matrix must be {cols} x {rows}"
        )));
    }
    for row in matrix {
        for &e in row {
            if e >= g {
                return Err(SemiError::UnsupportedFamily(format!(
                    "sandwich entry {e} out of range for group of order {g}"
                )));
            }
        }
    }
    let size = rows * cols * g;
    check_cap(size, cap)?;
    // (i, x, l) encoded as (i*cols + l)*g + x
    let enc = |i: usize, x: usize, l: usize| (i * cols + l) * g + x;
    Ok(table_from_product(size, |a, b| {
        let (ia, xa, la) = (a / g / cols, a % g, a / g % cols);
        let (ib, xb, lb) = (b / g / cols, b % g, b / g % cols);
        let p = matrix[la][ib];
        enc(ia, group.product(group.product(xa, p), xb), lb)
    }))
}

fn null_semigroup(m: usize, cap: usize) -> Result<CayleyTable> {
    check_positive(m, "m")?;
    check_cap(m, cap)?;
    Ok(table_from_product(m, |_, _| 0))
}

fn cyclic_group(n: usize, cap: usize) -> Result<CayleyTable> {
    check_positive(n, "n")?;
    check_cap(n, cap)?;
    Ok(table_from_product(n, |a, b| (a + b) % n))
}

fn symmetric_group(n: usize, cap: usize) -> Result<CayleyTable> {
    check_positive(n, "n")?;
    let size: usize = (1..=n).product();
    check_cap(size, cap)?;
    let mut perms: Vec<Vec<usize>> = Vec::with_capacity(size);
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        perms.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    let labels = perms.iter().map(|p| map_label(p)).collect();
    Ok(compose_table(&perms, labels))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn monogenic(m: usize, r: usize, cap: usize) -> Result<CayleyTable> {
    check_positive(m, "index")?;
    check_positive(r, "period")?;
    let size = m + r - 1;
    check_cap(size, cap)?;
    // element k represents s^(k+1); exponents at least m wrap with period r
    let reduce = |e: usize| if e <= size { e } else { m + (e - m) % r };
    let mut t = table_from_product(size, |a, b| reduce(a + 1 + b + 1) - 1);
    t.set_labels((1..=size).map(|e| format!("s^{e}")).collect());
    Ok(t)
}

/// The free band on two generators: `{a, b, ab, ba, aba, bab}`. A word in a
/// two-generator band is determined by its content together with its first
/// and last letters, which is how the products are computed here.
fn free_band_2() -> CayleyTable {
    // (content mask over {a,b}, first letter, last letter)
    const ELTS: [(u8, u8, u8); 6] = [
        (0b01, 0, 0), // a
        (0b10, 1, 1), // b
        (0b11, 0, 1), // ab
        (0b11, 1, 0), // ba
        (0b11, 0, 0), // aba
        (0b11, 1, 1), // bab
    ];
    let find = |c: u8, f: u8, l: u8| ELTS.iter().position(|&e| e == (c, f, l)).unwrap();
    let mut t = table_from_product(6, |x, y| {
        let (cx, fx, _) = ELTS[x];
        let (cy, _, ly) = ELTS[y];
        // concatenation: content is the union, first/last letters survive
        find(cx | cy, fx, ly)
    });
    t.set_labels(
        ["a", "b", "ab", "ba", "aba", "bab"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn t3_has_27_elements() {
        let t = build_family(&FamilySpec::FullTransformation(3)).unwrap();
        assert_eq!(t.size(), 27);
    }

    #[test]
    fn o3_has_10_elements() {
        // C(5,3) = 10, and cross-check by direct enumeration of monotone maps
        let t = build_family(&FamilySpec::OrderPreserving(3)).unwrap();
        assert_eq!(t.size(), 10);
        let direct = (0..27)
            .map(|i| [i / 9 % 3, i / 3 % 3, i % 3])
            .filter(|f| f[0] <= f[1] && f[1] <= f[2])
            .count();
        assert_eq!(t.size(), direct);
    }

    #[test]
    fn on_sizes_match_central_binomial() {
        for n in 1..=6u64 {
            let t = build_family(&FamilySpec::OrderPreserving(n as usize)).unwrap();
            assert_eq!(t.size() as u64, binom(2 * n - 1, n), "n = {n}");
        }
    }

    #[test]
    fn symmetric_inverse_sizes() {
        // |I_n| = sum C(n,i)^2 i!
        for n in 1..=4u64 {
            let t = build_family(&FamilySpec::SymmetricInverse(n as usize)).unwrap();
            let expected: u64 = (0..=n)
                .map(|i| binom(n, i) * binom(n, i) * (1..=i).product::<u64>())
                .sum();
            assert_eq!(t.size() as u64, expected, "n = {n}");
        }
    }

    #[test]
    fn brandt_over_trivial_group_has_5_elements() {
        let triv = build_family(&FamilySpec::CyclicGroup(1)).unwrap();
        let t = build_family(&FamilySpec::Brandt(Box::new(triv), 2)).unwrap();
        assert_eq!(t.size(), 5);
    }

    #[test]
    fn brandt_matrix_unit_products() {
        let triv = build_family(&FamilySpec::CyclicGroup(1)).unwrap();
        let t = build_family(&FamilySpec::Brandt(Box::new(triv), 2)).unwrap();
        // e_ij e_jk = e_ik, e_ij e_kl = 0 for j != k
        let e = |i: usize, j: usize| 1 + i * 2 + j;
        assert_eq!(t.product(e(0, 1), e(1, 0)), e(0, 0));
        assert_eq!(t.product(e(0, 1), e(0, 1)), 0);
        assert_eq!(t.product(0, e(1, 1)), 0);
    }

    #[test]
    fn null_and_monogenic_sizes() {
        assert_eq!(build_family(&FamilySpec::Null(7)).unwrap().size(), 7);
        assert_eq!(build_family(&FamilySpec::Monogenic(2, 3)).unwrap().size(), 4);
    }

    #[test]
    fn monogenic_2_1_products() {
        // {s, s^2} with s^3 = s^2
        let t = build_family(&FamilySpec::Monogenic(2, 1)).unwrap();
        assert_eq!(t.product(0, 0), 1);
        assert_eq!(t.product(1, 0), 1);
        assert_eq!(t.product(1, 1), 1);
    }

    #[test]
    fn size_cap_enforced() {
        assert!(matches!(
            build_family(&FamilySpec::FullTransformation(6)),
            Err(SemiError::SizeCapExceeded { .. })
        ));
        assert!(matches!(
            build_family_capped(&FamilySpec::FullTransformation(4), 100),
            Err(SemiError::SizeCapExceeded { .. })
        ));
        assert!(build_family_capped(&FamilySpec::FullTransformation(4), 300).is_ok());
    }

    #[test]
    fn free_band_2_is_idempotent() {
        let t = build_family(&FamilySpec::FreeBand2).unwrap();
        assert_eq!(t.size(), 6);
        for x in 0..6 {
            assert_eq!(t.product(x, x), x);
        }
    }

    #[test]
    fn popi_2_equals_symmetric_inverse_2() {
        let a = build_family(&FamilySpec::Popi(2)).unwrap();
        let b = build_family(&FamilySpec::SymmetricInverse(2)).unwrap();
        assert_eq!(a.size(), b.size());
    }

    #[test]
    fn poi_sizes_are_central_binomials() {
        // |POI_n| = C(2n, n)
        for n in 1..=5u64 {
            let t = build_family(&FamilySpec::Poi(n as usize)).unwrap();
            assert_eq!(t.size() as u64, binom(2 * n, n), "n = {n}");
        }
    }

    #[test]
    fn tn_map_index_matches_enumeration_order() {
        let t = build_family(&FamilySpec::FullTransformation(3)).unwrap();
        // maps are in lexicographic order, so [0,0,0] is 0 and [2,2,2] last
        assert_eq!(tn_map_index(3, &[0, 0, 0]), 0);
        assert_eq!(tn_map_index(3, &[2, 2, 2]), t.size() - 1);
        assert_eq!(tn_map_index(3, &[0, 1, 2]), 5);
    }
}
