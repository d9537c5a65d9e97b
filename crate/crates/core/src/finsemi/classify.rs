use super::table::CayleyTable;

/// Structural predicates of a finite semigroup, decided directly from the
/// definitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub regular: bool,
    pub inverse: bool,
    pub completely_regular: bool,
    pub band: bool,
    pub null: bool,
    pub group: bool,
    /// `inverse_of[x]` is the unique inverse of `x` when the semigroup is
    /// inverse.
    pub inverse_of: Option<Vec<usize>>,
    /// The identity element when the semigroup is a group (or a monoid).
    pub identity: Option<usize>,
    /// The zero of a null semigroup.
    pub zero: Option<usize>,
}

/// Decide the structural predicates of `table`.
pub fn classify(table: &CayleyTable) -> Classification {
    let n = table.size();

    let regular = (0..n).all(|x| (0..n).any(|y| xyx(table, x, y) == x));

    // unique pseudo-inverse: x y x = x and y x y = y for exactly one y
    let mut inverse_of = Vec::with_capacity(n);
    let mut inverse = true;
    for x in 0..n {
        let mut found = None;
        for y in 0..n {
            if xyx(table, x, y) == x && xyx(table, y, x) == y {
                if found.is_some() {
                    found = None;
                    inverse = false;
                    break;
                }
                found = Some(y);
            }
        }
        match found {
            Some(y) if inverse => inverse_of.push(y),
            _ => {
                inverse = false;
                break;
            }
        }
    }

    // x lies in a subgroup iff its monogenic index is 1
    let completely_regular = (0..n).all(|x| monogenic_index_period(table, x).0 == 1);
    let band = (0..n).all(|x| table.product(x, x) == x);

    let zero = if n >= 1 {
        let z = table.product(0, 0);
        if (0..n).all(|x| (0..n).all(|y| table.product(x, y) == z)) {
            Some(z)
        } else {
            None
        }
    } else {
        None
    };
    let null = zero.is_some();

    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table.product(e, x) == x && table.product(x, e) == x));
    let group = match identity {
        Some(e) => (0..n).all(|x| {
            (0..n).any(|y| table.product(x, y) == e && table.product(y, x) == e)
        }),
        None => false,
    };

    Classification {
        regular,
        inverse,
        completely_regular,
        band,
        null,
        group,
        inverse_of: if inverse { Some(inverse_of) } else { None },
        identity,
        zero,
    }
}

#[inline]
fn xyx(table: &CayleyTable, x: usize, y: usize) -> usize {
    table.product(table.product(x, y), x)
}

/// The least `(m, r)` with `m, r >= 1` and `x^(m+r) = x^m`.
pub fn monogenic_index_period(table: &CayleyTable, x: usize) -> (usize, usize) {
    // positions[p] = exponent at which power p was first seen (1-based)
    let mut seen: Vec<Option<usize>> = vec![None; table.size()];
    let mut power = x;
    let mut exp = 1usize;
    loop {
        match seen[power] {
            Some(first) => {
                let m = first;
                let r = exp - first;
                return (m, r);
            }
            None => {
                seen[power] = Some(exp);
                power = table.product(power, x);
                exp += 1;
            }
        }
    }
}
