use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Error)]
pub enum SemiError {
    /// The multiplication table fails associativity at the witness triple.
    #[error("table is not associative: (a*b)*c != a*(b*c) for (a,b,c) = ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),

    /// A table entry is not a valid element index.
    #[error("table entry {value} at position ({row}, {col}) is out of range for size {size}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },

    /// Raw input dimensions are inconsistent.
    #[error("malformed table input: {0}")]
    MalformedInput(String),

    /// A family constructor would exceed the element cap.
    #[error("family would have {size} elements, exceeding the cap of {cap}")]
    SizeCapExceeded { size: usize, cap: usize },

    /// The requested family parameters are unsupported.
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    /// The given subset is not an ideal.
    #[error("the given subset is not an ideal (element {element} maps outside)")]
    NotAnIdeal { element: usize },

    /// The search budget was exhausted.
    #[error("search budget exceeded after enumerating {enumerated} subsemigroups")]
    BudgetExceeded { enumerated: usize },

    /// The table is not an inverse semigroup.
    #[error("the semigroup is not inverse")]
    NotInverse,

    /// The table is not a group.
    #[error("the semigroup is not a group")]
    NotAGroup,

    /// Exhaustive subgroup search is infeasible on this input.
    #[error("group of order {order} too large for exact subgroup search")]
    SearchTooLarge { order: usize },

    /// A decomposition leaf matched no closed form and exceeded the budget.
    #[error("not decomposable: {0}")]
    NotDecomposable(String),

    /// Exact values required but not available.
    #[error("exact league values unavailable for {0}")]
    MissingExactValues(String),

    /// `T_n` too large to materialise.
    #[error("transformation semigroup T_{n} too large to build")]
    TableTooLarge { n: usize },
}

pub type Result<T> = std::result::Result<T, SemiError>;
