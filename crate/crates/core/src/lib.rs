//! Lengths of longest chains of subsemigroups in finite semigroups.
//!
//! The crate has five parts:
//!
//! * [`finsemi`] — Cayley tables, closure, Green's relations, ideals,
//!   Rees quotients, and constructors for the standard families
//!   (full transformation, order-preserving, symmetric inverse, Brandt, ...).
//! * [`grouplen`] — subgroup chain lengths of finite groups.
//! * [`oracle`] — exhaustive ground-truth computation of `l(S)` and `l*(S)`
//!   with chain certificates, plus decomposition via ideals and principal
//!   factors.
//! * [`leagues`] — the combinatorial optimisation of league content
//!   `F(n,k)` / `F*(n,k)` by branch and bound, the associated lower bounds,
//!   and null-subsemigroup chain construction inside `T_n`.
//! * [`formulas`] — exact big-integer evaluation of every closed-form length
//!   formula (Brandt, inverse, completely regular, free bands, GLS).

pub mod error;
pub mod finsemi;
pub mod formulas;
pub mod grouplen;
pub mod leagues;
pub mod oracle;

pub use error::SemiError;
pub use finsemi::{CayleyTable, ElementSet, FamilySpec, GreensStructure};
pub use oracle::{ChainCertificate, ChainKind, SearchBudget};

/// Re-exported arbitrary-precision integer type used for all counting
/// quantities.
pub use num_bigint::BigUint;
/// Re-exported arbitrary-precision rational type (expectations, variances,
/// exact bound prefactors).
pub use num_rational::BigRational;
