//! Core finite-semigroup kernel: multiplication tables, element sets,
//! closure, Green's structure, ideals, Rees quotients, structural
//! predicates, and the standard family constructors.

mod classify;
mod families;
mod greens;
mod table;

pub use classify::{classify, monogenic_index_period, Classification};
pub use families::{build_family, build_family_capped, tn_map_index, FamilySpec, DEFAULT_SIZE_CAP};
pub use greens::{all_ideals, greens_structure, principal_factor, rees_quotient, GreensStructure};
pub use table::{
    closure, is_closed, parse_table_json, parse_table_text, validate_table, CayleyTable, ElementSet,
};
