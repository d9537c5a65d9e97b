//! Exact closed-form evaluation of the length formulas: combinatorial
//! primitives, Brandt/inverse lengths and the named inverse monoids,
//! completely regular and free-band lengths, general-linear quantities, and
//! the null-subsemigroup counting construction in `T_n`.

mod combi;
mod crband;
mod gls;
mod inverse;
pub mod tables;

pub use combi::{binomial, factorial, nmaps, nmaps_op, stirling2, tn_null_max_order};
pub use crband::{band_jclass_count, completely_regular_length, free_band_length};
pub use gls::{c_q, gaussian_binomial, gl_order, gls_lower_bound, gls_order};
pub use inverse::{
    brandt_length, inverse_length, inverse_star_brandt, inverse_star_length, jclass_summaries,
    named_inverse_monoid_length, symmetric_inverse_order, InverseFamily, JClassSummary,
};
