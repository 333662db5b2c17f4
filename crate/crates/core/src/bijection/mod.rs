//! The symmetry bijections behind the product formulas, as executable maps
//! with explicit inverses.
//!
//! * [`phi_unitype`] moves a marked edge of an unrooted Cayley tree from one
//!   vertex to another.
//! * [`classify_and_apply`] is the multitype version on rooted trees: a marked
//!   edge either moves directly (the *hat* case) or, when that would close a
//!   cycle, the two vertices exchange their other children and labels (the
//!   *tilde* case).
//! * [`star_reduction_schedule`] chains elementary moves that push every
//!   child onto label-1 vertices, and [`star_core`] reads off the skeleton of
//!   the resulting star tree.

mod marked;
mod star;
mod unitype;

pub use marked::{classify, classify_and_apply, BijectionCase, MarkedTree};
pub(crate) use marked::{apply_in_place, classify_slice};
pub use star::{
    shift_indegree, star_core, star_reduction_factor, star_reduction_schedule, star_tree_gf,
    star_tree_monomial_sum, star_vector, StarStep,
};
pub(crate) use star::schedule_ratio;
pub use unitype::phi_unitype;
