//! Multivariate Lagrange inversion for `f_t = x_t · G_t(f_1, …, f_d)`.
//!
//! The same coefficients come out three ways:
//!
//! * [`solve_functional_system`] iterates the substitution from `f = 0`;
//! * [`tree_sum_coefficient`] sums weights over the multitype trees of
//!   [`for_each_tree`](crate::enumerate::for_each_tree);
//! * [`lagrange_rhs_coefficient`] applies derivative operators to powers of
//!   the `G_t`, one skeleton of `Cay_{d+1}(d+1)` at a time.
//!
//! All series are in the variables `Plain(1)…Plain(d)` and share one
//! total-degree truncation order.

mod routes;
mod system;

pub use routes::{direct_coefficient, lagrange_rhs_coefficient, tree_sum_coefficient};
pub use system::{
    residual, solve_functional_system, solve_with, FunctionalSystem, FunctionalSystemRecord, Schedule,
};
