//! Exact arithmetic: rationals, sparse multivariate polynomials, truncated
//! multivariate power series and small polynomial determinants.
//!
//! Coefficients are [`BigRational`](num_rational::BigRational) everywhere. Nothing in
//! this module ever rounds.

mod combinat;
mod matrix;
mod monomial;
mod polynomial;
mod serial;
mod series;

pub use combinat::{binomial, binomial_signed, factorial, multinomial, rational_to_count};
pub use matrix::determinant;
pub use monomial::{Monomial, Var};
pub use polynomial::Polynomial;
pub use serial::{SeriesRecord, TermRecord};
pub use series::PowerSeries;

pub type Rational = num_rational::BigRational;
