//! Exact enumeration of multitype Cayley trees, rooted forests, plane trees
//! and planar cacti.
//!
//! Every closed-form count in [`formulas`] has an exhaustive counterpart in
//! [`enumerate`], and every bijection in [`bijection`] and [`cactus`] comes
//! with its inverse. The [`verify`] module ties the two sides together into
//! reproducible oracle suites.

pub mod algebra;
pub mod bijection;
mod bounds;
pub mod cactus;
pub mod enumerate;
mod error;
pub mod formulas;
pub mod lagrange;
pub mod model;
pub mod verify;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use model::{
    CompleteTypeCounts, DegreeClassCounts, EdgeTypeMatrix, IndegreeVector, Profile, RootedForest,
    RootedMultitypeTree, TreeViolation, UnrootedTree, VertexId,
};
