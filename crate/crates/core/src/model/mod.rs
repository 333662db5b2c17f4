//! Multitype Cayley trees and forests, and the statistics they are counted by.

mod json;
mod profile;
mod stats;
mod tree;

pub use json::{ForestJson, MarkedTreeJson, TreeJson, UnrootedTreeJson};
pub use profile::{Profile, VertexId};
pub use stats::{CompleteTypeCounts, DegreeClassCounts, EdgeTypeMatrix, IndegreeVector};
pub use tree::{RootedForest, RootedMultitypeTree, TreeViolation, UnrootedTree};
