//! Rooted vertex-labeled planar `d`-cacti.
//!
//! A cactus is stored as a plane tree of gons. Each gon lists its `d` corners
//! in clockwise type order `1..d`; each corner lists, in clockwise order, the
//! gons glued at that vertex after the gon it was first reached through.
//! Corners where a gon hangs from its parent repeat the parent's label and
//! carry no children of their own. Rooting makes this encoding canonical.
//!
//! For the bijections the same cactus is unpacked into a rotation system:
//! the gons with their corner vertices, and the clockwise cyclic order of
//! gons around every vertex.

mod bijections;
mod counts;
mod generate;
mod map;
mod model;

pub use bijections::{cactus_phi, cactus_psi, in_marked_class};
pub use counts::{cactus_size, count_cacti_by_degree, count_cacti_total};
pub use generate::enumerate_cacti;
pub use model::{Cactus, CactusDegreeVector, CactusJson, Corner, CornerJson, GonJson, GonNode};
