//! Exhaustive generators. These are the oracles every closed form is checked
//! against, so they are deliberately simple: labeled trees come from Prüfer
//! words, never from filtering parent functions.

mod plane;
pub mod prufer;
mod skeleton;
mod trees;

use num_bigint::BigUint;

pub use plane::{enumerate_plane_trees, PlaneTree};
pub use skeleton::{enumerate_skeletons, for_each_skeleton, CayleySkeleton};
pub use trees::{
    enumerate_forests, enumerate_trees, enumerate_unrooted, for_each_forest, for_each_tree,
    for_each_unrooted, ForestStream, TreeStream, UnrootedStream,
};

/// Number of items satisfying `pred`.
pub fn count_filtered<I, F>(items: I, mut pred: F) -> BigUint
where
    I: IntoIterator,
    F: FnMut(&I::Item) -> bool,
{
    let mut k = 0u64;
    for item in items {
        if pred(&item) {
            k += 1;
        }
    }
    BigUint::from(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Bounds, Profile, VertexId};

    #[test]
    fn filtered_counts() {
        let b = Bounds::default();
        let p = Profile::new(vec![3]).unwrap();
        let v = VertexId::new;
        // indegree vector (1, 1, 0)
        let k = count_filtered(enumerate_trees(&p, 1, &b).unwrap(), |t| {
            let g = t.indegree_vector();
            g.get(1, v(1, 1)) == 1 && g.get(1, v(1, 2)) == 1 && g.get(1, v(1, 3)) == 0
        });
        assert_eq!(k, BigUint::from(2u32));
        let paths = count_filtered(enumerate_trees(&p, 1, &b).unwrap(), |t| t.is_injective());
        assert_eq!(paths, BigUint::from(6u32));
        let q = Profile::new(vec![1, 1]).unwrap();
        assert_eq!(count_filtered(enumerate_trees(&q, 1, &b).unwrap(), |_| true), BigUint::from(1u32));
    }
}
