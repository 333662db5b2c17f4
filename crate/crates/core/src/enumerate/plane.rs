use serde::{Deserialize, Serialize};

use crate::{Bounds, Error, Result};

/// An unlabeled rooted plane tree, stored as the out-degrees of its vertices
/// in preorder.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlaneTree {
    degrees: Vec<u32>,
}

impl PlaneTree {
    /// Checks the preorder word is a valid tree code.
    pub fn from_degrees(degrees: Vec<u32>) -> Result<Self> {
        let mut open: i64 = 1;
        for (k, &a) in degrees.iter().enumerate() {
            if open <= 0 {
                return Err(Error::invalid(format!("degree word closes early at position {k}")));
            }
            open += i64::from(a) - 1;
        }
        if open != 0 || degrees.is_empty() {
            return Err(Error::invalid("degree word does not describe a tree"));
        }
        Ok(PlaneTree { degrees })
    }

    pub fn num_vertices(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `N_i`: number of vertices with `i` children, for `i = 0..=max`.
    pub fn degree_distribution(&self) -> Vec<u64> {
        let max = self.degrees.iter().copied().max().unwrap_or(0) as usize;
        let mut n = vec![0u64; max + 1];
        for &a in &self.degrees {
            n[a as usize] += 1;
        }
        n
    }
}

fn extend(word: &mut Vec<u32>, n: usize, open: usize, out: &mut Vec<PlaneTree>) {
    let remaining = n - word.len();
    if remaining == 0 {
        if open == 0 {
            out.push(PlaneTree { degrees: word.clone() });
        }
        return;
    }
    if open == 0 {
        return;
    }
    // `open - 1 + a` subtrees still to fill with the `remaining - 1` vertices left
    for a in 0..=(remaining - open) as u32 {
        word.push(a);
        extend(word, n, open - 1 + a as usize, out);
        word.pop();
    }
}

/// Every plane tree with `n` vertices, in lexicographic order of the
/// preorder degree word; there are `C_{n-1}` of them.
pub fn enumerate_plane_trees(n: usize, bounds: &Bounds) -> Result<Vec<PlaneTree>> {
    Error::check_bound("plane tree size", n, bounds.max_plane_vertices)?;
    if n == 0 {
        return Err(Error::invalid("a plane tree needs at least one vertex"));
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, 1, &mut out);
    Ok(out)
}
