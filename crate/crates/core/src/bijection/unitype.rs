use crate::model::UnrootedTree;
use crate::{Error, Result};

/// Moves the marked edge `{i, k}` from `i` to `j`, giving `{j, k}`.
///
/// The marked edge must be incident to `i` and must not lie on the path
/// between `i` and `j`. Degrees of `i` and `j` change by `-1` and `+1`, and
/// the image satisfies the same condition with `i` and `j` swapped, so
/// `phi_unitype(image, (j, k), j, i)` restores the input.
pub fn phi_unitype(
    tree: &UnrootedTree,
    marked: (u32, u32),
    i: u32,
    j: u32,
) -> Result<(UnrootedTree, (u32, u32))> {
    let n = tree.n() as u32;
    for v in [i, j, marked.0, marked.1] {
        if v < 1 || v > n {
            return Err(Error::invalid(format!("vertex {v} is outside [1, {n}]")));
        }
    }
    if i == j {
        return Err(Error::precondition("i and j must differ"));
    }
    if !tree.has_edge(marked.0, marked.1) {
        return Err(Error::precondition(format!("({}, {}) is not an edge", marked.0, marked.1)));
    }
    let k = match marked {
        (a, b) if a == i => b,
        (a, b) if b == i => a,
        _ => return Err(Error::precondition(format!("marked edge is not incident to {i}"))),
    };
    // rooted at i, the edge {i, k} is on the path to j iff j lies below k
    let parent = tree.orient(i);
    let mut cur = j;
    while cur != i {
        if cur == k {
            return Err(Error::precondition(format!("marked edge lies on the path from {i} to {j}")));
        }
        cur = parent[cur as usize - 1];
    }
    let edges = tree
        .edges()
        .iter()
        .map(|&e| if e == (i.min(k), i.max(k)) { (j, k) } else { e });
    Ok((UnrootedTree::new(tree.n(), edges)?, (j, k)))
}
