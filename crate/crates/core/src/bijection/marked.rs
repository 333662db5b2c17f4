use serde::{Deserialize, Serialize};

use crate::model::{MarkedTreeJson, RootedMultitypeTree, VertexId};
use crate::{Error, Result};

/// A rooted tree with one distinguished edge, given by its child endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedTree {
    tree: RootedMultitypeTree,
    child: VertexId,
}

impl MarkedTree {
    /// Marks the edge from `child` to its parent.
    pub fn new(tree: RootedMultitypeTree, child: VertexId) -> Result<Self> {
        if !tree.profile().contains(child) {
            return Err(Error::invalid(format!("vertex {child} is outside the profile")));
        }
        if tree.parent_of(child).is_none() {
            return Err(Error::precondition(format!("{child} is the root; it has no edge to mark")));
        }
        Ok(MarkedTree { tree, child })
    }

    /// Marks the edge `(child, parent)`, which must be present.
    pub fn from_edge(tree: RootedMultitypeTree, (child, parent): (VertexId, VertexId)) -> Result<Self> {
        let m = MarkedTree::new(tree, child)?;
        if m.tree.parent_of(child) != Some(parent) {
            return Err(Error::precondition(format!("({child}, {parent}) is not an edge")));
        }
        Ok(m)
    }

    pub fn tree(&self) -> &RootedMultitypeTree {
        &self.tree
    }

    pub fn marked_child(&self) -> VertexId {
        self.child
    }

    pub fn marked_parent(&self) -> VertexId {
        self.tree.parent_of(self.child).expect("marked vertex is not the root")
    }

    pub fn marked_edge(&self) -> (VertexId, VertexId) {
        (self.child, self.marked_parent())
    }

    pub fn to_json(&self) -> MarkedTreeJson {
        MarkedTreeJson {
            tree: (&self.tree).into(),
            marked: self.marked_edge(),
        }
    }

    pub fn from_json(j: &MarkedTreeJson) -> Result<Self> {
        MarkedTree::from_edge(j.tree.to_tree()?, j.marked)
    }
}

/// Which half of the partition a marked tree falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BijectionCase {
    /// `(t, j)` is outside the subtree of the marked child: the edge moves.
    Hat,
    /// `(t, j)` is inside it: the two vertices swap children and labels.
    Tilde,
}

/// Classifies on a dense parent array: tilde iff `b` lies in the subtree of `c`.
pub(crate) fn classify_slice(parent: &[Option<usize>], c: usize, b: usize) -> BijectionCase {
    let mut cur = Some(b);
    while let Some(v) = cur {
        if v == c {
            return BijectionCase::Tilde;
        }
        cur = parent[v];
    }
    BijectionCase::Hat
}

/// The map on a dense parent array, in place. `c` is the marked child, whose
/// parent must be `a`; `b` is the target vertex of the same type as `a`.
/// Returns the case and the index of the marked child in the image.
pub(crate) fn apply_in_place(parent: &mut [Option<usize>], c: usize, a: usize, b: usize) -> (BijectionCase, usize) {
    debug_assert_eq!(parent[c], Some(a));
    match classify_slice(parent, c, b) {
        BijectionCase::Hat => {
            parent[c] = Some(b);
            (BijectionCase::Hat, c)
        }
        BijectionCase::Tilde => {
            // unmarked children of a go to b, children of b go to a
            for (v, p) in parent.iter_mut().enumerate() {
                if v == c {
                    continue;
                }
                if *p == Some(a) {
                    *p = Some(b);
                } else if *p == Some(b) {
                    *p = Some(a);
                }
            }
            // then a and b swap labels
            let sigma = |v: usize| if v == a { b } else if v == b { a } else { v };
            parent.swap(a, b);
            for p in parent.iter_mut() {
                *p = p.map(sigma);
            }
            (BijectionCase::Tilde, sigma(c))
        }
    }
}

struct Resolved {
    c: usize,
    a: usize,
    b: usize,
}

fn resolve(m: &MarkedTree, s: u32, t: u32, i: u32, j: u32) -> Result<Resolved> {
    let profile = m.tree.profile();
    let d = profile.d() as u32;
    if s < 1 || s > d || t < 1 || t > d {
        return Err(Error::invalid(format!("types ({s}, {t}) outside [1, {d}]")));
    }
    let (vi, vj) = (VertexId::new(t, i), VertexId::new(t, j));
    if !profile.contains(vi) || !profile.contains(vj) {
        return Err(Error::invalid(format!("labels {i}, {j} outside [1, {}]", profile.count(t))));
    }
    if i == j {
        return Err(Error::precondition("i and j must differ"));
    }
    let (child, par) = m.marked_edge();
    if child.ty != s || par != vi {
        return Err(Error::precondition(format!(
            "marked edge ({child}, {par}) does not join {vi} to a child of type {s}"
        )));
    }
    Ok(Resolved {
        c: profile.index(child),
        a: profile.index(vi),
        b: profile.index(vj),
    })
}

/// The case `m` falls in for the parameters `(s, t, i, j)`.
pub fn classify(m: &MarkedTree, s: u32, t: u32, i: u32, j: u32) -> Result<BijectionCase> {
    let r = resolve(m, s, t, i, j)?;
    Ok(classify_slice(m.tree.parent_array(), r.c, r.b))
}

/// Sends a tree whose marked edge joins `(t, i)` to a type-`s` child to a tree
/// whose marked edge joins `(t, j)` to a type-`s` child.
///
/// The indegree vector changes only at `γ_{s,t,i}` (down one) and `γ_{s,t,j}`
/// (up one). The image lies in the same case for the parameters
/// `(s, t, j, i)`, and applying those parameters inverts the map.
pub fn classify_and_apply(m: &MarkedTree, s: u32, t: u32, i: u32, j: u32) -> Result<MarkedTree> {
    let r = resolve(m, s, t, i, j)?;
    let profile = m.tree.profile().clone();
    let mut parent = m.tree.parent_array().to_vec();
    let (case, c) = apply_in_place(&mut parent, r.c, r.a, r.b);
    let root = m.tree.root_index();
    let root = match case {
        BijectionCase::Tilde if root == r.a => r.b,
        _ => root,
    };
    let child = profile.vertex(c);
    Ok(MarkedTree {
        tree: RootedMultitypeTree::new_unchecked(profile, root, parent),
        child,
    })
}
