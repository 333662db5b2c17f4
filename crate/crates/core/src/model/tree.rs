use std::collections::BTreeSet;

use thiserror::Error;

use super::{IndegreeVector, Profile, VertexId};

/// First invariant a candidate tree or forest breaks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeViolation {
    #[error("vertex {0} is outside the profile")]
    OutOfRange(VertexId),
    #[error("vertex {0} has more than one parent")]
    DuplicateParent(VertexId),
    #[error("root {0} has a parent")]
    RootHasParent(VertexId),
    #[error("vertex {0} has no parent and is not a root")]
    MissingParent(VertexId),
    #[error("parent map has a cycle through {0}")]
    Cycle(VertexId),
    #[error("a forest needs at least one root")]
    NoRoots,
    #[error("parent array has length {got}, profile has {expected} vertices")]
    WrongLength { expected: usize, got: usize },
}

/// Checks that following parents from every vertex terminates.
fn check_acyclic(profile: &Profile, parent: &[Option<usize>]) -> Result<(), TreeViolation> {
    let n = parent.len();
    // 0 = unseen, 1 = on current walk, 2 = reaches a root
    let mut state = vec![0u8; n];
    let mut walk = Vec::new();
    for start in 0..n {
        let mut v = start;
        walk.clear();
        loop {
            match state[v] {
                2 => break,
                1 => return Err(TreeViolation::Cycle(profile.vertex(v))),
                _ => {}
            }
            state[v] = 1;
            walk.push(v);
            match parent[v] {
                Some(p) if p < n => v = p,
                Some(_) => return Err(TreeViolation::OutOfRange(profile.vertex(v))),
                None => break,
            }
        }
        for &w in &walk {
            state[w] = 2;
        }
    }
    Ok(())
}

fn dense_parents(
    profile: &Profile,
    parents: &[(VertexId, VertexId)],
) -> Result<Vec<Option<usize>>, TreeViolation> {
    let mut parent = vec![None; profile.num_vertices()];
    for &(child, par) in parents {
        for v in [child, par] {
            if !profile.contains(v) {
                return Err(TreeViolation::OutOfRange(v));
            }
        }
        let slot = &mut parent[profile.index(child)];
        if slot.is_some() {
            return Err(TreeViolation::DuplicateParent(child));
        }
        *slot = Some(profile.index(par));
    }
    Ok(parent)
}

/// A rooted multitype Cayley tree: every non-root vertex points at its parent.
///
/// Children are unordered; whenever an order is needed they are listed by
/// `(type, label)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedMultitypeTree {
    profile: Profile,
    root: usize,
    parent: Vec<Option<usize>>,
}

impl RootedMultitypeTree {
    pub fn from_parents(
        profile: Profile,
        root: VertexId,
        parents: &[(VertexId, VertexId)],
    ) -> Result<Self, TreeViolation> {
        if !profile.contains(root) {
            return Err(TreeViolation::OutOfRange(root));
        }
        let parent = dense_parents(&profile, parents)?;
        let tree = RootedMultitypeTree {
            root: profile.index(root),
            profile,
            parent,
        };
        tree.validate()?;
        Ok(tree)
    }

    /// Builds from a dense parent array; the root is the unique `None` entry.
    pub fn from_parent_array(profile: Profile, parent: Vec<Option<usize>>) -> Result<Self, TreeViolation> {
        let roots: Vec<usize> = (0..parent.len()).filter(|&v| parent[v].is_none()).collect();
        let root = match roots.as_slice() {
            [r] => *r,
            [] => return Err(TreeViolation::NoRoots),
            [_, second, ..] => return Err(TreeViolation::MissingParent(profile.vertex(*second))),
        };
        let tree = RootedMultitypeTree { profile, root, parent };
        tree.validate()?;
        Ok(tree)
    }

    /// Skips validation. Generators use this for trees that are valid by construction.
    pub fn new_unchecked(profile: Profile, root: usize, parent: Vec<Option<usize>>) -> Self {
        RootedMultitypeTree { profile, root, parent }
    }

    pub fn validate(&self) -> Result<(), TreeViolation> {
        let n = self.profile.num_vertices();
        if self.parent.len() != n {
            return Err(TreeViolation::WrongLength {
                expected: n,
                got: self.parent.len(),
            });
        }
        if self.root >= n {
            return Err(TreeViolation::NoRoots);
        }
        if self.parent[self.root].is_some() {
            return Err(TreeViolation::RootHasParent(self.profile.vertex(self.root)));
        }
        if let Some(v) = (0..n).find(|&v| v != self.root && self.parent[v].is_none()) {
            return Err(TreeViolation::MissingParent(self.profile.vertex(v)));
        }
        check_acyclic(&self.profile, &self.parent)
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn root(&self) -> VertexId {
        self.profile.vertex(self.root)
    }

    pub fn root_index(&self) -> usize {
        self.root
    }

    pub fn root_type(&self) -> u32 {
        self.root().ty
    }

    pub fn parent_array(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn into_parent_array(self) -> Vec<Option<usize>> {
        self.parent
    }

    pub fn parent_of(&self, v: VertexId) -> Option<VertexId> {
        self.parent[self.profile.index(v)].map(|p| self.profile.vertex(p))
    }

    /// `(child, parent)` pairs sorted by child.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        edges_of(&self.profile, &self.parent)
    }

    pub fn children(&self, v: VertexId) -> Vec<VertexId> {
        let k = self.profile.index(v);
        (0..self.parent.len())
            .filter(|&c| self.parent[c] == Some(k))
            .map(|c| self.profile.vertex(c))
            .collect()
    }

    pub fn indegree_vector(&self) -> IndegreeVector {
        IndegreeVector::from_parent_array(&self.profile, &self.parent)
    }

    /// Whether `anc` lies on the path from `v` to the root (inclusive of `v`).
    pub fn is_ancestor_or_self(&self, anc: VertexId, v: VertexId) -> bool {
        let anc = self.profile.index(anc);
        let mut cur = Some(self.profile.index(v));
        while let Some(c) = cur {
            if c == anc {
                return true;
            }
            cur = self.parent[c];
        }
        false
    }

    /// Every vertex with label other than 1 is a leaf.
    pub fn is_star(&self) -> bool {
        self.parent
            .iter()
            .flatten()
            .all(|&p| self.profile.vertex(p).label == 1)
    }

    /// Every vertex has at most one child of each type.
    pub fn is_injective(&self) -> bool {
        self.indegree_vector().is_injective()
    }
}

fn edges_of(profile: &Profile, parent: &[Option<usize>]) -> Vec<(VertexId, VertexId)> {
    parent
        .iter()
        .enumerate()
        .filter_map(|(c, p)| p.map(|p| (profile.vertex(c), profile.vertex(p))))
        .collect()
}

/// A rooted multitype forest: a parent map whose `None` entries are the roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootedForest {
    profile: Profile,
    parent: Vec<Option<usize>>,
}

impl RootedForest {
    pub fn from_parents(
        profile: Profile,
        roots: &[VertexId],
        parents: &[(VertexId, VertexId)],
    ) -> Result<Self, TreeViolation> {
        if roots.is_empty() {
            return Err(TreeViolation::NoRoots);
        }
        let parent = dense_parents(&profile, parents)?;
        let declared: BTreeSet<VertexId> = roots.iter().copied().collect();
        for &r in roots {
            if !profile.contains(r) {
                return Err(TreeViolation::OutOfRange(r));
            }
            if parent[profile.index(r)].is_some() {
                return Err(TreeViolation::RootHasParent(r));
            }
        }
        if let Some(v) = (0..parent.len())
            .find(|&v| parent[v].is_none() && !declared.contains(&profile.vertex(v)))
        {
            return Err(TreeViolation::MissingParent(profile.vertex(v)));
        }
        let forest = RootedForest { profile, parent };
        forest.validate()?;
        Ok(forest)
    }

    pub fn new_unchecked(profile: Profile, parent: Vec<Option<usize>>) -> Self {
        RootedForest { profile, parent }
    }

    pub fn validate(&self) -> Result<(), TreeViolation> {
        let n = self.profile.num_vertices();
        if self.parent.len() != n {
            return Err(TreeViolation::WrongLength {
                expected: n,
                got: self.parent.len(),
            });
        }
        if self.parent.iter().all(Option::is_some) {
            return Err(TreeViolation::NoRoots);
        }
        check_acyclic(&self.profile, &self.parent)
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn parent_array(&self) -> &[Option<usize>] {
        &self.parent
    }

    pub fn roots(&self) -> Vec<VertexId> {
        (0..self.parent.len())
            .filter(|&v| self.parent[v].is_none())
            .map(|v| self.profile.vertex(v))
            .collect()
    }

    /// Number of roots of each type, indexed by 0-based type.
    pub fn root_type_counts(&self) -> Vec<u32> {
        let mut out = vec![0; self.profile.d()];
        for r in self.roots() {
            out[r.ty as usize - 1] += 1;
        }
        out
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        edges_of(&self.profile, &self.parent)
    }

    pub fn indegree_vector(&self) -> IndegreeVector {
        IndegreeVector::from_parent_array(&self.profile, &self.parent)
    }
}

/// An unrooted labeled tree on `[n]` (unitype Cayley tree). Edges are stored
/// as `(u, v)` with `u < v`, sorted, labels 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnrootedTree {
    n: usize,
    edges: Vec<(u32, u32)>,
}

impl UnrootedTree {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> crate::Result<Self> {
        let mut edges: Vec<(u32, u32)> = edges
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        let t = UnrootedTree { n, edges };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<(u32, u32)>) -> Self {
        UnrootedTree { n, edges }
    }

    fn validate(&self) -> crate::Result<()> {
        if self.n == 0 || self.edges.len() + 1 != self.n {
            return Err(crate::Error::invalid(format!(
                "{} edges cannot span {} vertices",
                self.edges.len(),
                self.n
            )));
        }
        let mut uf: Vec<usize> = (0..=self.n).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            if a < 1 || b as usize > self.n || a == b {
                return Err(crate::Error::invalid(format!("bad edge ({a},{b})")));
            }
            let (ra, rb) = (find(&mut uf, a as usize), find(&mut uf, b as usize));
            if ra == rb {
                return Err(crate::Error::invalid(format!("edge ({a},{b}) closes a cycle")));
            }
            uf[ra] = rb;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        let e = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&e).is_ok()
    }

    /// Degree of every vertex, index `i - 1` for vertex `i`.
    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a as usize - 1] += 1;
            deg[b as usize - 1] += 1;
        }
        deg
    }

    /// Parent pointers after rooting at `root` (1-based labels, `0` for the root).
    pub fn orient(&self, root: u32) -> Vec<u32> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        let mut parent = vec![0u32; self.n + 1];
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![root];
        seen[root as usize] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = v;
                    stack.push(w);
                }
            }
        }
        parent[1..].to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(t: u32, i: u32) -> VertexId {
        VertexId::new(t, i)
    }

    #[test]
    fn single_vertex_is_valid() {
        let p = Profile::new(vec![1]).unwrap();
        let t = RootedMultitypeTree::from_parents(p, v(1, 1), &[]).unwrap();
        assert!(t.edges().is_empty());
        assert!(t.indegree_vector().entries().next().is_none());
    }

    #[test]
    fn two_cycle_is_rejected() {
        let p = Profile::new(vec![3]).unwrap();
        let err = RootedMultitypeTree::from_parents(p, v(1, 1), &[(v(1, 2), v(1, 3)), (v(1, 3), v(1, 2))])
            .unwrap_err();
        assert!(matches!(err, TreeViolation::Cycle(_)));
    }

    #[test]
    fn label_out_of_range_is_rejected() {
        let p = Profile::new(vec![2]).unwrap();
        let err = RootedMultitypeTree::from_parents(p, v(1, 1), &[(v(1, 3), v(1, 1))]).unwrap_err();
        assert_eq!(err, TreeViolation::OutOfRange(v(1, 3)));
    }

    #[test]
    fn missing_parent_and_root_parent() {
        let p = Profile::new(vec![3]).unwrap();
        let err = RootedMultitypeTree::from_parents(p.clone(), v(1, 1), &[(v(1, 2), v(1, 1))]).unwrap_err();
        assert_eq!(err, TreeViolation::MissingParent(v(1, 3)));
        let err = RootedMultitypeTree::from_parents(
            p,
            v(1, 1),
            &[(v(1, 1), v(1, 2)), (v(1, 2), v(1, 3))],
        )
        .unwrap_err();
        assert!(matches!(err, TreeViolation::RootHasParent(_) | TreeViolation::MissingParent(_)));
    }

    #[test]
    fn forest_roots() {
        let p = Profile::new(vec![2, 1]).unwrap();
        let f = RootedForest::from_parents(p, &[v(1, 1), v(2, 1)], &[(v(1, 2), v(2, 1))]).unwrap();
        assert_eq!(f.roots(), vec![v(1, 1), v(2, 1)]);
        assert_eq!(f.root_type_counts(), vec![1, 1]);
    }

    #[test]
    fn unrooted_validation() {
        assert!(UnrootedTree::new(3, [(1, 2), (2, 3)]).is_ok());
        assert!(UnrootedTree::new(3, [(1, 2), (2, 1)]).is_err());
        let t = UnrootedTree::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(t.degrees(), vec![3, 1, 1, 1]);
        assert_eq!(t.orient(2), vec![2, 0, 1, 1]);
    }
}
