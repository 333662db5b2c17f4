use crate::model::{Profile, RootedForest, RootedMultitypeTree, UnrootedTree};
use crate::{Bounds, Error, Result};

use super::prufer::{decode_into, Odometer};

/// Every labeled tree on `n` vertices, one Prüfer word at a time, with
/// reusable buffers for orienting the current tree.
pub(crate) struct TreeWalker {
    n: usize,
    words: Odometer,
    degree: Vec<u32>,
    edges: Vec<(u32, u32)>,
    adj_start: Vec<usize>,
    adj: Vec<u32>,
    queue: Vec<u32>,
}

impl TreeWalker {
    pub(crate) fn new(n: usize) -> Self {
        TreeWalker {
            n,
            words: Odometer::new(n.saturating_sub(2), n as u32),
            degree: vec![0; n],
            edges: Vec::with_capacity(n),
            adj_start: vec![0; n + 1],
            adj: vec![0; 2 * n],
            queue: Vec::with_capacity(n),
        }
    }

    /// Moves to the next tree; false once every tree has been visited.
    pub(crate) fn advance(&mut self) -> bool {
        let n = self.n;
        let Some(word) = self.words.next_word() else {
            return false;
        };
        decode_into(word, n, &mut self.degree, &mut self.edges);
        self.adj_start.fill(0);
        for &(a, b) in &self.edges {
            self.adj_start[a as usize + 1] += 1;
            self.adj_start[b as usize + 1] += 1;
        }
        for v in 0..n {
            self.adj_start[v + 1] += self.adj_start[v];
        }
        // fill using degree as a cursor
        for v in 0..n {
            self.degree[v] = self.adj_start[v] as u32;
        }
        for &(a, b) in &self.edges {
            self.adj[self.degree[a as usize] as usize] = b;
            self.degree[a as usize] += 1;
            self.adj[self.degree[b as usize] as usize] = a;
            self.degree[b as usize] += 1;
        }
        true
    }

    /// Edges of the current tree, 0-based.
    pub(crate) fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Writes parent pointers of the current tree rooted at `root`.
    pub(crate) fn orient(&mut self, root: usize, parent: &mut [Option<usize>]) {
        parent[root] = None;
        self.queue.clear();
        self.queue.push(root as u32);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head] as usize;
            head += 1;
            for k in self.adj_start[v]..self.adj_start[v + 1] {
                let w = self.adj[k] as usize;
                if parent[v] != Some(w) {
                    parent[w] = Some(v);
                    self.queue.push(w as u32);
                }
            }
        }
    }
}

fn check_root_type(profile: &Profile, root_type: u32) -> Result<()> {
    if root_type < 1 || root_type as usize > profile.d() {
        return Err(Error::invalid(format!(
            "root type {root_type} is outside [1, {}]",
            profile.d()
        )));
    }
    Ok(())
}

/// Calls `f(root, parent)` for every tree in `T_ρ(n)`, or for every rooted
/// tree of any root type when `root_type` is `None`.
///
/// Trees come in Prüfer order of the underlying unrooted tree, then by root.
/// `parent` is a dense parent array (see [`Profile::index`]).
pub fn for_each_tree<F>(profile: &Profile, root_type: Option<u32>, bounds: &Bounds, mut f: F) -> Result<()>
where
    F: FnMut(usize, &[Option<usize>]),
{
    let n = profile.num_vertices();
    Error::check_bound("vertex count", n, bounds.max_vertices)?;
    let roots = match root_type {
        Some(rho) => {
            check_root_type(profile, rho)?;
            profile.type_range(rho)
        }
        None => 0..n,
    };
    let mut walker = TreeWalker::new(n);
    let mut parent = vec![None; n];
    while walker.advance() {
        for r in roots.clone() {
            walker.orient(r, &mut parent);
            f(r, &parent);
        }
    }
    Ok(())
}

/// Stream over `T_ρ(n)`; see [`for_each_tree`] for the order.
pub struct TreeStream {
    profile: Profile,
    walker: TreeWalker,
    roots: std::ops::Range<usize>,
    next_root: usize,
    started: bool,
    done: bool,
}

impl Iterator for TreeStream {
    type Item = RootedMultitypeTree;

    fn next(&mut self) -> Option<RootedMultitypeTree> {
        if self.done {
            return None;
        }
        if !self.started || self.next_root >= self.roots.end {
            self.started = true;
            if !self.walker.advance() {
                self.done = true;
                return None;
            }
            self.next_root = self.roots.start;
        }
        let r = self.next_root;
        self.next_root += 1;
        let mut parent = vec![None; self.profile.num_vertices()];
        self.walker.orient(r, &mut parent);
        Some(RootedMultitypeTree::new_unchecked(self.profile.clone(), r, parent))
    }
}

pub fn enumerate_trees(profile: &Profile, root_type: u32, bounds: &Bounds) -> Result<TreeStream> {
    Error::check_bound("vertex count", profile.num_vertices(), bounds.max_vertices)?;
    check_root_type(profile, root_type)?;
    Ok(TreeStream {
        walker: TreeWalker::new(profile.num_vertices()),
        roots: profile.type_range(root_type),
        next_root: 0,
        started: false,
        done: false,
        profile: profile.clone(),
    })
}

/// Calls `f(parent)` for every rooted forest on `V_n`; roots have `None`.
///
/// Forests are trees on `V_n` plus a virtual vertex, rooted at the virtual
/// vertex; its neighbours become the roots.
pub fn for_each_forest<F>(profile: &Profile, bounds: &Bounds, mut f: F) -> Result<()>
where
    F: FnMut(&[Option<usize>]),
{
    let n = profile.num_vertices();
    Error::check_bound("vertex count", n, bounds.max_vertices)?;
    let mut walker = TreeWalker::new(n + 1);
    let mut parent = vec![None; n + 1];
    while walker.advance() {
        walker.orient(n, &mut parent);
        for p in &mut parent[..n] {
            if *p == Some(n) {
                *p = None;
            }
        }
        f(&parent[..n]);
    }
    Ok(())
}

pub struct ForestStream {
    profile: Profile,
    walker: TreeWalker,
}

impl Iterator for ForestStream {
    type Item = RootedForest;

    fn next(&mut self) -> Option<RootedForest> {
        let n = self.profile.num_vertices();
        if !self.walker.advance() {
            return None;
        }
        let mut parent = vec![None; n + 1];
        self.walker.orient(n, &mut parent);
        parent.truncate(n);
        for p in &mut parent {
            if *p == Some(n) {
                *p = None;
            }
        }
        Some(RootedForest::new_unchecked(self.profile.clone(), parent))
    }
}

pub fn enumerate_forests(profile: &Profile, bounds: &Bounds) -> Result<ForestStream> {
    Error::check_bound("vertex count", profile.num_vertices(), bounds.max_vertices)?;
    Ok(ForestStream {
        walker: TreeWalker::new(profile.num_vertices() + 1),
        profile: profile.clone(),
    })
}

/// Calls `f(edges)` for every labeled tree on `n` vertices (0-based edges).
pub fn for_each_unrooted<F>(n: usize, bounds: &Bounds, mut f: F) -> Result<()>
where
    F: FnMut(&[(u32, u32)]),
{
    Error::check_bound("vertex count", n, bounds.max_vertices)?;
    if n == 0 {
        return Err(Error::invalid("a tree needs at least one vertex"));
    }
    let mut walker = TreeWalker::new(n);
    while walker.advance() {
        f(walker.edges());
    }
    Ok(())
}

pub struct UnrootedStream {
    walker: TreeWalker,
}

impl Iterator for UnrootedStream {
    type Item = UnrootedTree;

    fn next(&mut self) -> Option<UnrootedTree> {
        if !self.walker.advance() {
            return None;
        }
        let mut edges: Vec<(u32, u32)> = self
            .walker
            .edges()
            .iter()
            .map(|&(a, b)| (a.min(b) + 1, a.max(b) + 1))
            .collect();
        edges.sort_unstable();
        Some(UnrootedTree::from_sorted_unchecked(self.walker.n, edges))
    }
}

/// Unitype Cayley trees on `[n]`.
pub fn enumerate_unrooted(n: usize, bounds: &Bounds) -> Result<UnrootedStream> {
    Error::check_bound("vertex count", n, bounds.max_vertices)?;
    if n == 0 {
        return Err(Error::invalid("a tree needs at least one vertex"));
    }
    Ok(UnrootedStream {
        walker: TreeWalker::new(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn profile(c: &[u32]) -> Profile {
        Profile::new(c.to_vec()).unwrap()
    }

    #[test]
    fn unitype_counts() {
        let b = Bounds::default();
        for n in 1..=6u32 {
            let trees: Vec<_> = enumerate_trees(&profile(&[n]), 1, &b).unwrap().collect();
            assert_eq!(trees.len() as u64, u64::from(n).pow(n - 1));
            assert!(trees.iter().all(|t| t.validate().is_ok()));
            let distinct: HashSet<_> = trees.iter().collect();
            assert_eq!(distinct.len(), trees.len());
        }
    }

    #[test]
    fn two_vertices_two_types() {
        let b = Bounds::default();
        let trees: Vec<_> = enumerate_trees(&profile(&[1, 1]), 1, &b).unwrap().collect();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].root().ty, 1);
    }

    #[test]
    fn bipartite_trees() {
        // edges only between the two types: spanning trees of K_{2,2}, rooted at a type-1 vertex
        let b = Bounds::default();
        let k = enumerate_trees(&profile(&[2, 2]), 1, &b)
            .unwrap()
            .filter(|t| {
                let m = t.edge_type_counts();
                m.get(1, 1) == 0 && m.get(2, 2) == 0
            })
            .count();
        assert_eq!(k, 8);
    }

    #[test]
    fn forest_counts() {
        let b = Bounds::default();
        for (n, expected) in [(1u32, 1usize), (2, 3), (3, 16), (4, 125)] {
            let fs: Vec<_> = enumerate_forests(&profile(&[n]), &b).unwrap().collect();
            assert_eq!(fs.len(), expected);
            assert!(fs.iter().all(|f| f.validate().is_ok()));
            let distinct: HashSet<_> = fs.iter().collect();
            assert_eq!(distinct.len(), expected);
        }
    }

    #[test]
    fn visitor_matches_stream() {
        let b = Bounds::default();
        let p = profile(&[2, 1, 2]);
        let stream: Vec<_> = enumerate_trees(&p, 3, &b).unwrap().map(|t| t.into_parent_array()).collect();
        let mut visited = Vec::new();
        for_each_tree(&p, Some(3), &b, |_, parent| visited.push(parent.to_vec())).unwrap();
        assert_eq!(stream, visited);
    }

    #[test]
    fn bounds_are_enforced() {
        let b = Bounds {
            max_vertices: 4,
            ..Bounds::default()
        };
        assert!(matches!(
            enumerate_trees(&profile(&[3, 2]), 1, &b),
            Err(Error::SizeBound { .. })
        ));
        assert!(matches!(enumerate_trees(&profile(&[3]), 2, &b), Err(Error::Invalid(_))));
    }

    #[test]
    fn unrooted_counts() {
        let b = Bounds::default();
        for n in 1..=6usize {
            assert_eq!(enumerate_unrooted(n, &b).unwrap().count(), n.pow(n.saturating_sub(2) as u32));
        }
    }
}
