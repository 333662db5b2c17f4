use serde::{Deserialize, Serialize};

use crate::{Bounds, Error, Result};

use super::trees::TreeWalker;

/// A rooted unitype Cayley tree on the type set `[d]`, edges oriented toward
/// the root. `parent[s - 1]` is the parent type of `s`, `None` for the root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CayleySkeleton {
    root: u32,
    parent: Vec<Option<u32>>,
}

impl CayleySkeleton {
    pub fn new(root: u32, parent: Vec<Option<u32>>) -> Result<Self> {
        let d = parent.len();
        if root < 1 || root as usize > d || parent[root as usize - 1].is_some() {
            return Err(Error::invalid(format!("bad skeleton root {root}")));
        }
        for (s, p) in parent.iter().enumerate() {
            match *p {
                None if s + 1 != root as usize => {
                    return Err(Error::invalid(format!("type {} has no parent", s + 1)));
                }
                Some(t) if t < 1 || t as usize > d || t as usize == s + 1 => {
                    return Err(Error::invalid(format!("bad parent {t} for type {}", s + 1)));
                }
                _ => {}
            }
        }
        for s in 1..=d as u32 {
            let mut cur = s;
            for _ in 0..=d {
                match parent[cur as usize - 1] {
                    Some(t) => cur = t,
                    None => break,
                }
            }
            if cur != root {
                return Err(Error::invalid("skeleton has a cycle"));
            }
        }
        Ok(CayleySkeleton { root, parent })
    }

    pub fn d(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn parent(&self, s: u32) -> Option<u32> {
        self.parent[s as usize - 1]
    }

    /// `(s, t)` pairs, `t` the parent of `s`, sorted by `s`.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(s, p)| p.map(|t| (s as u32 + 1, t)))
    }

    pub fn contains_edge(&self, s: u32, t: u32) -> bool {
        self.parent(s) == Some(t)
    }
}

/// Calls `f(parent)` for every skeleton in `Cay_ρ(d)`; `parent` is indexed by
/// 0-based type and holds 0-based parent types.
pub fn for_each_skeleton<F>(d: usize, root: u32, bounds: &Bounds, mut f: F) -> Result<()>
where
    F: FnMut(&[Option<usize>]),
{
    Error::check_bound("type count", d, bounds.max_types)?;
    if d == 0 || root < 1 || root as usize > d {
        return Err(Error::invalid(format!("root {root} is outside [1, {d}]")));
    }
    let mut walker = TreeWalker::new(d);
    let mut parent = vec![None; d];
    while walker.advance() {
        walker.orient(root as usize - 1, &mut parent);
        f(&parent);
    }
    Ok(())
}

/// All `d^{d-2}` skeletons of `Cay_ρ(d)`, in Prüfer order.
pub fn enumerate_skeletons(d: usize, root: u32, bounds: &Bounds) -> Result<Vec<CayleySkeleton>> {
    let mut out = Vec::new();
    for_each_skeleton(d, root, bounds, |parent| {
        out.push(CayleySkeleton {
            root,
            parent: parent.iter().map(|p| p.map(|t| t as u32 + 1)).collect(),
        });
    })?;
    Ok(out)
}
