use std::collections::{BTreeMap, VecDeque};

use crate::model::{Profile, VertexId};
use crate::{Error, Result};

use super::model::{Cactus, Corner, GonNode};

/// Rotation system of a cactus: gon corners plus the clockwise cyclic gon
/// order at every vertex.
#[derive(Clone, Debug)]
pub(crate) struct CactusMap {
    pub(crate) counts: Vec<u32>,
    /// `gons[g][k]` is the type-`(k+1)` corner of gon `g`.
    pub(crate) gons: Vec<Vec<VertexId>>,
    pub(crate) rot: BTreeMap<VertexId, Vec<usize>>,
    pub(crate) root: usize,
}

impl CactusMap {
    pub(crate) fn from_cactus(c: &Cactus) -> Result<Self> {
        let mut map = CactusMap {
            counts: c.profile().counts().to_vec(),
            gons: Vec::new(),
            rot: BTreeMap::new(),
            root: 0,
        };
        map.unpack(c.root(), None)?;
        Ok(map)
    }

    fn d(&self) -> usize {
        self.counts.len()
    }

    fn unpack(&mut self, node: &GonNode, attach: Option<(usize, VertexId)>) -> Result<usize> {
        let d = self.d();
        if node.corners.len() != d {
            return Err(Error::Cactus(format!("gon with {} corners, expected {d}", node.corners.len())));
        }
        let g = self.gons.len();
        self.gons.push(Vec::with_capacity(d));
        for (k, corner) in node.corners.iter().enumerate() {
            let v = VertexId::new(k as u32 + 1, corner.label);
            if corner.label < 1 || corner.label > self.counts[k] {
                return Err(Error::Cactus(format!("label of {v} is outside [1, {}]", self.counts[k])));
            }
            self.gons[g].push(v);
            if let Some((ak, av)) = attach {
                if ak == k {
                    if av != v {
                        return Err(Error::Cactus(format!("gon hanging from {av} lists {v} in that corner")));
                    }
                    if !corner.children.is_empty() {
                        return Err(Error::Cactus(format!("children of {v} are listed where it was first reached")));
                    }
                    continue;
                }
            }
            if self.rot.contains_key(&v) {
                return Err(Error::Cactus(format!("vertex {v} appears in two places")));
            }
            self.rot.insert(v, vec![g]);
            for child in &corner.children {
                let h = self.unpack(child, Some((k, v)))?;
                self.rot.get_mut(&v).expect("inserted above").push(h);
            }
        }
        Ok(g)
    }

    pub(crate) fn num_vertices(&self) -> usize {
        self.rot.len()
    }

    pub(crate) fn degree(&self, v: VertexId) -> usize {
        self.rot.get(&v).map_or(0, Vec::len)
    }

    /// Canonical plane-tree form, rooted at `self.root`.
    pub(crate) fn to_cactus(&self) -> Result<Cactus> {
        let profile = Profile::new(self.counts.clone())?;
        Ok(Cactus::new_unchecked(profile, self.pack(self.root, None)))
    }

    fn pack(&self, g: usize, attach: Option<usize>) -> GonNode {
        let corners = self.gons[g]
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                if attach == Some(k) {
                    return Corner { label: v.label, children: Vec::new() };
                }
                let around = &self.rot[&v];
                let pos = around.iter().position(|&h| h == g).expect("gon is listed at its corners");
                let children = around[pos + 1..]
                    .iter()
                    .chain(&around[..pos])
                    .map(|&h| self.pack(h, Some(k)))
                    .collect();
                Corner { label: v.label, children }
            })
            .collect();
        GonNode { corners }
    }

    /// Gons on the path from `a` to `b` in the vertex–gon incidence tree,
    /// starting with the gon at `a`.
    pub(crate) fn chain(&self, a: VertexId, b: VertexId) -> Vec<usize> {
        // BFS over gons, entering each through a vertex
        let mut prev: Vec<Option<usize>> = vec![None; self.gons.len()];
        let mut seen = vec![false; self.gons.len()];
        let mut queue = VecDeque::new();
        for &g in &self.rot[&a] {
            seen[g] = true;
            queue.push_back(g);
        }
        while let Some(g) = queue.pop_front() {
            if self.gons[g].contains(&b) {
                let mut path = vec![g];
                let mut cur = g;
                while let Some(p) = prev[cur] {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return path;
            }
            for v in &self.gons[g] {
                for &h in &self.rot[v] {
                    if !seen[h] {
                        seen[h] = true;
                        prev[h] = Some(g);
                        queue.push_back(h);
                    }
                }
            }
        }
        unreachable!("a cactus is connected")
    }

    /// Position of gon `g` in the cyclic order around `v`.
    pub(crate) fn position(&self, v: VertexId, g: usize) -> usize {
        self.rot[&v].iter().position(|&h| h == g).expect("gon incident to vertex")
    }

    /// The gon clockwise after `g` around `v`.
    pub(crate) fn successor(&self, v: VertexId, g: usize) -> usize {
        let around = &self.rot[&v];
        around[(self.position(v, g) + 1) % around.len()]
    }

    /// Detaches gon `h` from its type-`k` corner and reattaches it at `to`,
    /// clockwise right after gon `after`.
    pub(crate) fn regrip(&mut self, h: usize, k: usize, to: VertexId, after: usize) {
        let from = self.gons[h][k];
        let pos = self.position(from, h);
        self.rot.get_mut(&from).expect("vertex").remove(pos);
        if self.rot[&from].is_empty() {
            self.rot.remove(&from);
        }
        self.gons[h][k] = to;
        let pos = self.position(to, after);
        self.rot.get_mut(&to).expect("vertex").insert(pos + 1, h);
    }
}
