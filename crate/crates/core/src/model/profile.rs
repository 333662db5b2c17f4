use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A vertex `(type, label)`; both coordinates are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct VertexId {
    pub ty: u32,
    pub label: u32,
}

impl VertexId {
    pub const fn new(ty: u32, label: u32) -> Self {
        VertexId { ty, label }
    }
}

impl From<(u32, u32)> for VertexId {
    fn from((ty, label): (u32, u32)) -> Self {
        VertexId { ty, label }
    }
}

impl From<VertexId> for (u32, u32) {
    fn from(v: VertexId) -> Self {
        (v.ty, v.label)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.ty, self.label)
    }
}

/// Vertex counts per type, `n = (n_1, …, n_d)`, all positive.
///
/// Vertices are indexed densely in `(type, label)` order: type 1 labels first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile {
    counts: Vec<u32>,
    offsets: Vec<usize>,
}

impl Profile {
    pub fn new(counts: Vec<u32>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::invalid("a profile needs at least one type"));
        }
        if let Some(t) = counts.iter().position(|&n| n == 0) {
            return Err(Error::invalid(format!(
                "profile entry for type {} is zero; every type needs a vertex",
                t + 1
            )));
        }
        let mut offsets = Vec::with_capacity(counts.len() + 1);
        let mut acc = 0usize;
        for &n in &counts {
            offsets.push(acc);
            acc += n as usize;
        }
        offsets.push(acc);
        Ok(Profile { counts, offsets })
    }

    pub fn d(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// `n_t` for a 1-based type.
    pub fn count(&self, t: u32) -> u32 {
        self.counts[t as usize - 1]
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets[self.counts.len()]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.ty >= 1 && (v.ty as usize) <= self.d() && v.label >= 1 && v.label <= self.count(v.ty)
    }

    pub fn index(&self, v: VertexId) -> usize {
        debug_assert!(self.contains(v), "{v} not in profile {:?}", self.counts);
        self.offsets[v.ty as usize - 1] + v.label as usize - 1
    }

    pub fn vertex(&self, idx: usize) -> VertexId {
        let t = self.type_index(idx);
        VertexId::new(t as u32 + 1, (idx - self.offsets[t]) as u32 + 1)
    }

    /// 0-based type of a dense index.
    pub fn type_index(&self, idx: usize) -> usize {
        match self.offsets.binary_search(&idx) {
            Ok(t) => t,
            Err(t) => t - 1,
        }
    }

    /// Dense indices of the vertices of a 1-based type.
    pub fn type_range(&self, t: u32) -> std::ops::Range<usize> {
        self.offsets[t as usize - 1]..self.offsets[t as usize]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.num_vertices()).map(|k| self.vertex(k))
    }

    /// Type of every dense index, 0-based.
    pub fn type_table(&self) -> Vec<usize> {
        (0..self.num_vertices()).map(|k| self.type_index(k)).collect()
    }
}
