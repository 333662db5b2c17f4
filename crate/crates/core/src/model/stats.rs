use std::collections::BTreeMap;

use crate::algebra::{Monomial, Var};
use crate::{Error, Result};

use super::{Profile, RootedMultitypeTree, VertexId};

/// `γ_{s,t,i}`: number of children of type `s` of vertex `(t, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndegreeVector {
    profile: Profile,
    // index (s - 1) * |V| + index(t, i)
    gamma: Vec<u32>,
}

impl IndegreeVector {
    pub fn zeros(profile: &Profile) -> Self {
        IndegreeVector {
            gamma: vec![0; profile.d() * profile.num_vertices()],
            profile: profile.clone(),
        }
    }

    pub(crate) fn from_parent_array(profile: &Profile, parent: &[Option<usize>]) -> Self {
        let mut out = IndegreeVector::zeros(profile);
        let nv = profile.num_vertices();
        for (c, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                out.gamma[profile.type_index(c) * nv + p] += 1;
            }
        }
        out
    }

    /// From the raw layout `(s - 1)·|V| + index(t, i)`.
    pub(crate) fn from_raw(profile: &Profile, gamma: Vec<u32>) -> Self {
        debug_assert_eq!(gamma.len(), profile.d() * profile.num_vertices());
        IndegreeVector {
            profile: profile.clone(),
            gamma,
        }
    }

    /// Builds from `((s, vertex), count)` entries; unspecified entries are zero.
    pub fn from_entries<I>(profile: &Profile, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((u32, VertexId), u32)>,
    {
        let mut out = IndegreeVector::zeros(profile);
        for ((s, v), k) in entries {
            if s < 1 || s as usize > profile.d() || !profile.contains(v) {
                return Err(Error::invalid(format!("indegree entry ({s}, {v}) out of range")));
            }
            out.set(s, v, k);
        }
        Ok(out)
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn get(&self, s: u32, v: VertexId) -> u32 {
        self.gamma[self.slot(s, v)]
    }

    pub fn set(&mut self, s: u32, v: VertexId, k: u32) {
        let slot = self.slot(s, v);
        self.gamma[slot] = k;
    }

    fn slot(&self, s: u32, v: VertexId) -> usize {
        (s as usize - 1) * self.profile.num_vertices() + self.profile.index(v)
    }

    /// Non-zero entries `(s, vertex, count)` in `(s, t, i)` order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, VertexId, u32)> + '_ {
        let nv = self.profile.num_vertices();
        self.gamma
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(move |(slot, &k)| ((slot / nv) as u32 + 1, self.profile.vertex(slot % nv), k))
    }

    pub fn raw(&self) -> &[u32] {
        &self.gamma
    }

    /// Indegree type `c = (c_1, …, c_d)` of one vertex.
    pub fn indegree_type(&self, v: VertexId) -> Vec<u32> {
        (1..=self.profile.d() as u32).map(|s| self.get(s, v)).collect()
    }

    pub fn edge_type_counts(&self) -> EdgeTypeMatrix {
        let d = self.profile.d();
        let nv = self.profile.num_vertices();
        let types = self.profile.type_table();
        let mut m = EdgeTypeMatrix::zeros(d);
        for s in 0..d {
            for (v, &t) in types.iter().enumerate() {
                m.m[s * d + t] += self.gamma[s * nv + v];
            }
        }
        m
    }

    pub fn degree_class_counts(&self) -> DegreeClassCounts {
        let mut out = DegreeClassCounts::new(self.profile.d());
        for v in self.profile.vertices() {
            out.add(v.ty, self.indegree_type(v), 1);
        }
        out
    }

    /// `n_s = δ_{s,ρ} + Σ_{t,i} γ_{s,t,i}` for every type `s`.
    pub fn is_consistent(&self, root_type: u32) -> bool {
        let nv = self.profile.num_vertices();
        (1..=self.profile.d() as u32).all(|s| {
            let total: u32 = self.gamma[(s as usize - 1) * nv..s as usize * nv].iter().sum();
            self.profile.count(s) == total + u32::from(s == root_type)
        })
    }

    pub fn is_injective(&self) -> bool {
        self.gamma.iter().all(|&k| k <= 1)
    }

    /// `Π x_{s,t,i}^{γ_{s,t,i}}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_powers(
            self.entries()
                .map(|(s, v, k)| (Var::Edge(s, v.ty, v.label), k)),
        )
    }
}

/// `m_{s,t}`: number of edges from a type-`s` child to a type-`t` parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeTypeMatrix {
    d: usize,
    m: Vec<u32>,
}

impl EdgeTypeMatrix {
    pub fn zeros(d: usize) -> Self {
        EdgeTypeMatrix { d, m: vec![0; d * d] }
    }

    pub fn from_entries<I: IntoIterator<Item = ((u32, u32), u32)>>(d: usize, entries: I) -> Result<Self> {
        let mut out = EdgeTypeMatrix::zeros(d);
        for ((s, t), k) in entries {
            if s < 1 || t < 1 || s as usize > d || t as usize > d {
                return Err(Error::invalid(format!("edge type ({s},{t}) out of range for d = {d}")));
            }
            out.set(s, t, k);
        }
        Ok(out)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn get(&self, s: u32, t: u32) -> u32 {
        self.m[(s as usize - 1) * self.d + t as usize - 1]
    }

    pub fn set(&mut self, s: u32, t: u32, k: u32) {
        self.m[(s as usize - 1) * self.d + t as usize - 1] = k;
    }

    /// `n_s = δ_{s,ρ} + Σ_t m_{s,t}` for every `s`.
    pub fn is_compatible(&self, profile: &Profile, root_type: u32) -> bool {
        profile.d() == self.d
            && (1..=self.d as u32).all(|s| {
                let row: u32 = (1..=self.d as u32).map(|t| self.get(s, t)).sum();
                profile.count(s) == row + u32::from(s == root_type)
            })
    }

    /// Edge types with a non-zero count.
    pub fn support(&self) -> Vec<(u32, u32)> {
        let d = self.d as u32;
        (1..=d)
            .flat_map(|s| (1..=d).map(move |t| (s, t)))
            .filter(|&(s, t)| self.get(s, t) > 0)
            .collect()
    }
}

/// `N_{t,c}`: number of type-`t` vertices with indegree type `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeClassCounts {
    d: usize,
    counts: BTreeMap<(u32, Vec<u32>), u32>,
}

impl DegreeClassCounts {
    pub fn new(d: usize) -> Self {
        DegreeClassCounts {
            d,
            counts: BTreeMap::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn add(&mut self, t: u32, c: Vec<u32>, k: u32) {
        debug_assert_eq!(c.len(), self.d);
        if k > 0 {
            *self.counts.entry((t, c)).or_insert(0) += k;
        }
    }

    pub fn get(&self, t: u32, c: &[u32]) -> u32 {
        self.counts.get(&(t, c.to_vec())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, &[u32], u32)> {
        self.counts.iter().map(|((t, c), &k)| (*t, c.as_slice(), k))
    }

    /// Checks every class names a type in `[d]` and a `d`-tuple.
    pub fn validate(&self) -> Result<()> {
        for (t, c, _) in self.entries() {
            if t < 1 || t as usize > self.d || c.len() != self.d {
                return Err(Error::invalid(format!("degree class ({t}, {c:?}) malformed for d = {}", self.d)));
            }
        }
        Ok(())
    }

    /// `n_t = Σ_c N_{t,c}`, indexed by 0-based type.
    pub fn type_counts(&self) -> Vec<u64> {
        let mut n = vec![0u64; self.d];
        for (t, _, k) in self.entries() {
            n[t as usize - 1] += u64::from(k);
        }
        n
    }

    /// `m_{s,t} = Σ_c c_s N_{t,c}`.
    pub fn edge_marginals(&self) -> EdgeTypeMatrix {
        let mut m = EdgeTypeMatrix::zeros(self.d);
        for (t, c, k) in self.entries() {
            for (s, &cs) in c.iter().enumerate() {
                let cur = m.get(s as u32 + 1, t);
                m.set(s as u32 + 1, t, cur + cs * k);
            }
        }
        m
    }
}

/// `N_{t,u,c}`: vertices of type `t`, parent type `u` (`d + 1` for the root), indegree type `c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompleteTypeCounts {
    d: usize,
    counts: BTreeMap<(u32, u32, Vec<u32>), u32>,
}

impl CompleteTypeCounts {
    pub fn new(d: usize) -> Self {
        CompleteTypeCounts {
            d,
            counts: BTreeMap::new(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn add(&mut self, t: u32, u: u32, c: Vec<u32>, k: u32) {
        debug_assert_eq!(c.len(), self.d);
        if k > 0 {
            *self.counts.entry((t, u, c)).or_insert(0) += k;
        }
    }

    /// Removes `k` from an entry; returns false if it holds fewer.
    pub fn remove(&mut self, t: u32, u: u32, c: &[u32], k: u32) -> bool {
        let key = (t, u, c.to_vec());
        match self.counts.get_mut(&key) {
            Some(cur) if *cur >= k => {
                *cur -= k;
                if *cur == 0 {
                    self.counts.remove(&key);
                }
                true
            }
            _ => false,
        }
    }

    pub fn get(&self, t: u32, u: u32, c: &[u32]) -> u32 {
        self.counts.get(&(t, u, c.to_vec())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &[u32], u32)> {
        self.counts.iter().map(|((t, u, c), &k)| (*t, *u, c.as_slice(), k))
    }

    pub fn validate(&self) -> Result<()> {
        for (t, u, c, _) in self.entries() {
            if t < 1 || t as usize > self.d || u < 1 || u as usize > self.d + 1 || c.len() != self.d {
                return Err(Error::invalid(format!(
                    "complete type ({t}, {u}, {c:?}) malformed for d = {}",
                    self.d
                )));
            }
        }
        Ok(())
    }

    /// Forgets the parent type: `Σ_u N_{t,u,c}`.
    pub fn degree_classes(&self) -> DegreeClassCounts {
        let mut out = DegreeClassCounts::new(self.d);
        for (t, _, c, k) in self.entries() {
            out.add(t, c.to_vec(), k);
        }
        out
    }
}

impl RootedMultitypeTree {
    pub fn edge_type_counts(&self) -> EdgeTypeMatrix {
        self.indegree_vector().edge_type_counts()
    }

    pub fn degree_class_counts(&self) -> DegreeClassCounts {
        self.indegree_vector().degree_class_counts()
    }

    /// The root's fictitious parent has type `d + 1`.
    pub fn complete_type_counts(&self) -> CompleteTypeCounts {
        let gamma = self.indegree_vector();
        let p = self.profile();
        let d = p.d() as u32;
        let mut out = CompleteTypeCounts::new(p.d());
        for (k, parent) in self.parent_array().iter().enumerate() {
            let v = p.vertex(k);
            let u = parent.map_or(d + 1, |q| p.vertex(q).ty);
            out.add(v.ty, u, gamma.indegree_type(v), 1);
        }
        out
    }
}
