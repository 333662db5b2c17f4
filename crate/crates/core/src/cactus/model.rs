use serde::{Deserialize, Serialize};

use crate::model::{Profile, VertexId};
use crate::{Error, Result};

use super::map::CactusMap;

/// One corner of a gon: the vertex label and the gons hanging there.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub label: u32,
    pub children: Vec<GonNode>,
}

/// A gon with its `d` corners; corner `k` has type `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GonNode {
    pub corners: Vec<Corner>,
}

impl GonNode {
    fn count_gons(&self) -> usize {
        1 + self
            .corners
            .iter()
            .flat_map(|c| &c.children)
            .map(GonNode::count_gons)
            .sum::<usize>()
    }
}

/// A rooted vertex-labeled planar `d`-cactus with `n_t` vertices of type `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cactus {
    profile: Profile,
    root: GonNode,
}

impl Cactus {
    /// Validates the structure and labels.
    pub fn new(profile: Profile, root: GonNode) -> Result<Self> {
        let c = Cactus { profile, root };
        c.validate()?;
        Ok(c)
    }

    pub(crate) fn new_unchecked(profile: Profile, root: GonNode) -> Self {
        Cactus { profile, root }
    }

    pub fn d(&self) -> usize {
        self.profile.d()
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn root(&self) -> &GonNode {
        &self.root
    }

    /// Number of gons.
    pub fn size(&self) -> usize {
        self.root.count_gons()
    }

    pub fn num_vertices(&self) -> usize {
        self.profile.num_vertices()
    }

    /// Gon arity, type order, label ranges, each labeled vertex used exactly
    /// once, and the vertex count `(d - 1)·size + 1`.
    pub fn validate(&self) -> Result<()> {
        let d = self.d();
        if d < 2 {
            return Err(Error::Cactus("gons need at least two corners".into()));
        }
        // building the rotation system checks arity, ranges and label reuse
        let map = CactusMap::from_cactus(self)?;
        if map.num_vertices() != self.profile.num_vertices() {
            return Err(Error::Cactus(format!(
                "{} of {} labeled vertices appear",
                map.num_vertices(),
                self.profile.num_vertices()
            )));
        }
        let size = self.size();
        if self.num_vertices() != (d - 1) * size + 1 {
            return Err(Error::Cactus(format!(
                "{} vertices cannot form {size} gons of size {d}",
                self.num_vertices()
            )));
        }
        Ok(())
    }

    /// Number of gons at each vertex.
    pub fn degree_vector(&self) -> CactusDegreeVector {
        let map = CactusMap::from_cactus(self).expect("valid cactus");
        let mut g = CactusDegreeVector::zeros(&self.profile);
        for v in self.profile.vertices() {
            g.set(v, map.degree(v) as u32);
        }
        g
    }

    pub fn to_json(&self) -> CactusJson {
        CactusJson {
            d: self.d(),
            profile: self.profile.counts().to_vec(),
            root: gon_json(&self.root),
        }
    }

    pub fn from_json(j: &CactusJson) -> Result<Self> {
        if j.d != j.profile.len() {
            return Err(Error::invalid(format!("d = {} but profile has {} entries", j.d, j.profile.len())));
        }
        let profile = Profile::new(j.profile.clone())?;
        Cactus::new(profile, gon_from_json(&j.root, j.d)?)
    }
}

/// `γ_{t,i}`: the number of gons at vertex `(t, i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CactusDegreeVector {
    profile: Profile,
    gamma: Vec<u32>,
}

impl CactusDegreeVector {
    pub fn zeros(profile: &Profile) -> Self {
        CactusDegreeVector {
            profile: profile.clone(),
            gamma: vec![0; profile.num_vertices()],
        }
    }

    /// Degrees listed type by type, label by label.
    pub fn from_degrees(profile: &Profile, degrees: &[u32]) -> Result<Self> {
        if degrees.len() != profile.num_vertices() {
            return Err(Error::invalid(format!(
                "{} degrees for {} vertices",
                degrees.len(),
                profile.num_vertices()
            )));
        }
        Ok(CactusDegreeVector {
            profile: profile.clone(),
            gamma: degrees.to_vec(),
        })
    }

    /// `γ*(n)`: `γ_{t,1} = n - n_t + 1`, every other vertex of degree 1.
    pub fn star(profile: &Profile, n: u32) -> Self {
        let mut g = CactusDegreeVector::zeros(profile);
        for v in profile.vertices() {
            let k = if v.label == 1 { n + 1 - profile.count(v.ty) } else { 1 };
            g.set(v, k);
        }
        g
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn get(&self, v: VertexId) -> u32 {
        self.gamma[self.profile.index(v)]
    }

    pub fn set(&mut self, v: VertexId, k: u32) {
        let idx = self.profile.index(v);
        self.gamma[idx] = k;
    }

    pub fn degrees(&self) -> &[u32] {
        &self.gamma
    }

    /// `Σ_i γ_{t,i}`.
    pub fn type_sum(&self, t: u32) -> u64 {
        self.gamma[self.profile.type_range(t)].iter().map(|&k| u64::from(k)).sum()
    }
}

/// JSON form of a cactus: the root gon outermost.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CactusJson {
    pub d: usize,
    pub profile: Vec<u32>,
    pub root: GonJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GonJson {
    pub vertices: Vec<CornerJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerJson {
    #[serde(rename = "type")]
    pub ty: u32,
    pub label: u32,
    pub children: Vec<GonJson>,
}

fn gon_json(g: &GonNode) -> GonJson {
    GonJson {
        vertices: g
            .corners
            .iter()
            .enumerate()
            .map(|(k, c)| CornerJson {
                ty: k as u32 + 1,
                label: c.label,
                children: c.children.iter().map(gon_json).collect(),
            })
            .collect(),
    }
}

fn gon_from_json(g: &GonJson, d: usize) -> Result<GonNode> {
    if g.vertices.len() != d {
        return Err(Error::Cactus(format!("gon with {} corners, expected {d}", g.vertices.len())));
    }
    let mut corners = Vec::with_capacity(d);
    for (k, c) in g.vertices.iter().enumerate() {
        if c.ty as usize != k + 1 {
            return Err(Error::Cactus(format!("corner {} has type {}; types run 1..{d} clockwise", k + 1, c.ty)));
        }
        corners.push(Corner {
            label: c.label,
            children: c.children.iter().map(|h| gon_from_json(h, d)).collect::<Result<_>>()?,
        });
    }
    Ok(GonNode { corners })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cactus::enumerate_cacti;
    use crate::Bounds;

    fn p(c: &[u32]) -> Profile {
        Profile::new(c.to_vec()).unwrap()
    }

    fn leaf(labels: &[u32]) -> GonNode {
        GonNode {
            corners: labels.iter().map(|&label| Corner { label, children: Vec::new() }).collect(),
        }
    }

    #[test]
    fn degrees() {
        let single = Cactus::new(p(&[1, 1, 1]), leaf(&[1, 1, 1])).unwrap();
        assert_eq!(single.degree_vector().degrees(), &[1, 1, 1]);
        // two edges sharing the type-2 vertex
        let mut root = leaf(&[1, 1]);
        root.corners[1].children.push(leaf(&[2, 1]));
        let c = Cactus::new(p(&[2, 1]), root).unwrap();
        assert_eq!(c.size(), 2);
        assert_eq!(c.degree_vector().get(VertexId::new(2, 1)), 2);
        let star = &enumerate_cacti(&p(&[1, 3]), &Bounds::default()).unwrap();
        let g = CactusDegreeVector::star(&p(&[1, 3]), 3);
        assert!(star.iter().any(|c| c.degree_vector() == g));
        assert!(star.iter().all(|c| c.degree_vector().type_sum(1) == 3));
    }

    #[test]
    fn rejects_malformed() {
        assert!(Cactus::new(p(&[1, 1]), leaf(&[1, 2])).is_err());
        assert!(Cactus::new(p(&[2, 1]), leaf(&[1, 1])).is_err());
        let mut root = leaf(&[1, 1]);
        root.corners[1].children.push(leaf(&[1, 1]));
        assert!(Cactus::new(p(&[2, 1]), root).is_err());
        let mut root = leaf(&[1, 1]);
        root.corners[1].children.push(leaf(&[2, 2]));
        assert!(Cactus::new(p(&[2, 2]), root).is_err());
    }

    #[test]
    fn json_round_trip() {
        for c in enumerate_cacti(&p(&[2, 2, 1]), &Bounds::default()).unwrap() {
            let text = serde_json::to_string(&c.to_json()).unwrap();
            let back: CactusJson = serde_json::from_str(&text).unwrap();
            assert_eq!(Cactus::from_json(&back).unwrap(), c);
        }
        let j: CactusJson = serde_json::from_str(
            r#"{"d":2,"profile":[1,1],"root":{"vertices":[{"type":1,"label":1,"children":[]},{"type":2,"label":1,"children":[]}]}}"#,
        )
        .unwrap();
        assert_eq!(Cactus::from_json(&j).unwrap().size(), 1);
    }
}
