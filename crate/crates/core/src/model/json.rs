//! Wire shapes for trees and forests. Parent lists are sorted by child, so
//! serialization is byte-stable.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

use super::{Profile, RootedForest, RootedMultitypeTree, UnrootedTree, VertexId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub d: usize,
    pub profile: Vec<u32>,
    pub root: VertexId,
    pub parents: Vec<(VertexId, VertexId)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestJson {
    pub d: usize,
    pub profile: Vec<u32>,
    pub roots: Vec<VertexId>,
    pub parents: Vec<(VertexId, VertexId)>,
}

/// A tree with one distinguished `(child, parent)` edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedTreeJson {
    #[serde(flatten)]
    pub tree: TreeJson,
    pub marked: (VertexId, VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnrootedTreeJson {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
}

fn profile_of(d: usize, counts: &[u32]) -> Result<Profile> {
    if d != counts.len() {
        return Err(Error::invalid(format!("d = {d} but profile has {} entries", counts.len())));
    }
    Profile::new(counts.to_vec())
}

impl From<&RootedMultitypeTree> for TreeJson {
    fn from(t: &RootedMultitypeTree) -> Self {
        TreeJson {
            d: t.profile().d(),
            profile: t.profile().counts().to_vec(),
            root: t.root(),
            parents: t.edges(),
        }
    }
}

impl TreeJson {
    pub fn to_tree(&self) -> Result<RootedMultitypeTree> {
        let p = profile_of(self.d, &self.profile)?;
        Ok(RootedMultitypeTree::from_parents(p, self.root, &self.parents)?)
    }
}

impl From<&RootedForest> for ForestJson {
    fn from(f: &RootedForest) -> Self {
        ForestJson {
            d: f.profile().d(),
            profile: f.profile().counts().to_vec(),
            roots: f.roots(),
            parents: f.edges(),
        }
    }
}

impl ForestJson {
    pub fn to_forest(&self) -> Result<RootedForest> {
        let p = profile_of(self.d, &self.profile)?;
        Ok(RootedForest::from_parents(p, &self.roots, &self.parents)?)
    }
}

impl From<&UnrootedTree> for UnrootedTreeJson {
    fn from(t: &UnrootedTree) -> Self {
        UnrootedTreeJson {
            n: t.n(),
            edges: t.edges().to_vec(),
        }
    }
}

impl UnrootedTreeJson {
    pub fn to_tree(&self) -> Result<UnrootedTree> {
        UnrootedTree::new(self.n, self.edges.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_round_trip_and_shape() {
        let p = Profile::new(vec![1, 2]).unwrap();
        let v = VertexId::new;
        let t = RootedMultitypeTree::from_parents(p, v(1, 1), &[(v(2, 2), v(1, 1)), (v(2, 1), v(2, 2))]).unwrap();
        let j = TreeJson::from(&t);
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(
            s,
            r#"{"d":2,"profile":[1,2],"root":[1,1],"parents":[[[2,1],[2,2]],[[2,2],[1,1]]]}"#
        );
        let back: TreeJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_tree().unwrap(), t);
    }

    #[test]
    fn marked_tree_is_flat() {
        let j = MarkedTreeJson {
            tree: TreeJson {
                d: 1,
                profile: vec![2],
                root: VertexId::new(1, 1),
                parents: vec![(VertexId::new(1, 2), VertexId::new(1, 1))],
            },
            marked: (VertexId::new(1, 2), VertexId::new(1, 1)),
        };
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains(r#""marked":[[1,2],[1,1]]"#));
        assert!(s.starts_with(r#"{"d":1"#));
        let back: MarkedTreeJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back, j);
    }

    #[test]
    fn mismatched_d_is_rejected() {
        let j = TreeJson {
            d: 2,
            profile: vec![1],
            root: VertexId::new(1, 1),
            parents: vec![],
        };
        assert!(j.to_tree().is_err());
    }
}
