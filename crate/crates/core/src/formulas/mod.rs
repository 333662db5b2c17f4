//! Closed-form counts and generating functions.
//!
//! Inputs that cannot be realized (incompatible edge counts, inconsistent
//! indegrees, …) count zero. Only structurally malformed input — a type or
//! label outside its range — is an error.

mod complete;
mod counts;
mod gf;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::enumerate::for_each_skeleton;
use crate::{Bounds, Error, Result};

pub use complete::{count_by_complete_types, count_complete_special};
pub use counts::{
    count_by_degree_classes, count_by_edge_types, count_by_indegree_vector, count_embedded,
    count_injective_by_edge_types, count_injective_embedded, count_plane_trees,
    count_unitype_degree, has_single_skeleton_support,
};
pub use gf::{
    delta_polynomial, delta_skeleton_value, delta_via_determinant, gf_forests, gf_multitype,
    tree_monomial_sum,
};

/// A digraph `D ⊆ [d]²` of allowed edge types.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddingDigraph {
    d: usize,
    pairs: BTreeSet<(u32, u32)>,
}

impl EmbeddingDigraph {
    pub fn new(d: usize, pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let pairs: BTreeSet<(u32, u32)> = pairs.into_iter().collect();
        for &(s, t) in &pairs {
            if s < 1 || t < 1 || s as usize > d || t as usize > d {
                return Err(Error::invalid(format!("pair ({s},{t}) is outside [{d}]²")));
            }
        }
        Ok(EmbeddingDigraph { d, pairs })
    }

    /// All of `[d]²`.
    pub fn full(d: usize) -> Self {
        let d32 = d as u32;
        EmbeddingDigraph {
            d,
            pairs: (1..=d32).flat_map(|s| (1..=d32).map(move |t| (s, t))).collect(),
        }
    }

    /// The subset of `[d]²` whose bit `(s-1)·d + (t-1)` is set in `mask`.
    pub fn from_mask(d: usize, mask: u64) -> Self {
        let pairs = (0..d * d)
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| ((k / d) as u32 + 1, (k % d) as u32 + 1))
            .collect();
        EmbeddingDigraph { d, pairs }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn contains(&self, s: u32, t: u32) -> bool {
        self.pairs.contains(&(s, t))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.pairs.iter().copied()
    }

    /// `D(s) = { t : (s, t) ∈ D }`.
    pub fn out_neighbours(&self, s: u32) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().filter(move |p| p.0 == s).map(|p| p.1)
    }
}

/// `Σ_{A ∈ Cay_ρ(d)} Π_{(s,t) ∈ A} w(s, t)`.
pub(crate) fn skeleton_sum<F>(d: usize, rho: u32, weight: F) -> Result<BigUint>
where
    F: Fn(u32, u32) -> BigUint,
{
    let mut w = vec![BigUint::zero(); d * d];
    for s in 0..d {
        for t in 0..d {
            if s != t {
                w[s * d + t] = weight(s as u32 + 1, t as u32 + 1);
            }
        }
    }
    let mut total = BigUint::zero();
    for_each_skeleton(d, rho, &Bounds::default(), |parent| {
        let mut prod = BigUint::one();
        for (s, p) in parent.iter().enumerate() {
            if let Some(t) = *p {
                let x = &w[s * d + t];
                if x.is_zero() {
                    return;
                }
                prod *= x;
            }
        }
        total += prod;
    })?;
    Ok(total)
}

/// `num / den`, which must be exact.
pub(crate) fn exact_div(num: BigUint, den: &BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("{num}/{den}")));
    }
    Ok(q)
}

pub(crate) fn check_root_type(d: usize, rho: u32) -> Result<()> {
    if rho < 1 || rho as usize > d {
        return Err(Error::invalid(format!("root type {rho} is outside [1, {d}]")));
    }
    Ok(())
}
