use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{multinomial, Monomial, Polynomial, Rational, Var};
use crate::enumerate::{for_each_skeleton, for_each_tree, CayleySkeleton};
use crate::model::{IndegreeVector, Profile, RootedMultitypeTree, VertexId};
use crate::{Bounds, Error, Result};

/// One elementary move: a type-`s` child of `(t, from)` becomes a child of `(t, to)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StarStep {
    pub s: u32,
    pub t: u32,
    pub from: u32,
    pub to: u32,
}

/// `γ'` with `γ'_{s,t,from} = γ_{s,t,from} - 1` and `γ'_{s,t,to} = γ_{s,t,to} + 1`.
pub fn shift_indegree(gamma: &IndegreeVector, step: StarStep) -> Result<IndegreeVector> {
    let (vf, vt) = (VertexId::new(step.t, step.from), VertexId::new(step.t, step.to));
    let profile = gamma.profile();
    if step.s < 1 || step.s as usize > profile.d() || !profile.contains(vf) || !profile.contains(vt) {
        return Err(Error::invalid(format!("step {step:?} is outside the profile")));
    }
    let k = gamma.get(step.s, vf);
    if k == 0 {
        return Err(Error::precondition(format!("{vf} has no child of type {}", step.s)));
    }
    let mut out = gamma.clone();
    out.set(step.s, vf, k - 1);
    out.set(step.s, vt, gamma.get(step.s, vt) + 1);
    Ok(out)
}

/// `γ*`: every child moved onto the label-1 vertex of its parent's type.
pub fn star_vector(gamma: &IndegreeVector) -> IndegreeVector {
    let profile = gamma.profile();
    let mut out = IndegreeVector::zeros(profile);
    for (s, v, k) in gamma.entries() {
        let one = VertexId::new(v.ty, 1);
        out.set(s, one, out.get(s, one) + k);
    }
    out
}

/// Moves from `γ` to `γ*`, one child at a time, in `(s, t, label)` order.
pub fn star_reduction_schedule(gamma: &IndegreeVector) -> Vec<StarStep> {
    let mut steps = Vec::new();
    for (s, v, k) in gamma.entries() {
        if v.label != 1 {
            let step = StarStep {
                s,
                t: v.ty,
                from: v.label,
                to: 1,
            };
            steps.extend(std::iter::repeat_n(step, k as usize));
        }
    }
    steps
}

/// `|T_{ρ,γ}| / |T_{ρ,γ*}| = Π_{s,t} multinomial(γ*_{s,t,1}; γ_{s,t,1}, …, γ_{s,t,n_t})`.
pub fn star_reduction_factor(gamma: &IndegreeVector) -> BigUint {
    let profile = gamma.profile();
    let d = profile.d() as u32;
    let mut acc = BigUint::one();
    for s in 1..=d {
        for t in 1..=d {
            let parts: Vec<u64> = (1..=profile.count(t))
                .map(|i| u64::from(gamma.get(s, VertexId::new(t, i))))
                .collect();
            acc *= multinomial(&parts);
        }
    }
    acc
}

/// The same factor as a product of the per-step ratios
/// `γ'_{s,t,to} / γ_{s,t,from}` along the schedule.
pub(crate) fn schedule_ratio(gamma: &IndegreeVector) -> Result<Rational> {
    let mut cur = gamma.clone();
    let mut ratio = Rational::one();
    for step in star_reduction_schedule(gamma) {
        let next = shift_indegree(&cur, step)?;
        let before = cur.get(step.s, VertexId::new(step.t, step.from));
        let after = next.get(step.s, VertexId::new(step.t, step.to));
        ratio *= Rational::new(after.into(), before.into());
        cur = next;
    }
    Ok(ratio)
}

/// The skeleton on the label-1 vertices of a star tree, rooted at `ρ`.
pub fn star_core(tree: &RootedMultitypeTree) -> Result<CayleySkeleton> {
    if !tree.is_star() {
        return Err(Error::precondition("a vertex with label other than 1 has children"));
    }
    let d = tree.profile().d() as u32;
    let parent = (1..=d)
        .map(|t| tree.parent_of(VertexId::new(t, 1)).map(|p| p.ty))
        .collect();
    CayleySkeleton::new(tree.root_type(), parent)
}

fn y(s: u32, t: u32) -> Var {
    Var::Edge(s, t, 1)
}

/// `Π_s (Σ_t y_{s,t})^{n_s - 1} · Σ_{A ∈ Cay_ρ(d)} Π_{(s,t) ∈ A} y_{s,t}`,
/// with `y_{s,t}` written as `x_{s,t,1}`.
pub fn star_tree_gf(profile: &Profile, rho: u32, bounds: &Bounds) -> Result<Polynomial> {
    let d = profile.d() as u32;
    if rho < 1 || rho > d {
        return Err(Error::invalid(format!("root type {rho} is outside [1, {d}]")));
    }
    let mut core = Polynomial::zero();
    for_each_skeleton(d as usize, rho, bounds, |parent| {
        let m = Monomial::from_powers(
            parent
                .iter()
                .enumerate()
                .filter_map(|(s, p)| p.map(|t| (y(s as u32 + 1, t as u32 + 1), 1))),
        );
        core.add_term(m, Rational::one());
    })?;
    let mut acc = core;
    for s in 1..=d {
        let row = Polynomial::sum_of_vars((1..=d).map(|t| y(s, t)));
        acc = &acc * &row.pow(profile.count(s) - 1);
    }
    Ok(acc)
}

/// `Σ Π y_{s,t}^{ch_s(t,1)}` over the star trees of `T_ρ(n)`, by enumeration.
pub fn star_tree_monomial_sum(profile: &Profile, rho: u32, bounds: &Bounds) -> Result<Polynomial> {
    let d = profile.d();
    let types = profile.type_table();
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut key = vec![0u32; d * d];
    for_each_tree(profile, Some(rho), bounds, |_, parent| {
        if parent.iter().flatten().any(|&p| profile.vertex(p).label != 1) {
            return;
        }
        key.fill(0);
        for (c, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                key[types[c] * d + types[p]] += 1;
            }
        }
        *tally.entry(key.clone()).or_insert(0) += 1;
    })?;
    let mut out = Polynomial::zero();
    for (k, count) in tally {
        let m = Monomial::from_powers(
            k.iter()
                .enumerate()
                .map(|(slot, &e)| (y((slot / d) as u32 + 1, (slot % d) as u32 + 1), e)),
        );
        out.add_term(m, Rational::from_integer(count.into()));
    }
    Ok(out)
}
