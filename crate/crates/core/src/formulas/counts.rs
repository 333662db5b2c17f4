use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebra::{binomial, binomial_signed, factorial, multinomial};
use crate::enumerate::for_each_skeleton;
use crate::model::{DegreeClassCounts, EdgeTypeMatrix, IndegreeVector, Profile};
use crate::{Bounds, Error, Result};

use super::{check_root_type, exact_div, skeleton_sum, EmbeddingDigraph};

fn big(k: impl Into<BigUint>) -> BigUint {
    k.into()
}

fn check_dims(what: &str, d: usize, profile: &Profile) -> Result<()> {
    if d != profile.d() {
        return Err(Error::invalid(format!("{what} has d = {d}, profile has d = {}", profile.d())));
    }
    Ok(())
}

/// `Σ_A Π_{(s,t) ∈ A} m_{s,t}` over `Cay_ρ(d)`.
fn skeleton_sum_m(m: &EdgeTypeMatrix, rho: u32) -> Result<BigUint> {
    skeleton_sum(m.d(), rho, |s, t| big(m.get(s, t)))
}

/// Trees in `T_ρ(n)` with `m_{s,t}` edges of each type `(s, t)`.
pub fn count_by_edge_types(m: &EdgeTypeMatrix, profile: &Profile, rho: u32) -> Result<BigUint> {
    check_dims("edge type matrix", m.d(), profile)?;
    check_root_type(profile.d(), rho)?;
    if !m.is_compatible(profile, rho) {
        return Ok(BigUint::zero());
    }
    let d = profile.d() as u32;
    let mut num = skeleton_sum_m(m, rho)?;
    let mut den = BigUint::one();
    for s in 1..=d {
        num *= factorial(u64::from(profile.count(s) - 1));
        for t in 1..=d {
            let k = m.get(s, t);
            num *= big(profile.count(t)).pow(k);
            den *= factorial(u64::from(k));
        }
    }
    exact_div(num, &den)
}

/// Trees in `T_ρ(n)` whose edge types all lie in `D`.
pub fn count_embedded(dg: &EmbeddingDigraph, profile: &Profile, rho: u32) -> Result<BigUint> {
    check_dims("digraph", dg.d(), profile)?;
    check_root_type(profile.d(), rho)?;
    let d = profile.d() as u32;
    let mut acc = skeleton_sum(dg.d(), rho, |s, t| {
        if dg.contains(s, t) {
            big(profile.count(t))
        } else {
            BigUint::zero()
        }
    })?;
    for s in 1..=d {
        let reach: u64 = dg.out_neighbours(s).map(|t| u64::from(profile.count(t))).sum();
        acc *= big(reach).pow(profile.count(s) - 1);
    }
    Ok(acc)
}

/// Injective trees (at most one child of each type per vertex) with `m_{s,t}`
/// edges of each type.
pub fn count_injective_by_edge_types(m: &EdgeTypeMatrix, profile: &Profile, rho: u32) -> Result<BigUint> {
    check_dims("edge type matrix", m.d(), profile)?;
    check_root_type(profile.d(), rho)?;
    if !m.is_compatible(profile, rho) {
        return Ok(BigUint::zero());
    }
    let d = profile.d() as u32;
    let mut acc = skeleton_sum_m(m, rho)?;
    for s in 1..=d {
        acc *= factorial(u64::from(profile.count(s) - 1));
        for t in 1..=d {
            acc *= binomial(u64::from(profile.count(t)), u64::from(m.get(s, t)));
        }
    }
    Ok(acc)
}

/// Injective trees embedded in `D`.
pub fn count_injective_embedded(dg: &EmbeddingDigraph, profile: &Profile, rho: u32) -> Result<BigUint> {
    check_dims("digraph", dg.d(), profile)?;
    check_root_type(profile.d(), rho)?;
    let d = profile.d() as u32;
    let mut acc = skeleton_sum(dg.d(), rho, |s, t| {
        if dg.contains(s, t) {
            big(profile.count(t))
        } else {
            BigUint::zero()
        }
    })?;
    for s in 1..=d {
        let reach: i64 = dg.out_neighbours(s).map(|t| i64::from(profile.count(t))).sum();
        let top = i64::from(s == rho) - 1 + reach;
        let k = u64::from(profile.count(s) - 1);
        acc *= binomial_signed(top, k) * factorial(k);
    }
    Ok(acc)
}

/// Trees with prescribed indegree vector `γ`.
pub fn count_by_indegree_vector(gamma: &IndegreeVector, rho: u32) -> Result<BigUint> {
    let profile = gamma.profile();
    check_root_type(profile.d(), rho)?;
    if !gamma.is_consistent(rho) {
        return Ok(BigUint::zero());
    }
    let mut num = skeleton_sum_m(&gamma.edge_type_counts(), rho)?;
    for t in 1..=profile.d() as u32 {
        num *= factorial(u64::from(profile.count(t) - 1));
    }
    let mut den = BigUint::one();
    for (_, _, k) in gamma.entries() {
        den *= factorial(u64::from(k));
    }
    exact_div(num, &den)
}

/// Trees with `N_{t,c}` vertices of type `t` and indegree type `c`.
///
/// The profile is `n_t = Σ_c N_{t,c}`; every type must occur.
pub fn count_by_degree_classes(classes: &DegreeClassCounts, rho: u32) -> Result<BigUint> {
    classes.validate()?;
    let d = classes.d();
    check_root_type(d, rho)?;
    let n = classes.type_counts();
    if let Some(t) = n.iter().position(|&k| k == 0) {
        return Err(Error::invalid(format!("no vertex of type {} in the degree classes", t + 1)));
    }
    let m = classes.edge_marginals();
    for s in 1..=d as u32 {
        let row: u64 = (1..=d as u32).map(|t| u64::from(m.get(s, t))).sum();
        if n[s as usize - 1] != row + u64::from(s == rho) {
            return Ok(BigUint::zero());
        }
    }
    let mut num = skeleton_sum_m(&m, rho)?;
    for &nt in &n {
        num *= factorial(nt) * factorial(nt - 1);
    }
    let mut den = BigUint::one();
    for (_, c, k) in classes.entries() {
        den *= factorial(u64::from(k));
        for &cs in c {
            den *= factorial(u64::from(cs)).pow(k);
        }
    }
    exact_div(num, &den)
}

/// Unlabeled rooted plane trees with `N_i` vertices of out-degree `i`:
/// `(1/n)·multinomial(n; N_0, N_1, …)` when `Σ N_i = 1 + Σ i·N_i`.
pub fn count_plane_trees(counts: &[u64]) -> Result<BigUint> {
    let n: u64 = counts.iter().sum();
    let edges: u64 = counts.iter().enumerate().map(|(i, &k)| i as u64 * k).sum();
    if n == 0 || n != edges + 1 {
        return Ok(BigUint::zero());
    }
    exact_div(multinomial(counts), &big(n))
}

/// Unrooted Cayley trees on `[n]` where vertex `i` has degree `γ_i`:
/// `multinomial(n - 2; γ_1 - 1, …, γ_n - 1)`.
pub fn count_unitype_degree(gamma: &[u64]) -> Result<BigUint> {
    if gamma == [0] {
        return Ok(BigUint::one());
    }
    if let Some(i) = gamma.iter().position(|&g| g == 0) {
        return Err(Error::precondition(format!("vertex {} has degree 0", i + 1)));
    }
    let n = gamma.len() as u64;
    if gamma.iter().sum::<u64>() != 2 * n - 2 {
        return Ok(BigUint::zero());
    }
    let parts: Vec<u64> = gamma.iter().map(|g| g - 1).collect();
    Ok(multinomial(&parts))
}

/// Whether exactly one skeleton of `Cay_ρ(d)` has a non-zero weight under `m`,
/// i.e. whether the skeleton sum collapses to a single product.
pub fn has_single_skeleton_support(m: &EdgeTypeMatrix, rho: u32) -> Result<bool> {
    check_root_type(m.d(), rho)?;
    let mut supported = 0u32;
    for_each_skeleton(m.d(), rho, &Bounds::default(), |parent| {
        let ok = parent
            .iter()
            .enumerate()
            .all(|(s, p)| p.is_none_or(|t| m.get(s as u32 + 1, t as u32 + 1) > 0));
        supported += u32::from(ok);
    })?;
    Ok(supported == 1)
}
