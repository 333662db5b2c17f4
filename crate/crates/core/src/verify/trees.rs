use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Monomial, Polynomial, Rational, Var};
use crate::enumerate::{enumerate_plane_trees, for_each_forest, for_each_unrooted};
use crate::formulas::{
    count_plane_trees, count_unitype_degree, delta_polynomial, delta_skeleton_value, delta_via_determinant,
    gf_forests, gf_multitype, tree_monomial_sum,
};
use crate::model::Profile;
use crate::Result;

use super::{compositions, profiles, Checker, VerifyConfig};

/// Cayley's `n^{n-2}` and the degree-sequence multinomial, `n ≤ max_vertices`.
pub(crate) fn unitype(ck: &mut Checker, cfg: &VerifyConfig) -> Result<()> {
    for n in 1..=cfg.max_vertices {
        let mut total = 0u64;
        let mut tally: HashMap<Vec<u64>, u64> = HashMap::new();
        let mut deg = vec![0u64; n];
        for_each_unrooted(n, &cfg.bounds, |edges| {
            total += 1;
            deg.fill(0);
            for &(a, b) in edges {
                deg[a as usize] += 1;
                deg[b as usize] += 1;
            }
            *tally.entry(deg.clone()).or_insert(0) += 1;
        })?;
        let cayley = if n == 1 { 1 } else { (n as u64).pow(n as u32 - 2) };
        ck.eq(|| format!("trees on {n} vertices"), cayley, total);
        if n == 1 {
            ck.eq(|| "degree (0)".into(), count_unitype_degree(&[0])?, BigUint::from(total));
            continue;
        }
        for gamma in compositions(2 * n as u32 - 2, n, 1) {
            let gamma: Vec<u64> = gamma.into_iter().map(u64::from).collect();
            let brute = tally.get(&gamma).copied().unwrap_or(0);
            ck.eq(|| format!("degree sequence {gamma:?}"), BigUint::from(brute), count_unitype_degree(&gamma)?);
        }
    }
    Ok(())
}

/// The multitype generating function against the monomial sum over
/// enumerated trees, for every profile and root type.
pub(crate) fn gf(ck: &mut Checker, cfg: &VerifyConfig) -> Result<()> {
    for profile in profiles(cfg.max_d, cfg.max_vertices) {
        for rho in 1..=profile.d() as u32 {
            let formula = gf_multitype(&profile, rho, &cfg.bounds)?;
            let brute = tree_monomial_sum(&profile, rho, &cfg.bounds)?;
            ck.eq(
                || format!("profile {:?}, root type {rho}", profile.counts()),
                poly_digest(&brute),
                poly_digest(&formula),
            );
            ck.holds(|| format!("profile {:?}, root type {rho}: full polynomial", profile.counts()), formula == brute);
        }
    }
    Ok(())
}

/// Term count and value at all ones; enough to show in a failure line.
fn poly_digest(p: &Polynomial) -> (usize, Rational) {
    (p.num_terms(), p.evaluate(|_| Rational::from_integer(1.into())))
}

/// The Laplacian minor against the explicit skeleton sum and the expanded
/// `Δ`, under seeded random integer substitutions, `2 ≤ d ≤ max_d`.
pub(crate) fn determinant(ck: &mut Checker, cfg: &VerifyConfig) -> Result<()> {
    const ROUNDS: usize = 20;
    for d in 2..=cfg.max_d {
        let profile = Profile::new(vec![2; d])?;
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ d as u64);
        let deltas: Vec<Polynomial> = (1..=d as u32)
            .map(|rho| delta_polynomial(&profile, rho, &cfg.bounds))
            .collect::<Result<_>>()?;
        for round in 0..ROUNDS {
            let values: HashMap<Var, Rational> = profile
                .vertices()
                .flat_map(|v| (1..=d as u32).map(move |s| Var::Edge(s, v.ty, v.label)))
                .map(|x| (x, Rational::from_integer(rng.gen_range(-9i64..=9).into())))
                .collect();
            let subst = |x: Var| values.get(&x).cloned().unwrap_or_else(Rational::zero);
            for rho in 1..=d as u32 {
                let det = delta_via_determinant(&profile, rho, subst, &cfg.bounds)?;
                let sum = delta_skeleton_value(&profile, rho, subst, &cfg.bounds)?;
                let expanded = deltas[rho as usize - 1].evaluate(subst);
                let input = || format!("d = {d}, root type {rho}, round {round}");
                ck.eq(input, &sum, &det);
                ck.eq(input, &sum, &expanded);
            }
        }
    }
    Ok(())
}

/// The forest generating function against the enumerated forests, both as
/// polynomials and at all ones.
pub(crate) fn forests(ck: &mut Checker, cfg: &VerifyConfig) -> Result<()> {
    for profile in profiles(cfg.max_d, cfg.max_vertices) {
        let d = profile.d();
        let nv = profile.num_vertices();
        let types = profile.type_table();
        // γ slots (s-1)·|V| + parent, then one root counter per type
        let mut key = vec![0u32; d * nv + d];
        let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
        let mut total = 0u64;
        for_each_forest(&profile, &cfg.bounds, |parent| {
            total += 1;
            key.fill(0);
            for (c, p) in parent.iter().enumerate() {
                match *p {
                    Some(p) => key[types[c] * nv + p] += 1,
                    None => key[d * nv + types[c]] += 1,
                }
            }
            *tally.entry(key.clone()).or_insert(0) += 1;
        })?;
        let mut brute = Polynomial::zero();
        for (k, count) in tally {
            let m = Monomial::from_powers(k.iter().enumerate().map(|(slot, &e)| {
                if slot < d * nv {
                    let v = profile.vertex(slot % nv);
                    (Var::Edge((slot / nv) as u32 + 1, v.ty, v.label), e)
                } else {
                    (Var::Root((slot - d * nv) as u32 + 1), e)
                }
            }));
            brute.add_term(m, Rational::from_integer(count.into()));
        }
        let formula = gf_forests(&profile, &cfg.bounds)?;
        let input = || format!("profile {:?}", profile.counts());
        ck.eq(input, Rational::from_integer(total.into()), formula.evaluate(|_| Rational::from_integer(1.into())));
        ck.holds(input, formula == brute);
    }
    Ok(())
}

/// Plane trees by degree distribution, every distribution for `n ≤ max_vertices`.
pub(crate) fn plane(ck: &mut Checker, cfg: &VerifyConfig) -> Result<()> {
    for n in 1..=cfg.max_vertices {
        let mut tally: HashMap<Vec<u64>, u64> = HashMap::new();
        let trees = enumerate_plane_trees(n, &cfg.bounds)?;
        for t in &trees {
            let mut dist = t.degree_distribution();
            dist.resize(n, 0);
            *tally.entry(dist).or_insert(0) += 1;
        }
        let catalan = crate::algebra::binomial(2 * n as u64 - 2, n as u64 - 1) / BigUint::from(n as u64);
        ck.eq(|| format!("plane trees on {n} vertices"), catalan, BigUint::from(trees.len()));
        for dist in compositions(n as u32, n, 0) {
            let dist: Vec<u64> = dist.into_iter().map(u64::from).collect();
            let brute = tally.get(&dist).copied().unwrap_or(0);
            ck.eq(|| format!("degree distribution {dist:?}"), BigUint::from(brute), count_plane_trees(&dist)?);
        }
    }
    Ok(())
}
