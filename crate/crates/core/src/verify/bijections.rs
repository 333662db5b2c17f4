use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use crate::algebra::Rational;
use crate::bijection::{
    apply_in_place, classify_slice, phi_unitype, schedule_ratio, star_reduction_factor, star_tree_gf,
    star_tree_monomial_sum, star_vector,
};
use crate::enumerate::{enumerate_unrooted, for_each_tree};
use crate::model::{IndegreeVector, Profile, UnrootedTree};
use crate::Result;

use super::{compositions, profiles, Checker, VerifyConfig};

pub(crate) fn bijections(ck: &mut Checker, cfg: &VerifyConfig) -> Result<()> {
    for n in 2..=cfg.max_vertices {
        unitype_moves(ck, n, cfg)?;
    }
    for profile in profiles(cfg.max_d, cfg.max_vertices) {
        for rho in 1..=profile.d() as u32 {
            marked_moves(ck, &profile, rho, cfg)?;
            let formula = star_tree_gf(&profile, rho, &cfg.bounds)?;
            let brute = star_tree_monomial_sum(&profile, rho, &cfg.bounds)?;
            ck.holds(|| format!("star trees, profile {:?}, root type {rho}", profile.counts()), formula == brute);
        }
    }
    Ok(())
}

/// Distances from `from` in an unrooted tree, 1-based.
fn distances(tree: &UnrootedTree, from: u32) -> Vec<u32> {
    let n = tree.n();
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in tree.edges() {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    let mut dist = vec![u32::MAX; n + 1];
    dist[from as usize] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v as usize] {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[v as usize] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Moving a marked edge between two vertices of a Cayley tree: round trips,
/// degree bookkeeping, refusal on path edges, and the class-size identity
/// `(γ_i - 1)|T_γ| = (γ'_j - 1)|T_γ'|`.
fn unitype_moves(ck: &mut Checker, n: usize, cfg: &VerifyConfig) -> Result<()> {
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
    for tree in enumerate_unrooted(n, &cfg.bounds)? {
        let deg = tree.degrees();
        *tally.entry(deg.clone()).or_insert(0) += 1;
        for j in 1..=n as u32 {
            let dist = distances(&tree, j);
            for &(a, b) in tree.edges() {
                for (i, k) in [(a, b), (b, a)] {
                    if i == j {
                        continue;
                    }
                    let input = || format!("tree {:?}, marked {{{i},{k}}}, {i} -> {j}", tree.edges());
                    let on_path = dist[k as usize] < dist[i as usize];
                    let result = phi_unitype(&tree, (i, k), i, j);
                    if on_path {
                        ck.holds(input, result.is_err());
                        continue;
                    }
                    let (image, mark) = result?;
                    let mut expected = deg.clone();
                    expected[i as usize - 1] -= 1;
                    expected[j as usize - 1] += 1;
                    ck.eq(input, expected, image.degrees());
                    let (back, back_mark) = phi_unitype(&image, mark, j, i)?;
                    ck.holds(input, back == tree && (back_mark == (i, k) || back_mark == (k, i)));
                }
            }
        }
    }
    for gamma in compositions(2 * n as u32 - 2, n, 1) {
        let size = |g: &Vec<u32>| BigUint::from(tally.get(g).copied().unwrap_or(0));
        for i in 0..n {
            if gamma[i] < 2 {
                continue;
            }
            for j in (0..n).filter(|&j| j != i) {
                let mut shifted = gamma.clone();
                shifted[i] -= 1;
                shifted[j] += 1;
                ck.eq(
                    || format!("degrees {gamma:?}, vertex {} -> {}", i + 1, j + 1),
                    size(&gamma) * (gamma[i] - 1),
                    size(&shifted) * (shifted[j] - 1),
                );
            }
        }
    }
    Ok(())
}

fn raw_gamma(parent: &[Option<usize>], types: &[usize], out: &mut [u32]) {
    let nv = parent.len();
    out.fill(0);
    for (c, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            out[types[c] * nv + p] += 1;
        }
    }
}

/// A single root of type `ρ` and no cycles.
fn is_tree(parent: &[Option<usize>], types: &[usize], rho: u32) -> bool {
    let roots: Vec<usize> = (0..parent.len()).filter(|&v| parent[v].is_none()).collect();
    if roots.len() != 1 || types[roots[0]] + 1 != rho as usize {
        return false;
    }
    (0..parent.len()).all(|v| {
        let mut cur = v;
        for _ in 0..parent.len() {
            match parent[cur] {
                Some(p) => cur = p,
                None => return true,
            }
        }
        false
    })
}

/// Moving a marked child between two same-type vertices of a multitype
/// tree: round trips, class preservation, indegree bookkeeping, the
/// class-size identity, and the reduction to star indegree vectors.
fn marked_moves(ck: &mut Checker, profile: &Profile, rho: u32, cfg: &VerifyConfig) -> Result<()> {
    let d = profile.d();
    let nv = profile.num_vertices();
    let types = profile.type_table();
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut image = vec![None; nv];
    let mut back = vec![None; nv];
    let mut g0 = vec![0u32; d * nv];
    let mut g1 = vec![0u32; d * nv];
    let mut cases = 0u64;
    let mut bad: Option<String> = None;
    for_each_tree(profile, Some(rho), &cfg.bounds, |_, parent| {
        raw_gamma(parent, &types, &mut g0);
        match tally.get_mut(g0.as_slice()) {
            Some(k) => *k += 1,
            None => {
                tally.insert(g0.clone(), 1);
            }
        }
        for c in 0..nv {
            let Some(a) = parent[c] else { continue };
            let s = types[c];
            for b in profile.type_range(types[a] as u32 + 1).filter(|&b| b != a) {
                cases += 1;
                image.copy_from_slice(parent);
                let (case, c1) = apply_in_place(&mut image, c, a, b);
                raw_gamma(&image, &types, &mut g1);
                let mut ok = is_tree(&image, &types, rho) && image[c1] == Some(b) && types[c1] == s;
                ok &= g1[s * nv + a] + 1 == g0[s * nv + a] && g1[s * nv + b] == g0[s * nv + b] + 1;
                ok &= (0..d * nv).filter(|&k| g0[k] != g1[k]).count() == 2;
                ok &= classify_slice(&image, c1, a) == case;
                back.copy_from_slice(&image);
                let (case2, c2) = apply_in_place(&mut back, c1, b, a);
                ok &= case2 == case && c2 == c && back == parent;
                if !ok && bad.is_none() {
                    bad = Some(format!("parents {parent:?}, child {c}, {a} -> {b}"));
                }
            }
        }
    })?;
    ck.batch(cases, format!("marked moves at profile {:?}, root type {rho}", profile.counts()), bad);

    let size = |g: &[u32]| BigUint::from(tally.get(g).copied().unwrap_or(0));
    let rows: Vec<u32> = (1..=d as u32).map(|s| profile.count(s) - u32::from(s == rho)).collect();
    let per_type: Vec<Vec<Vec<u32>>> = rows.iter().map(|&r| compositions(r, nv, 0)).collect();
    let mut all: Vec<Vec<u32>> = vec![Vec::new()];
    for opts in &per_type {
        all = all
            .iter()
            .flat_map(|p| opts.iter().map(move |o| [p.as_slice(), o.as_slice()].concat()))
            .collect();
    }
    for raw in all {
        let here = size(&raw);
        let gamma = IndegreeVector::from_raw(profile, raw.clone());
        let star = star_vector(&gamma);
        let factor = star_reduction_factor(&gamma);
        ck.eq(|| format!("star reduction of {raw:?}"), here.clone(), size(star.raw()) * &factor);
        ck.eq(
            || format!("star schedule of {raw:?}"),
            Rational::from_integer(factor.into()),
            schedule_ratio(&gamma)?,
        );
        for s in 0..d {
            for a in 0..nv {
                let k = raw[s * nv + a];
                if k == 0 {
                    continue;
                }
                for b in profile.type_range(types[a] as u32 + 1).filter(|&b| b != a) {
                    let mut shifted = raw.clone();
                    shifted[s * nv + a] -= 1;
                    shifted[s * nv + b] += 1;
                    ck.eq(
                        || format!("class sizes, {raw:?}, type {} child {a} -> {b}", s + 1),
                        &here * k,
                        size(&shifted) * shifted[s * nv + b],
                    );
                }
            }
        }
    }
    Ok(())
}
