use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;

use crate::enumerate::for_each_tree;
use crate::formulas::{
    count_by_complete_types, count_by_degree_classes, count_by_edge_types, count_by_indegree_vector,
    count_complete_special, count_embedded, count_injective_by_edge_types, count_injective_embedded,
    EmbeddingDigraph,
};
use crate::model::{CompleteTypeCounts, DegreeClassCounts, EdgeTypeMatrix, IndegreeVector, Profile};
use crate::{Error, Result};

use super::{compositions, profiles, Checker, VerifyConfig};

/// Every count formula against tallies over `T_ρ(n)`, sweeping every value
/// of each statistic that the profile admits, not only the realized ones.
pub(crate) fn counts(ck: &mut Checker, cfg: &VerifyConfig) -> Result<()> {
    for profile in profiles(cfg.max_d, cfg.max_vertices) {
        for rho in 1..=profile.d() as u32 {
            sweep(ck, &profile, rho, cfg)?;
        }
    }
    Ok(())
}

#[derive(Default)]
struct Tallies {
    total: u64,
    gamma: HashMap<Vec<u32>, u64>,
    m: HashMap<EdgeTypeMatrix, u64>,
    injective_m: HashMap<EdgeTypeMatrix, u64>,
    classes: HashMap<DegreeClassCounts, u64>,
    complete: HashMap<CompleteTypeCounts, u64>,
}

fn tally(profile: &Profile, rho: u32, cfg: &VerifyConfig) -> Result<Tallies> {
    let d = profile.d();
    let nv = profile.num_vertices();
    let types = profile.type_table();
    // γ in raw layout, then the 0-based parent type of every vertex (d for the root)
    let mut key = vec![0u32; d * nv + nv];
    let mut raw: HashMap<Vec<u32>, u64> = HashMap::new();
    for_each_tree(profile, Some(rho), &cfg.bounds, |_, parent| {
        key.fill(0);
        for (c, p) in parent.iter().enumerate() {
            match *p {
                Some(p) => {
                    key[types[c] * nv + p] += 1;
                    key[d * nv + c] = types[p] as u32;
                }
                None => key[d * nv + c] = d as u32,
            }
        }
        match raw.get_mut(key.as_slice()) {
            Some(k) => *k += 1,
            None => {
                raw.insert(key.clone(), 1);
            }
        }
    })?;
    let mut t = Tallies::default();
    for (key, k) in raw {
        t.total += k;
        let gamma = IndegreeVector::from_raw(profile, key[..d * nv].to_vec());
        let m = gamma.edge_type_counts();
        if gamma.is_injective() {
            *t.injective_m.entry(m.clone()).or_insert(0) += k;
        }
        *t.m.entry(m).or_insert(0) += k;
        *t.classes.entry(gamma.degree_class_counts()).or_insert(0) += k;
        let mut complete = CompleteTypeCounts::new(d);
        for v in profile.vertices() {
            let idx = profile.index(v);
            complete.add(v.ty, key[d * nv + idx] + 1, gamma.indegree_type(v), 1);
        }
        *t.complete.entry(complete).or_insert(0) += k;
        *t.gamma.entry(gamma.raw().to_vec()).or_insert(0) += k;
    }
    Ok(t)
}

fn get<K: std::hash::Hash + Eq>(map: &HashMap<K, u64>, key: &K) -> BigUint {
    BigUint::from(map.get(key).copied().unwrap_or(0))
}

/// Cartesian product of per-slot option lists.
fn product<T: Clone>(options: &[Vec<Vec<T>>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for opts in options {
        out = out
            .iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut v = prefix.clone();
                    v.extend(o.iter().cloned());
                    v
                })
            })
            .collect();
    }
    out
}

fn sweep(ck: &mut Checker, profile: &Profile, rho: u32, cfg: &VerifyConfig) -> Result<()> {
    let d = profile.d();
    let nv = profile.num_vertices();
    let t = tally(profile, rho, cfg)?;
    let at = |what: &str| format!("profile {:?}, root type {rho}: {what}", profile.counts());
    // edges leaving type-s children
    let rows: Vec<u32> = (1..=d as u32).map(|s| profile.count(s) - u32::from(s == rho)).collect();

    // edge-type matrices, plain and injective
    let matrices: Vec<EdgeTypeMatrix> = product(
        &rows.iter().map(|&r| compositions(r, d, 0)).collect::<Vec<_>>(),
    )
    .into_iter()
    .map(|flat| {
        let mut m = EdgeTypeMatrix::zeros(d);
        for (k, &x) in flat.iter().enumerate() {
            m.set((k / d) as u32 + 1, (k % d) as u32 + 1, x);
        }
        m
    })
    .collect();
    let mut covered = 0u64;
    for m in &matrices {
        covered += t.m.get(m).copied().unwrap_or(0);
        ck.eq(|| at(&format!("edge types {m:?}")), get(&t.m, m), count_by_edge_types(m, profile, rho)?);
        ck.eq(
            || at(&format!("injective, edge types {m:?}")),
            get(&t.injective_m, m),
            count_injective_by_edge_types(m, profile, rho)?,
        );
    }
    ck.eq(|| at("edge-type sweep covers every tree"), t.total, covered);

    // embeddings in every digraph on [d]
    for mask in 0..1u64 << (d * d) {
        let dg = EmbeddingDigraph::from_mask(d, mask);
        let inside = |m: &EdgeTypeMatrix| m.support().iter().all(|&(s, u)| dg.contains(s, u));
        let brute: u64 = t.m.iter().filter(|(m, _)| inside(m)).map(|(_, k)| k).sum();
        let brute_inj: u64 = t.injective_m.iter().filter(|(m, _)| inside(m)).map(|(_, k)| k).sum();
        ck.eq(|| at(&format!("embedded in mask {mask:#b}")), BigUint::from(brute), count_embedded(&dg, profile, rho)?);
        ck.eq(
            || at(&format!("injective, embedded in mask {mask:#b}")),
            BigUint::from(brute_inj),
            count_injective_embedded(&dg, profile, rho)?,
        );
    }

    // every consistent indegree vector
    let per_type: Vec<Vec<Vec<u32>>> = rows.iter().map(|&r| compositions(r, nv, 0)).collect();
    let mut classes: BTreeSet<DegreeClassCounts> = BTreeSet::new();
    let mut covered = 0u64;
    for raw in product(&per_type) {
        let gamma = IndegreeVector::from_raw(profile, raw);
        covered += t.gamma.get(gamma.raw()).copied().unwrap_or(0);
        ck.eq(
            || at(&format!("indegree vector {:?}", gamma.raw())),
            get(&t.gamma, &gamma.raw().to_vec()),
            count_by_indegree_vector(&gamma, rho)?,
        );
        classes.insert(gamma.degree_class_counts());
    }
    ck.eq(|| at("indegree sweep covers every tree"), t.total, covered);

    // degree classes, then every parent-type refinement of each
    let (mut covered, mut covered_complete) = (0u64, 0u64);
    for n in &classes {
        covered += t.classes.get(n).copied().unwrap_or(0);
        ck.eq(|| at(&format!("degree classes {n:?}")), get(&t.classes, n), count_by_degree_classes(n, rho)?);
        for complete in refinements(n, rho) {
            covered_complete += t.complete.get(&complete).copied().unwrap_or(0);
            let brute = get(&t.complete, &complete);
            let formula = count_by_complete_types(&complete, rho)?;
            ck.eq(|| at(&format!("complete types {complete:?}")), brute.clone(), formula);
            if rho == d as u32 {
                match count_complete_special(&complete) {
                    Ok(special) => ck.eq(|| at(&format!("factorized, complete types {complete:?}")), brute, special),
                    Err(Error::Precondition(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
    }
    ck.eq(|| at("degree-class sweep covers every tree"), t.total, covered);
    ck.eq(|| at("complete-type sweep covers every tree"), t.total, covered_complete);
    Ok(())
}

/// Every complete-type vector with degree classes `n` whose parent types
/// are consistent with the edge marginals: `Σ_c N_{t,u,c} = m_{t,u}` and
/// exactly one root, of type `ρ`.
/// `(t, u, c, k)`: `k` vertices of type `t` with parent type `u` and children `c`.
type Row = (u32, u32, Vec<u32>, u32);

fn refinements(n: &DegreeClassCounts, rho: u32) -> Vec<CompleteTypeCounts> {
    let d = n.d();
    let marg = n.edge_marginals();
    let mut per_type: Vec<Vec<Vec<Row>>> = Vec::with_capacity(d);
    for t in 1..=d as u32 {
        let classes: Vec<(Vec<u32>, u32)> =
            n.entries().filter(|e| e.0 == t).map(|(_, c, k)| (c.to_vec(), k)).collect();
        let mut target: Vec<u32> = (1..=d as u32).map(|u| marg.get(t, u)).collect();
        target.push(u32::from(t == rho));
        let mut out = Vec::new();
        split(&classes, 0, &mut target, &mut Vec::new(), &mut |chosen| {
            out.push(
                chosen
                    .iter()
                    .map(|&(ci, u, x)| (t, u, classes[ci].0.clone(), x))
                    .collect::<Vec<_>>(),
            )
        });
        per_type.push(out);
    }
    product(&per_type)
        .into_iter()
        .map(|entries| {
            let mut c = CompleteTypeCounts::new(d);
            for (t, u, cls, x) in entries {
                c.add(t, u, cls, x);
            }
            c
        })
        .collect()
}

type Split<'a> = dyn FnMut(&[(usize, u32, u32)]) + 'a;

/// Splits each class count over the parent types so that every parent type
/// `u` receives exactly `remaining[u - 1]` vertices.
fn split(
    classes: &[(Vec<u32>, u32)],
    ci: usize,
    remaining: &mut Vec<u32>,
    chosen: &mut Vec<(usize, u32, u32)>,
    f: &mut Split,
) {
    if ci == classes.len() {
        if remaining.iter().all(|&r| r == 0) {
            f(chosen);
        }
        return;
    }
    for parts in compositions(classes[ci].1, remaining.len(), 0) {
        if parts.iter().zip(remaining.iter()).any(|(p, r)| p > r) {
            continue;
        }
        let mark = chosen.len();
        for (u, &x) in parts.iter().enumerate() {
            remaining[u] -= x;
            if x > 0 {
                chosen.push((ci, u as u32 + 1, x));
            }
        }
        split(classes, ci + 1, remaining, chosen, f);
        for (u, &x) in parts.iter().enumerate() {
            remaining[u] += x;
        }
        chosen.truncate(mark);
    }
}
