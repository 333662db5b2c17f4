use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;

use crate::algebra::factorial;
use crate::cactus::{
    cactus_phi, cactus_psi, cactus_size, count_cacti_by_degree, count_cacti_total, enumerate_cacti, in_marked_class,
    Cactus, CactusDegreeVector,
};
use crate::model::{Profile, VertexId};
use crate::Result;

use super::{compositions, Checker, VerifyConfig};

/// `(d, largest size)` pairs swept.
const SCALES: [(usize, u32); 2] = [(2, 3), (3, 2)];

fn cactus_profiles(d: usize, n: u32) -> Vec<Profile> {
    compositions((d as u32 - 1) * n + 1, d, 1)
        .into_iter()
        .filter(|c| c.iter().all(|&k| k <= n))
        .map(|c| Profile::new(c).expect("positive"))
        .collect()
}

pub(crate) fn cacti(ck: &mut Checker, cfg: &VerifyConfig) -> Result<()> {
    for (d, max_n) in SCALES {
        if d > cfg.max_d {
            continue;
        }
        for n in 1..=max_n {
            for profile in cactus_profiles(d, n) {
                check_profile(ck, &profile, n, cfg)?;
            }
            // the fully starred class (1, n, …, n)
            let mut counts = vec![n; d];
            counts[0] = 1;
            let profile = Profile::new(counts)?;
            let star = CactusDegreeVector::star(&profile, n);
            let k = enumerate_cacti(&profile, &cfg.bounds)?.iter().filter(|c| c.degree_vector() == star).count();
            ck.eq(
                || format!("terminal class, d = {d}, n = {n}"),
                factorial(u64::from(n)).pow(d as u32 - 1),
                BigUint::from(k),
            );
        }
    }
    Ok(())
}

fn check_profile(ck: &mut Checker, profile: &Profile, n: u32, cfg: &VerifyConfig) -> Result<()> {
    let d = profile.d();
    let at = |what: &str| format!("profile {:?}: {what}", profile.counts());
    let all = enumerate_cacti(profile, &cfg.bounds)?;
    ck.eq(|| at("size"), Some(n), cactus_size(profile));
    ck.eq(|| at("total"), count_cacti_total(profile), BigUint::from(all.len()));
    let distinct: HashSet<&Cactus> = all.iter().collect();
    ck.eq(|| at("distinct"), all.len(), distinct.len());
    let mut tally: HashMap<CactusDegreeVector, u64> = HashMap::new();
    for c in &all {
        ck.holds(|| at("valid"), c.validate().is_ok() && c.size() == n as usize);
        ck.eq(|| at("vertex count"), (d - 1) * n as usize + 1, c.num_vertices());
        ck.holds(|| at("json round trip"), Cactus::from_json(&c.to_json()).as_ref() == Ok(c));
        *tally.entry(c.degree_vector()).or_insert(0) += 1;
    }

    // every positive degree vector with per-type sums n
    let per_type: Vec<Vec<Vec<u32>>> = profile.counts().iter().map(|&k| compositions(n, k as usize, 1)).collect();
    let mut vectors: Vec<Vec<u32>> = vec![Vec::new()];
    for opts in &per_type {
        vectors = vectors
            .iter()
            .flat_map(|p| opts.iter().map(move |o| [p.as_slice(), o.as_slice()].concat()))
            .collect();
    }
    let mut sum = BigUint::from(0u32);
    for degrees in vectors {
        let gamma = CactusDegreeVector::from_degrees(profile, &degrees)?;
        let formula = count_cacti_by_degree(&gamma);
        sum += &formula;
        let brute = BigUint::from(tally.get(&gamma).copied().unwrap_or(0));
        ck.eq(|| at(&format!("degrees {degrees:?}")), brute, formula);
    }
    ck.eq(|| at("sum over degree vectors"), count_cacti_total(profile), sum);

    // moving a gon between two vertices of one type
    for s in 1..=d as u32 {
        for j in 1..=profile.count(s) {
            for k in (1..=profile.count(s)).filter(|&k| k != j) {
                let (u, w) = (VertexId::new(s, j), VertexId::new(s, k));
                let mut images = HashSet::new();
                for c in all.iter().filter(|c| c.degree_vector().get(u) > 1) {
                    let input = || at(&format!("gon move {u} -> {w} on {:?}", c.to_json()));
                    let img = cactus_phi(c, s, j, k)?;
                    let (g, h) = (c.degree_vector(), img.degree_vector());
                    let mut expected = g.clone();
                    expected.set(u, g.get(u) - 1);
                    expected.set(w, g.get(w) + 1);
                    ck.holds(input, img.validate().is_ok() && h == expected);
                    ck.holds(input, &cactus_phi(&img, s, k, j)? == c);
                    images.insert(img);
                }
                let targets = all.iter().filter(|c| c.degree_vector().get(w) > 1).count();
                ck.eq(|| at(&format!("gon move {u} -> {w} is onto")), targets, images.len());
            }
        }
    }

    // star classes
    let star = CactusDegreeVector::star(profile, n);
    let class: Vec<&Cactus> = all.iter().filter(|c| c.degree_vector() == star).collect();
    for r in 1..=d as u32 {
        for s in (1..=d as u32).filter(|&s| s != r) {
            if profile.count(r) < 2 || profile.count(s) >= n {
                continue;
            }
            let input = |what: &str| at(&format!("star move {s} -> {r}: {what}"));
            let marked: Vec<&&Cactus> = class.iter().filter(|c| in_marked_class(c, r, s)).collect();
            ck.eq(|| input("marked share"), class.len(), marked.len() * (profile.count(r) as usize - 1));
            let mut images = HashSet::new();
            for c in marked.iter().copied().copied() {
                let img = cactus_psi(c, r, s)?;
                ck.holds(|| input("image valid and marked"), img.validate().is_ok() && in_marked_class(&img, s, r));
                ck.holds(|| input("round trip"), &cactus_psi(&img, s, r)? == c);
                images.insert(img);
            }
            let mut shifted = profile.counts().to_vec();
            shifted[r as usize - 1] -= 1;
            shifted[s as usize - 1] += 1;
            let target = Profile::new(shifted)?;
            let target_star = CactusDegreeVector::star(&target, n);
            let other = enumerate_cacti(&target, &cfg.bounds)?
                .into_iter()
                .filter(|c| c.degree_vector() == target_star && in_marked_class(c, s, r))
                .count();
            ck.eq(|| input("onto the marked class"), other, images.len());
            ck.eq(|| input("injective"), marked.len(), images.len());
        }
    }
    Ok(())
}
