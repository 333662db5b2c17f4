use crate::model::VertexId;
use crate::{Error, Result};

use super::counts::cactus_size;
use super::map::CactusMap;
use super::model::{Cactus, CactusDegreeVector};

fn check_type(c: &Cactus, t: u32) -> Result<()> {
    if t < 1 || t as usize > c.d() {
        return Err(Error::invalid(format!("type {t} is outside [1, {}]", c.d())));
    }
    Ok(())
}

/// Moves one gon from `(s, j)` to `(s, k)`.
///
/// With `g_j`, `g_k` the gons of the chain between the two vertices that
/// touch `(s, j)` and `(s, k)`, the gon clockwise after `g_j` around `(s, j)`
/// is unglued, together with everything hanging from it, and glued at
/// `(s, k)` clockwise right after `g_k`. `γ_{s,j}` drops by one and
/// `γ_{s,k}` rises by one; `cactus_phi(·, s, k, j)` undoes it.
pub fn cactus_phi(c: &Cactus, s: u32, j: u32, k: u32) -> Result<Cactus> {
    check_type(c, s)?;
    let n_s = c.profile().count(s);
    for label in [j, k] {
        if label < 1 || label > n_s {
            return Err(Error::invalid(format!("label {label} is outside [1, {n_s}]")));
        }
    }
    if j == k {
        return Err(Error::precondition("source and target vertex coincide"));
    }
    let mut map = CactusMap::from_cactus(c)?;
    let (u, w) = (VertexId::new(s, j), VertexId::new(s, k));
    if map.degree(u) < 2 {
        return Err(Error::precondition(format!("vertex {u} has degree 1; no gon can leave it")));
    }
    let chain = map.chain(u, w);
    let (g_j, g_k) = (chain[0], chain[chain.len() - 1]);
    let moving = map.successor(u, g_j);
    map.regrip(moving, s as usize - 1, w, g_k);
    map.to_cactus()
}

/// The gon that `Ψ_{r,s}` moves (clockwise after the chain gon at `(s, 1)`)
/// and the chain gon at `(r, 1)`, provided the degree vector is `γ*(n)`,
/// `n_r > 1` and `n_s < n`.
fn psi_setup(map: &CactusMap, c: &Cactus, r: u32, s: u32) -> Result<(usize, usize)> {
    check_type(c, r)?;
    check_type(c, s)?;
    if r == s {
        return Err(Error::precondition("the two types must differ"));
    }
    let n = cactus_size(c.profile()).expect("a valid cactus has a size");
    let (n_r, n_s) = (c.profile().count(r), c.profile().count(s));
    if n_r < 2 {
        return Err(Error::precondition(format!("only one vertex of type {r}")));
    }
    if n_s >= n {
        return Err(Error::precondition(format!("type {s} already has {n_s} = n vertices")));
    }
    if c.degree_vector() != CactusDegreeVector::star(c.profile(), n) {
        return Err(Error::precondition("degree vector is not the star vector γ*(n)"));
    }
    let (a, b) = (VertexId::new(r, 1), VertexId::new(s, 1));
    let chain = map.chain(a, b);
    let (g_r, g_s) = (chain[0], chain[chain.len() - 1]);
    Ok((map.successor(b, g_s), g_r))
}

/// Whether `c` lies in the class where `Ψ_{r,s}` applies: degree vector
/// `γ*(n)`, and the type-`r` vertex of the gon clockwise after the chain gon
/// at `(s, 1)` carries the largest label `n_r`.
pub fn in_marked_class(c: &Cactus, r: u32, s: u32) -> bool {
    let Ok(map) = CactusMap::from_cactus(c) else {
        return false;
    };
    match psi_setup(&map, c, r, s) {
        Ok((moving, _)) => map.gons[moving][r as usize - 1].label == c.profile().count(r),
        Err(_) => false,
    }
}

/// Moves one gon from `(s, 1)` to `(r, 1)` in a star-degree cactus.
///
/// The moved gon's type-`r` vertex `v` (label `n_r`, degree 1) merges into
/// `(r, 1)`, and its type-`s` corner becomes a new vertex labeled `n_s + 1`.
/// The profile becomes `n'` with `n'_r = n_r - 1`, `n'_s = n_s + 1`, the
/// degree vector stays the star vector, and `cactus_psi(·, s, r)` undoes it.
pub fn cactus_psi(c: &Cactus, r: u32, s: u32) -> Result<Cactus> {
    let mut map = CactusMap::from_cactus(c)?;
    let (moving, g_r) = psi_setup(&map, c, r, s)?;
    let (rk, sk) = (r as usize - 1, s as usize - 1);
    let v = map.gons[moving][rk];
    if v.label != map.counts[rk] {
        return Err(Error::precondition(format!(
            "vertex {v} on the moving gon must carry the label {}",
            map.counts[rk]
        )));
    }
    // v has degree 1, so regripping its corner deletes it
    map.regrip(moving, rk, VertexId::new(r, 1), g_r);
    let b = map.gons[moving][sk];
    let pos = map.position(b, moving);
    map.rot.get_mut(&b).expect("vertex").remove(pos);
    map.counts[rk] -= 1;
    map.counts[sk] += 1;
    let fresh = VertexId::new(s, map.counts[sk]);
    map.gons[moving][sk] = fresh;
    map.rot.insert(fresh, vec![moving]);
    map.to_cactus()
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use num_bigint::BigUint;

    use super::*;
    use crate::cactus::{count_cacti_by_degree, enumerate_cacti};
    use crate::model::Profile;
    use crate::Bounds;

    fn p(c: &[u32]) -> Profile {
        Profile::new(c.to_vec()).unwrap()
    }

    fn profiles(d: usize, n: u32) -> Vec<Profile> {
        let total = (d as u32 - 1) * n + 1;
        let mut out = Vec::new();
        let mut c = vec![1u32; d];
        loop {
            if c.iter().sum::<u32>() == total {
                out.push(p(&c));
            }
            let Some(k) = c.iter().position(|&x| x < n) else { break };
            c[k] += 1;
            for x in &mut c[..k] {
                *x = 1;
            }
        }
        out
    }

    #[test]
    fn phi_moves_one_gon() {
        // d = 2 gons are edges; size 3 with two vertices per type is a path
        let b = Bounds::default();
        let all = enumerate_cacti(&p(&[2, 2]), &b).unwrap();
        let c = all.iter().find(|c| c.degree_vector().get(VertexId::new(1, 1)) == 2).unwrap();
        let image = cactus_phi(c, 1, 1, 2).unwrap();
        assert_eq!(image.degree_vector().get(VertexId::new(1, 1)), 1);
        assert_eq!(image.degree_vector().get(VertexId::new(1, 2)), 2);
        assert_eq!(&cactus_phi(&image, 1, 2, 1).unwrap(), c);
        let single = &enumerate_cacti(&p(&[1, 1]), &b).unwrap()[0];
        assert!(matches!(cactus_phi(single, 1, 1, 1), Err(Error::Precondition(_))));
        let leaf = all.iter().find(|c| c.degree_vector().get(VertexId::new(2, 1)) == 1).unwrap();
        assert!(matches!(cactus_phi(leaf, 2, 1, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn phi_round_trips_and_preserves_class_sizes() {
        let b = Bounds::default();
        for (d, max_n) in [(2usize, 3u32), (3, 2)] {
            for n in 1..=max_n {
                for prof in profiles(d, n) {
                    let all = enumerate_cacti(&prof, &b).unwrap();
                    for s in 1..=d as u32 {
                        for j in 1..=prof.count(s) {
                            for k in (1..=prof.count(s)).filter(|&k| k != j) {
                                let (u, w) = (VertexId::new(s, j), VertexId::new(s, k));
                                let mut images = HashSet::new();
                                for c in all.iter().filter(|c| c.degree_vector().get(u) > 1) {
                                    let img = cactus_phi(c, s, j, k).unwrap();
                                    img.validate().unwrap();
                                    let (g, h) = (c.degree_vector(), img.degree_vector());
                                    assert_eq!(h.get(u) + 1, g.get(u));
                                    assert_eq!(h.get(w), g.get(w) + 1);
                                    assert_eq!(&cactus_phi(&img, s, k, j).unwrap(), c);
                                    images.insert(img);
                                }
                                let expected = all.iter().filter(|c| c.degree_vector().get(w) > 1).count();
                                assert_eq!(images.len(), expected);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn class_sizes_match_formula() {
        let b = Bounds::default();
        for prof in profiles(2, 3).into_iter().chain(profiles(3, 2)) {
            let mut tally = std::collections::HashMap::new();
            for c in enumerate_cacti(&prof, &b).unwrap() {
                *tally.entry(c.degree_vector()).or_insert(0u64) += 1;
            }
            for (g, k) in tally {
                assert_eq!(count_cacti_by_degree(&g), BigUint::from(k));
            }
        }
    }

    #[test]
    fn psi_round_trips_on_marked_classes() {
        let b = Bounds::default();
        for (d, n) in [(2usize, 3u32), (3, 2), (2, 4)] {
            for prof in profiles(d, n) {
                let all = enumerate_cacti(&prof, &b).unwrap();
                let star = CactusDegreeVector::star(&prof, n);
                let class: Vec<_> = all.iter().filter(|c| c.degree_vector() == star).collect();
                for r in 1..=d as u32 {
                    for s in (1..=d as u32).filter(|&s| s != r) {
                        if prof.count(r) < 2 || prof.count(s) >= n {
                            continue;
                        }
                        let marked: Vec<_> = class.iter().filter(|c| in_marked_class(c, r, s)).collect();
                        assert_eq!(marked.len() * (prof.count(r) as usize - 1), class.len());
                        let mut images = HashSet::new();
                        for c in &marked {
                            let img = cactus_psi(c, r, s).unwrap();
                            img.validate().unwrap();
                            assert!(in_marked_class(&img, s, r));
                            assert_eq!(&cactus_psi(&img, s, r).unwrap(), **c);
                            images.insert(img);
                        }
                        // the image is the whole marked class on the other side
                        let mut shifted = prof.counts().to_vec();
                        shifted[r as usize - 1] -= 1;
                        shifted[s as usize - 1] += 1;
                        let target = p(&shifted);
                        let target_star = CactusDegreeVector::star(&target, n);
                        let other = enumerate_cacti(&target, &b)
                            .unwrap()
                            .into_iter()
                            .filter(|c| c.degree_vector() == target_star && in_marked_class(c, s, r))
                            .count();
                        assert_eq!(images.len(), other);
                        assert_eq!(images.len(), marked.len());
                    }
                }
            }
        }
    }

    #[test]
    fn psi_rejects_unmarked() {
        let b = Bounds::default();
        let prof = p(&[3, 1]);
        let star = CactusDegreeVector::star(&prof, 3);
        let unmarked = enumerate_cacti(&prof, &b)
            .unwrap()
            .into_iter()
            .find(|c| c.degree_vector() == star && !in_marked_class(c, 1, 2))
            .unwrap();
        assert!(matches!(cactus_psi(&unmarked, 1, 2), Err(Error::Precondition(_))));
        assert!(matches!(cactus_psi(&unmarked, 2, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn terminal_class() {
        let b = Bounds::default();
        for (prof, n, expected) in [(&[1u32, 3][..], 3u32, 6u64), (&[1, 2, 2], 2, 4), (&[1, 4], 4, 24)] {
            let prof = p(prof);
            let star = CactusDegreeVector::star(&prof, n);
            let k = enumerate_cacti(&prof, &b).unwrap().iter().filter(|c| c.degree_vector() == star).count();
            assert_eq!(k as u64, expected);
        }
    }
}
