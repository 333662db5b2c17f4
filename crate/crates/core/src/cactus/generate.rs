use crate::model::Profile;
use crate::{Bounds, Error, Result};

use super::counts::cactus_size;
use super::model::{Cactus, Corner, GonNode};

/// An unlabeled gon: child sequences per corner. The corner it hangs from
/// has an empty sequence.
#[derive(Clone)]
struct Shape {
    corners: Vec<Vec<Shape>>,
}

/// Gon shapes with `size` gons in total, hanging from corner `attach`.
fn gons(d: usize, size: usize, attach: Option<usize>) -> Vec<Shape> {
    let free: Vec<usize> = (0..d).filter(|&k| Some(k) != attach).collect();
    let mut out = Vec::new();
    let mut split = vec![0; free.len()];
    distribute(size - 1, 0, &mut split, &mut |split| {
        let mut partial: Vec<Vec<Vec<Shape>>> = vec![vec![Vec::new(); d]];
        for (slot, &k) in free.iter().enumerate() {
            let options = sequences(d, split[slot], k);
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    options.iter().map(move |seq| {
                        let mut q = p.clone();
                        q[k] = seq.clone();
                        q
                    })
                })
                .collect();
        }
        out.extend(partial.into_iter().map(|corners| Shape { corners }));
    });
    out
}

/// Ordered sequences of gons hanging at a type-`k` corner, `size` gons in all.
fn sequences(d: usize, size: usize, k: usize) -> Vec<Vec<Shape>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=size {
        let heads = gons(d, first, Some(k));
        let tails = sequences(d, size - first, k);
        for h in &heads {
            for t in &tails {
                let mut seq = Vec::with_capacity(t.len() + 1);
                seq.push(h.clone());
                seq.extend(t.iter().cloned());
                out.push(seq);
            }
        }
    }
    out
}

/// Every split of `total` into `split.len()` ordered non-negative parts.
fn distribute(total: usize, slot: usize, split: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    if slot + 1 >= split.len() {
        if let Some(last) = split.last_mut() {
            *last = total;
            f(split);
        } else if total == 0 {
            f(split);
        }
        return;
    }
    for k in 0..=total {
        split[slot] = k;
        distribute(total - k, slot + 1, split, f);
    }
}

/// Number of non-root gons hanging from a corner of each type.
fn hang_counts(shape: &Shape, acc: &mut [u32]) {
    for (k, seq) in shape.corners.iter().enumerate() {
        for child in seq {
            acc[k] += 1;
            hang_counts(child, acc);
        }
    }
}

/// Turns a shape into a gon tree whose labels are placeholders `1, 2, …`
/// per type in traversal order.
fn placeholder(shape: &Shape, attach: Option<(usize, u32)>, next: &mut [u32]) -> GonNode {
    let corners = shape
        .corners
        .iter()
        .enumerate()
        .map(|(k, seq)| match attach {
            Some((ak, label)) if ak == k => Corner { label, children: Vec::new() },
            _ => {
                next[k] += 1;
                let label = next[k];
                let children = seq.iter().map(|c| placeholder(c, Some((k, label)), next)).collect();
                Corner { label, children }
            }
        })
        .collect();
    GonNode { corners }
}

fn relabel(node: &GonNode, perms: &[Vec<u32>]) -> GonNode {
    GonNode {
        corners: node
            .corners
            .iter()
            .enumerate()
            .map(|(k, c)| Corner {
                label: perms[k][c.label as usize - 1],
                children: c.children.iter().map(|g| relabel(g, perms)).collect(),
            })
            .collect(),
    }
}

/// Lexicographic successor; false after the last permutation.
fn next_permutation(p: &mut [u32]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("a larger element exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Every rooted vertex-labeled planar `d`-cactus with profile `n`, where
/// `d` is the number of types.
///
/// Shapes are generated first (trees of unlabeled gons), then every type's
/// labels are assigned in all `n_t!` ways. Profiles with some `n_t > n`
/// yield nothing.
pub fn enumerate_cacti(profile: &Profile, bounds: &Bounds) -> Result<Vec<Cactus>> {
    let d = profile.d();
    if d < 2 {
        return Err(Error::invalid("cacti need gons with at least two corners"));
    }
    Error::check_bound("cactus gon degree", d, bounds.max_cactus_d)?;
    let total = profile.num_vertices() - 1;
    if !total.is_multiple_of(d - 1) {
        return Err(Error::precondition(format!(
            "{} vertices do not make a whole number of {d}-gons",
            profile.num_vertices()
        )));
    }
    let n = total / (d - 1);
    Error::check_bound("cactus size", n, bounds.max_cactus_size)?;
    if cactus_size(profile).is_none() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for shape in gons(d, n, None) {
        let mut hangs = vec![0u32; d];
        hang_counts(&shape, &mut hangs);
        // vertices of type t: one in the root gon plus one per gon not hanging at a type-t corner
        let fits = (0..d).all(|k| 1 + (n as u32 - 1) - hangs[k] == profile.counts()[k]);
        if !fits {
            continue;
        }
        let base = placeholder(&shape, None, &mut vec![0; d]);
        let mut perms: Vec<Vec<u32>> = profile.counts().iter().map(|&k| (1..=k).collect()).collect();
        'labels: loop {
            out.push(Cactus::new_unchecked(profile.clone(), relabel(&base, &perms)));
            for p in perms.iter_mut() {
                if next_permutation(p) {
                    continue 'labels;
                }
                p.sort_unstable();
            }
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::cactus::count_cacti_total;

    fn p(c: &[u32]) -> Profile {
        Profile::new(c.to_vec()).unwrap()
    }

    #[test]
    fn small_counts() {
        let b = Bounds::default();
        assert_eq!(enumerate_cacti(&p(&[1, 1]), &b).unwrap().len(), 1);
        assert_eq!(enumerate_cacti(&p(&[1, 1, 1]), &b).unwrap().len(), 1);
        assert_eq!(enumerate_cacti(&p(&[2, 1]), &b).unwrap().len(), 2);
        assert_eq!(enumerate_cacti(&p(&[2, 2]), &b).unwrap().len(), 12);
    }

    #[test]
    fn valid_distinct_and_counted() {
        let b = Bounds::default();
        for c in [&[1u32, 3][..], &[3, 2], &[2, 2, 1], &[1, 2, 2], &[2, 3, 2], &[2, 2, 2, 1]] {
            let all = enumerate_cacti(&p(c), &b).unwrap();
            for x in &all {
                x.validate().unwrap();
            }
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert_eq!(all.len() as u64, u64::try_from(count_cacti_total(&p(c))).unwrap(), "{c:?}");
        }
    }

    #[test]
    fn errors() {
        let b = Bounds::default();
        assert!(matches!(enumerate_cacti(&p(&[1, 1, 2]), &b), Err(Error::Precondition(_))));
        assert!(matches!(enumerate_cacti(&p(&[3, 3]), &b), Err(Error::SizeBound { .. })));
        assert!(enumerate_cacti(&p(&[3, 1, 1]), &b).unwrap().is_empty());
        assert!(matches!(enumerate_cacti(&p(&[1]), &b), Err(Error::Invalid(_))));
    }
}
