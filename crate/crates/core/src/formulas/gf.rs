use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{determinant, Monomial, Polynomial, Rational, Var};
use crate::enumerate::{for_each_skeleton, for_each_tree};
use crate::model::Profile;
use crate::{Bounds, Error, Result};

use super::check_root_type;

/// `Σ_i x_{s,t,i}`.
fn edge_sum(profile: &Profile, s: u32, t: u32) -> Polynomial {
    Polynomial::sum_of_vars((1..=profile.count(t)).map(|i| Var::Edge(s, t, i)))
}

/// `Σ_{t,i} x_{s,t,i}`.
fn out_sum(profile: &Profile, s: u32) -> Polynomial {
    Polynomial::sum_of_vars(profile.vertices().map(|v| Var::Edge(s, v.ty, v.label)))
}

/// Upper bound on the number of monomials of degree `k` in `n` variables.
fn monomials_bound(n: u128, k: u128) -> u128 {
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc.saturating_mul(n + j) / (j + 1);
    }
    acc
}

fn guard_terms(estimate: u128, bounds: &Bounds) -> Result<()> {
    if estimate > bounds.max_gf_terms as u128 {
        return Err(Error::SizeBound {
            what: "generating function term count",
            value: u64::try_from(estimate).unwrap_or(u64::MAX),
            limit: bounds.max_gf_terms as u64,
        });
    }
    Ok(())
}

fn skeleton_parents(d: usize, root: u32, bounds: &Bounds) -> Result<Vec<Vec<Option<usize>>>> {
    let mut out = Vec::new();
    for_each_skeleton(d, root, bounds, |p| out.push(p.to_vec()))?;
    Ok(out)
}

/// `Δ = Σ_{A ∈ Cay_ρ(d)} Π_{(s,t) ∈ A} Σ_i x_{s,t,i}`.
pub fn delta_polynomial(profile: &Profile, rho: u32, bounds: &Bounds) -> Result<Polynomial> {
    let d = profile.d();
    check_root_type(d, rho)?;
    let sums: Vec<Vec<Polynomial>> = (1..=d as u32)
        .map(|s| (1..=d as u32).map(|t| edge_sum(profile, s, t)).collect())
        .collect();
    let mut delta = Polynomial::zero();
    for parent in skeleton_parents(d, rho, bounds)? {
        let mut term = Polynomial::one();
        for (s, p) in parent.iter().enumerate() {
            if let Some(t) = *p {
                term = &term * &sums[s][t];
            }
        }
        delta = &delta + &term;
    }
    Ok(delta)
}

/// The generating function of `T_ρ(n)` by indegree vector:
/// `Π_s (Σ_{t,i} x_{s,t,i})^{n_s - 1} · Δ`.
pub fn gf_multitype(profile: &Profile, rho: u32, bounds: &Bounds) -> Result<Polynomial> {
    let d = profile.d();
    check_root_type(d, rho)?;
    let delta = delta_polynomial(profile, rho, bounds)?;
    let nv = profile.num_vertices() as u128;
    let mut estimate = delta.num_terms() as u128;
    for s in 1..=d as u32 {
        estimate = estimate.saturating_mul(monomials_bound(nv, u128::from(profile.count(s) - 1)));
    }
    guard_terms(estimate, bounds)?;
    let mut acc = Polynomial::one();
    for s in 1..=d as u32 {
        acc = &acc * &out_sum(profile, s).pow(profile.count(s) - 1);
    }
    Ok(&acc * &delta)
}

/// The generating function of rooted forests on `V_n`, with `z_s` marking
/// roots of type `s`: `Π_s (z_s + Σ_{t,i} x_{s,t,i})^{n_s - 1} · Γ`.
pub fn gf_forests(profile: &Profile, bounds: &Bounds) -> Result<Polynomial> {
    let d = profile.d();
    // Γ: skeletons on [d + 1] rooted at d + 1; an edge into d + 1 marks a root.
    let mut gamma = Polynomial::zero();
    for parent in skeleton_parents(d + 1, d as u32 + 1, bounds)? {
        let mut term = Polynomial::one();
        for (s, p) in parent.iter().enumerate().take(d) {
            let s = s as u32 + 1;
            let t = p.expect("only the virtual root lacks a parent") as u32 + 1;
            let factor = if t as usize == d + 1 {
                Polynomial::var(Var::Root(s))
            } else {
                edge_sum(profile, s, t)
            };
            term = &term * &factor;
        }
        gamma = &gamma + &term;
    }
    let nv = profile.num_vertices() as u128 + 1;
    let mut estimate = gamma.num_terms() as u128;
    for s in 1..=d as u32 {
        estimate = estimate.saturating_mul(monomials_bound(nv, u128::from(profile.count(s) - 1)));
    }
    guard_terms(estimate, bounds)?;
    let mut acc = Polynomial::one();
    for s in 1..=d as u32 {
        let base = &Polynomial::var(Var::Root(s)) + &out_sum(profile, s);
        acc = &acc * &base.pow(profile.count(s) - 1);
    }
    Ok(&acc * &gamma)
}

fn substituted_weights<F: Fn(Var) -> Rational>(profile: &Profile, subst: &F) -> Vec<Vec<Rational>> {
    let d = profile.d() as u32;
    (1..=d)
        .map(|s| {
            (1..=d)
                .map(|t| {
                    (1..=profile.count(t))
                        .map(|i| subst(Var::Edge(s, t, i)))
                        .fold(Rational::zero(), |a, b| a + b)
                })
                .collect()
        })
        .collect()
}

/// `Δ` under a numeric substitution, as the `ρ`-th principal minor of the
/// Laplacian `ℓ_{s,t} = -w_{s,t}`, `ℓ_{s,s} = Σ_{t≠s} w_{s,t}`, where
/// `w_{s,t} = Σ_i x_{s,t,i}`.
pub fn delta_via_determinant<F>(profile: &Profile, rho: u32, subst: F, bounds: &Bounds) -> Result<Rational>
where
    F: Fn(Var) -> Rational,
{
    let d = profile.d();
    check_root_type(d, rho)?;
    let w = substituted_weights(profile, &subst);
    let keep: Vec<usize> = (0..d).filter(|&s| s + 1 != rho as usize).collect();
    let matrix: Vec<Vec<Polynomial>> = keep
        .iter()
        .map(|&s| {
            keep.iter()
                .map(|&t| {
                    let entry = if s == t {
                        (0..d).filter(|&u| u != s).fold(Rational::zero(), |a, u| a + &w[s][u])
                    } else {
                        -w[s][t].clone()
                    };
                    Polynomial::constant(entry)
                })
                .collect()
        })
        .collect();
    Ok(determinant(&matrix, bounds.max_det_dim)?.constant_term())
}

/// `Δ` under a numeric substitution, summed explicitly over `Cay_ρ(d)`.
pub fn delta_skeleton_value<F>(profile: &Profile, rho: u32, subst: F, bounds: &Bounds) -> Result<Rational>
where
    F: Fn(Var) -> Rational,
{
    let d = profile.d();
    check_root_type(d, rho)?;
    let w = substituted_weights(profile, &subst);
    let mut total = Rational::zero();
    for_each_skeleton(d, rho, bounds, |parent| {
        let mut prod = Rational::one();
        for (s, p) in parent.iter().enumerate() {
            if let Some(t) = *p {
                prod *= &w[s][t];
            }
        }
        total += prod;
    })?;
    Ok(total)
}

/// `Σ_{T ∈ T_ρ(n)} Π x_{s,t,i}^{γ_{s,t,i}(T)}` by exhaustive generation.
pub fn tree_monomial_sum(profile: &Profile, rho: u32, bounds: &Bounds) -> Result<Polynomial> {
    let nv = profile.num_vertices();
    let slots = profile.d() * nv;
    let types = profile.type_table();
    // every γ entry is below nv, so it fits in `bits` bits
    let bits = (usize::BITS - nv.leading_zeros()) as usize;
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
    if slots * bits <= 128 {
        let mut packed: HashMap<u128, u64> = HashMap::new();
        for_each_tree(profile, Some(rho), bounds, |_, parent| {
            let mut key = 0u128;
            for (c, p) in parent.iter().enumerate() {
                if let Some(p) = *p {
                    key += 1 << ((types[c] * nv + p) * bits);
                }
            }
            *packed.entry(key).or_insert(0) += 1;
        })?;
        let mask = (1u128 << bits) - 1;
        for (key, k) in packed {
            let g = (0..slots).map(|slot| (key >> (slot * bits) & mask) as u32).collect();
            tally.insert(g, k);
        }
    } else {
        let mut gamma = vec![0u32; slots];
        for_each_tree(profile, Some(rho), bounds, |_, parent| {
            gamma.fill(0);
            for (c, p) in parent.iter().enumerate() {
                if let Some(p) = *p {
                    gamma[types[c] * nv + p] += 1;
                }
            }
            match tally.get_mut(gamma.as_slice()) {
                Some(k) => *k += 1,
                None => {
                    tally.insert(gamma.clone(), 1);
                }
            }
        })?;
    }
    let mut out = Polynomial::zero();
    for (g, k) in tally {
        let m = Monomial::from_powers(g.iter().enumerate().map(|(slot, &e)| {
            let v = profile.vertex(slot % nv);
            (Var::Edge((slot / nv) as u32 + 1, v.ty, v.label), e)
        }));
        out.add_term(m, Rational::from_integer(k.into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u32]) -> Profile {
        Profile::new(c.to_vec()).unwrap()
    }

    fn q(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    #[test]
    fn two_vertex_unitype() {
        let b = Bounds::default();
        let g = gf_multitype(&p(&[2]), 1, &b).unwrap();
        let expected = Polynomial::sum_of_vars([Var::Edge(1, 1, 1), Var::Edge(1, 1, 2)]);
        assert_eq!(g, expected);
    }

    #[test]
    fn unitype_total_is_cayley() {
        let b = Bounds::default();
        for n in 1..=5u32 {
            let g = gf_multitype(&p(&[n]), 1, &b).unwrap();
            assert_eq!(g.evaluate(|_| q(1)), q(i64::from(n).pow(n - 1)));
        }
    }

    #[test]
    fn bipartite_specialisation() {
        let b = Bounds::default();
        let g = gf_multitype(&p(&[2, 2]), 1, &b).unwrap();
        let bip = g.evaluate(|v| match v {
            Var::Edge(s, t, _) if s == t => q(0),
            _ => q(1),
        });
        assert_eq!(bip, q(8));
    }

    #[test]
    fn matches_enumeration() {
        let b = Bounds::default();
        for (c, rho) in [(&[2u32, 2][..], 2), (&[1, 2, 1][..], 3), (&[4][..], 1)] {
            assert_eq!(gf_multitype(&p(c), rho, &b).unwrap(), tree_monomial_sum(&p(c), rho, &b).unwrap());
        }
    }

    #[test]
    fn delta_examples() {
        let b = Bounds::default();
        let d = delta_polynomial(&p(&[1, 3]), 1, &b).unwrap();
        let expected = Polynomial::sum_of_vars([Var::Edge(2, 1, 1)]);
        assert_eq!(d, expected);
        let zero = delta_via_determinant(&p(&[2, 1, 2]), 2, |_| q(0), &b).unwrap();
        assert_eq!(zero, q(0));
        let subst = |v: Var| match v {
            Var::Edge(s, t, i) => q(i64::from(s * 7 + t * 3 + i) % 5 - 2),
            _ => q(0),
        };
        for rho in 1..=3 {
            let prof = p(&[2, 1, 3]);
            assert_eq!(
                delta_via_determinant(&prof, rho, subst, &b).unwrap(),
                delta_skeleton_value(&prof, rho, subst, &b).unwrap()
            );
        }
    }

    #[test]
    fn forests() {
        let b = Bounds::default();
        assert_eq!(gf_forests(&p(&[1]), &b).unwrap(), Polynomial::var(Var::Root(1)));
        let g = gf_forests(&p(&[2]), &b).unwrap();
        let z = Polynomial::var(Var::Root(1));
        let expected = &z * &(&z + &Polynomial::sum_of_vars([Var::Edge(1, 1, 1), Var::Edge(1, 1, 2)]));
        assert_eq!(g, expected);
        assert_eq!(gf_forests(&p(&[3]), &b).unwrap().evaluate(|_| q(1)), q(16));
    }

    #[test]
    fn term_guard() {
        let b = Bounds {
            max_gf_terms: 10,
            ..Bounds::default()
        };
        assert!(matches!(gf_multitype(&p(&[5]), 1, &b), Err(Error::SizeBound { .. })));
    }
}
