use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::algebra::factorial;
use crate::model::CompleteTypeCounts;
use crate::{Error, Result};

use super::{check_root_type, exact_div};

/// The aggregates `n_t`, `m_{t,u}` and `m_{s,t,u}` of a complete-type vector.
struct Aggregates {
    d: usize,
    n: Vec<u64>,
    // m_{t,u}, index (t-1)(d+1) + (u-1)
    mtu: Vec<u64>,
    // m_{s,t,u}, index ((s-1)d + (t-1))(d+1) + (u-1)
    mstu: Vec<u64>,
}

impl Aggregates {
    fn new(counts: &CompleteTypeCounts) -> Result<Self> {
        counts.validate()?;
        let d = counts.d();
        let mut agg = Aggregates {
            d,
            n: vec![0; d],
            mtu: vec![0; d * (d + 1)],
            mstu: vec![0; d * d * (d + 1)],
        };
        for (t, u, c, k) in counts.entries() {
            let (t, u, k) = (t as usize - 1, u as usize - 1, u64::from(k));
            agg.n[t] += k;
            agg.mtu[t * (d + 1) + u] += k;
            for (s, &cs) in c.iter().enumerate() {
                agg.mstu[(s * d + t) * (d + 1) + u] += u64::from(cs) * k;
            }
        }
        if let Some(t) = agg.n.iter().position(|&k| k == 0) {
            return Err(Error::invalid(format!("no vertex of type {} in the complete types", t + 1)));
        }
        Ok(agg)
    }

    /// `m_{t,u}`, 1-based, `u ∈ [d + 1]`.
    fn m(&self, t: u32, u: u32) -> u64 {
        self.mtu[(t as usize - 1) * (self.d + 1) + u as usize - 1]
    }

    /// `m_{s,t,u}`, 1-based.
    fn m3(&self, s: u32, t: u32, u: u32) -> u64 {
        self.mstu[((s as usize - 1) * self.d + t as usize - 1) * (self.d + 1) + u as usize - 1]
    }

    /// `m_{s,d+1} = δ_{s,ρ}` and `m_{s,t} = Σ_u m_{s,t,u}`.
    fn admissible(&self, rho: u32) -> bool {
        let d = self.d as u32;
        (1..=d).all(|s| {
            self.m(s, d + 1) == u64::from(s == rho)
                && (1..=d).all(|t| self.m(s, t) == (1..=d + 1).map(|u| self.m3(s, t, u)).sum::<u64>())
        })
    }

    /// Numerator and denominator of the factorial prefactor.
    fn prefactor(&self, counts: &CompleteTypeCounts) -> (BigUint, BigUint) {
        let d = self.d as u32;
        let mut num = BigUint::one();
        for &nt in &self.n {
            num *= factorial(nt);
        }
        for s in 1..=d {
            for t in 1..=d {
                let k = self.m(s, t);
                if k > 0 {
                    num *= factorial(k - 1);
                }
            }
        }
        let mut den = BigUint::one();
        for (_, u, c, k) in counts.entries() {
            if u <= d {
                den *= factorial(u64::from(k));
            }
            for &cs in c {
                den *= factorial(u64::from(cs)).pow(k);
            }
        }
        (num, den)
    }

    /// Sum over spanning arborescences of `G(N)` oriented toward `(ρ, d+1)`
    /// of `Π m_{s,t,u}` over the arcs `(s,t) → (t,u)`.
    fn arborescence_sum(&self, rho: u32) -> BigUint {
        let d = self.d as u32;
        let mut vertices: Vec<(u32, u32)> = Vec::new();
        for t in 1..=d {
            for u in 1..=d + 1 {
                if self.m(t, u) > 0 && (t, u) != (rho, d + 1) {
                    vertices.push((t, u));
                }
            }
        }
        let root = vertices.len();
        let index = |v: (u32, u32)| -> Option<usize> {
            if v == (rho, d + 1) {
                Some(root)
            } else {
                vertices.iter().position(|&w| w == v)
            }
        };
        // options[k]: (target, weight) for each arc leaving vertices[k]
        let options: Vec<Vec<(usize, u64)>> = vertices
            .iter()
            .map(|&(s, t)| {
                (1..=d + 1)
                    .filter_map(|u| {
                        let w = self.m3(s, t, u);
                        if w == 0 {
                            return None;
                        }
                        index((t, u)).map(|target| (target, w))
                    })
                    .collect()
            })
            .collect();
        let mut choice = vec![usize::MAX; root];
        let mut total = BigUint::zero();
        extend(&options, &mut choice, 0, &BigUint::one(), &mut total);
        total
    }
}

fn extend(options: &[Vec<(usize, u64)>], choice: &mut [usize], k: usize, weight: &BigUint, total: &mut BigUint) {
    let root = choice.len();
    if k == root {
        *total += weight;
        return;
    }
    for &(target, w) in &options[k] {
        choice[k] = target;
        // walk forward from k through assigned vertices; returning to k closes a cycle
        let mut cur = target;
        let mut cyclic = false;
        while cur != root && cur <= k {
            if cur == k {
                cyclic = true;
                break;
            }
            cur = choice[cur];
        }
        if !cyclic {
            extend(options, choice, k + 1, &(weight * w), total);
        }
    }
    choice[k] = usize::MAX;
}

/// Trees in `T_ρ(n)` with `N_{t,u,c}` vertices of complete degree type
/// `(t, u, c)`; the root's parent type is `d + 1`.
pub fn count_by_complete_types(counts: &CompleteTypeCounts, rho: u32) -> Result<BigUint> {
    check_root_type(counts.d(), rho)?;
    let agg = Aggregates::new(counts)?;
    if !agg.admissible(rho) {
        return Ok(BigUint::zero());
    }
    let (num, den) = agg.prefactor(counts);
    exact_div(num * agg.arborescence_sum(rho), &den)
}

/// The same count in the regime `ρ = d` and `t ≤ s + 1` whenever
/// `m_{s,t} > 0`, where the arborescence sum factorizes.
pub fn count_complete_special(counts: &CompleteTypeCounts) -> Result<BigUint> {
    let d = counts.d() as u32;
    let agg = Aggregates::new(counts)?;
    for s in 1..=d {
        for t in 1..=d + 1 {
            if agg.m(s, t) > 0 && t > s + 1 {
                return Err(Error::precondition(format!(
                    "m_({s},{t}) > 0 but the factorized form needs t <= s + 1"
                )));
            }
        }
    }
    if !agg.admissible(d) {
        return Ok(BigUint::zero());
    }
    let mu = |s: u32| -> u64 {
        if agg.m(s, s) > 0 {
            agg.m(s, s) - agg.m3(s, s, s)
        } else {
            1
        }
    };
    let (num, den) = agg.prefactor(counts);
    let mut sum = BigUint::from(mu(1));
    for s in 1..=d {
        for t in 1..s {
            let k = agg.m(s, t);
            if k > 0 {
                sum *= k;
            }
        }
    }
    for s in 2..=d {
        sum *= agg.m3(s - 1, s, s + 1) * mu(s) + agg.m3(s - 1, s, s) * agg.m3(s, s, s + 1);
    }
    exact_div(num * sum, &den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> BigUint {
        BigUint::from(k)
    }

    fn unitype(root_degree: u32, non_root: &[(u32, u32)]) -> CompleteTypeCounts {
        let mut c = CompleteTypeCounts::new(1);
        c.add(1, 2, vec![root_degree], 1);
        for &(deg, k) in non_root {
            c.add(1, 1, vec![deg], k);
        }
        c
    }

    #[test]
    fn unitype_root_degree() {
        assert_eq!(count_by_complete_types(&unitype(2, &[(0, 2)]), 1).unwrap(), n(3));
        assert_eq!(count_by_complete_types(&unitype(1, &[(0, 1), (1, 1)]), 1).unwrap(), n(6));
        assert_eq!(count_complete_special(&unitype(2, &[(0, 2)])).unwrap(), n(3));
        // inconsistent: the root claims two children but only one vertex hangs below it
        assert_eq!(count_by_complete_types(&unitype(2, &[(0, 1)]), 1).unwrap(), n(0));
    }

    #[test]
    fn unitype_closed_form() {
        // n!(n-2)! / (Π N_c! c!^{N_c} (ℓ-1)!) for n = 5, root degree 2, non-root degrees 2,0,0,0
        let c = unitype(2, &[(2, 1), (0, 3)]);
        // 5!·3! / (1!·3!·2!·1!) = 60
        assert_eq!(count_by_complete_types(&c, 1).unwrap(), n(60));
        assert_eq!(count_complete_special(&c).unwrap(), n(60));
    }

    #[test]
    fn special_precondition() {
        // d = 2, a type-1 vertex whose parent type is 3 (the root) violates t <= s + 1
        let mut c = CompleteTypeCounts::new(2);
        c.add(1, 3, vec![0, 1], 1);
        c.add(2, 1, vec![0, 0], 1);
        assert!(matches!(count_complete_special(&c), Err(Error::Precondition(_))));
        assert_eq!(count_by_complete_types(&c, 1).unwrap(), n(1));
    }
}
