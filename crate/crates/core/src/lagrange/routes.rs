use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::{factorial, Monomial, Polynomial, PowerSeries, Rational, Var};
use crate::enumerate::{for_each_skeleton, for_each_tree};
use crate::model::Profile;
use crate::{Bounds, Error, Result};

use super::system::{solve_functional_system, FunctionalSystem};

fn monomial(n: &[u32]) -> Monomial {
    Monomial::from_powers(n.iter().enumerate().map(|(t, &e)| (Var::Plain(t as u32 + 1), e)))
}

fn big_factorial(k: u32) -> Rational {
    Rational::from_integer(factorial(u64::from(k)).into())
}

/// `[x^n] G_{d+1}(f_1, …, f_d)` by solving the system and substituting.
pub fn direct_coefficient(system: &FunctionalSystem, n: &[u32]) -> Result<Rational> {
    system.check_index(n)?;
    let out = system.output()?;
    let f = solve_functional_system(system);
    Ok(out.compose(&f, system.order()).coefficient(&monomial(n)))
}

/// `[x^n] f_ρ` as a weighted sum over `T_ρ(n)`:
/// `(Π 1/n_t!) Σ_T Π_{(t,i)} [y^{ch(t,i)}] G_t · Π ch_s(t,i)!`.
///
/// With `ρ = d + 1` the system's `G_{d+1}` joins as an extra type with a
/// single vertex, the root, and the result is `[x^n] G_{d+1}(f)`.
pub fn tree_sum_coefficient(system: &FunctionalSystem, rho: u32, n: &[u32], bounds: &Bounds) -> Result<Rational> {
    system.check_index(n)?;
    let d = system.d();
    let mut counts = n.to_vec();
    match rho as usize {
        r if (1..=d).contains(&r) => {}
        r if r == d + 1 => {
            system.output()?;
            counts.push(1);
        }
        _ => return Err(Error::invalid(format!("root type {rho} is outside [1, {}]", d + 1))),
    }
    if counts[rho as usize - 1] == 0 {
        return Ok(Rational::zero());
    }
    // types with no vertices drop out of the tree profile
    let present: Vec<usize> = (0..counts.len()).filter(|&t| counts[t] > 0).collect();
    let profile = Profile::new(present.iter().map(|&t| counts[t]).collect())?;
    let local_rho = present.iter().position(|&t| t + 1 == rho as usize).expect("root type is present") as u32 + 1;
    let nv = profile.num_vertices();
    let dd = profile.d();
    let types = profile.type_table();
    let mut tally: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut gamma = vec![0u32; dd * nv];
    for_each_tree(&profile, Some(local_rho), bounds, |_, parent| {
        gamma.fill(0);
        for (c, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                gamma[types[c] * nv + p] += 1;
            }
        }
        *tally.entry(gamma.clone()).or_insert(0) += 1;
    })?;
    let mut coef_cache: HashMap<(usize, Vec<u32>), Rational> = HashMap::new();
    let mut total = Rational::zero();
    for (g, k) in tally {
        let mut w = Rational::from_integer(k.into());
        for v in 0..nv {
            // indegree type of v in the original coordinates
            let mut c = vec![0u32; counts.len()];
            for s in 0..dd {
                c[present[s]] = g[s * nv + v];
            }
            let t = present[types[v]];
            let coef = coef_cache
                .entry((t, c.clone()))
                .or_insert_with(|| system.g(t + 1).coefficient(&monomial(&c)))
                .clone();
            if coef.is_zero() {
                w = Rational::zero();
                break;
            }
            w *= coef;
            for &cs in &c {
                w *= big_factorial(cs);
            }
        }
        total += w;
    }
    for &k in n {
        total /= big_factorial(k);
    }
    Ok(total)
}

/// `[x^n] (Π_t x_t/n_t) Σ_{A ∈ Cay_{d+1}(d+1)} Π_{t ∈ [d+1]} (Π_{(s,t) ∈ A} ∂/∂x_s) G_t^{n_t}`
/// with `n_{d+1} = 1`; every `n_t` must be positive.
pub fn lagrange_rhs_coefficient(system: &FunctionalSystem, n: &[u32], bounds: &Bounds) -> Result<Rational> {
    system.check_index(n)?;
    system.output()?;
    if let Some(t) = n.iter().position(|&k| k == 0) {
        return Err(Error::precondition(format!("n_{} is zero; every entry must be positive", t + 1)));
    }
    let d = system.d();
    let total: u32 = n.iter().sum();
    let order = total + 1;
    let powers: Vec<PowerSeries> = (1..=d + 1)
        .map(|t| {
            let k = if t <= d { n[t - 1] } else { 1 };
            system.g(t).with_order(order).pow(k)
        })
        .collect();
    let shifted: Vec<u32> = n.iter().map(|k| k - 1).collect();
    let target = monomial(&shifted);
    let mut sum = Rational::zero();
    for_each_skeleton(d + 1, d as u32 + 1, bounds, |parent| {
        let mut prod = PowerSeries::new(Polynomial::one(), order);
        for (t, power) in powers.iter().enumerate() {
            let mut factor = power.clone();
            for (s, p) in parent.iter().enumerate() {
                if *p == Some(t) {
                    factor = factor.partial_derivative(Var::Plain(s as u32 + 1));
                }
            }
            prod = prod.mul(&factor);
        }
        sum += prod.coefficient(&target);
    })?;
    for &k in n {
        sum /= Rational::from_integer(k.into());
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(t: u32) -> Polynomial {
        Polynomial::var(Var::Plain(t))
    }

    fn geometric(k: u32) -> Polynomial {
        (0..k).fold(Polynomial::zero(), |acc, e| &acc + &x(1).pow(e))
    }

    fn q(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    #[test]
    fn catalan_three_ways() {
        let b = Bounds::default();
        let s = FunctionalSystem::new(1, vec![geometric(7), geometric(7)], 7).unwrap();
        assert_eq!(tree_sum_coefficient(&s, 1, &[3], &b).unwrap(), q(2));
        // [x^3] 1/(1-f) = [x^4] f = 5
        assert_eq!(direct_coefficient(&s, &[3]).unwrap(), q(5));
        assert_eq!(tree_sum_coefficient(&s, 2, &[3], &b).unwrap(), q(5));
        assert_eq!(lagrange_rhs_coefficient(&s, &[3], &b).unwrap(), q(5));
    }

    #[test]
    fn trivial_and_forced() {
        let b = Bounds::default();
        let s = FunctionalSystem::new(1, vec![Polynomial::one(), Polynomial::one()], 3).unwrap();
        assert_eq!(tree_sum_coefficient(&s, 1, &[1], &b).unwrap(), q(1));
        assert_eq!(lagrange_rhs_coefficient(&s, &[1], &b).unwrap(), q(0));
        assert_eq!(direct_coefficient(&s, &[1]).unwrap(), q(0));
        let s = FunctionalSystem::new(2, vec![&Polynomial::one() + &x(2), Polynomial::one(), &Polynomial::one() + &x(1)], 5)
            .unwrap();
        assert_eq!(tree_sum_coefficient(&s, 1, &[1, 1], &b).unwrap(), q(1));
        for n in [[1u32, 1], [1, 2], [2, 1]] {
            let direct = direct_coefficient(&s, &n).unwrap();
            assert_eq!(tree_sum_coefficient(&s, 3, &n, &b).unwrap(), direct);
            assert_eq!(lagrange_rhs_coefficient(&s, &n, &b).unwrap(), direct);
        }
    }

    #[test]
    fn preconditions() {
        let b = Bounds::default();
        let s = FunctionalSystem::new(1, vec![geometric(4)], 4).unwrap();
        assert!(matches!(direct_coefficient(&s, &[1]), Err(Error::Precondition(_))));
        assert!(matches!(tree_sum_coefficient(&s, 1, &[4], &b), Err(Error::Precondition(_))));
        let s = FunctionalSystem::new(2, vec![Polynomial::one(); 3], 4).unwrap();
        assert!(matches!(lagrange_rhs_coefficient(&s, &[0, 2], &b), Err(Error::Precondition(_))));
    }
}
