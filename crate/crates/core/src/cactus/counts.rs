use num_bigint::BigUint;
use num_traits::Zero;

use crate::algebra::{binomial, factorial};
use crate::model::Profile;

use super::model::CactusDegreeVector;

/// The size `n = (Σ n_t - 1) / (d - 1)` when it is integral and every
/// `n_t ≤ n`; `None` otherwise (no cactus has this profile).
pub fn cactus_size(profile: &Profile) -> Option<u32> {
    let d = profile.d() as u64;
    if d < 2 {
        return None;
    }
    let total = profile.num_vertices() as u64 - 1;
    if !total.is_multiple_of(d - 1) {
        return None;
    }
    let n = (total / (d - 1)) as u32;
    profile.counts().iter().all(|&k| k <= n).then_some(n)
}

/// Cacti with degree vector `γ`: `n^{d-1} Π_t (n_t - 1)!` when every degree
/// is positive and every type sums to `n`, else 0.
pub fn count_cacti_by_degree(gamma: &CactusDegreeVector) -> BigUint {
    let profile = gamma.profile();
    let Some(n) = cactus_size(profile) else {
        return BigUint::zero();
    };
    if gamma.degrees().contains(&0) || (1..=profile.d() as u32).any(|t| gamma.type_sum(t) != u64::from(n)) {
        return BigUint::zero();
    }
    let mut acc = BigUint::from(n).pow(profile.d() as u32 - 1);
    for &k in profile.counts() {
        acc *= factorial(u64::from(k) - 1);
    }
    acc
}

/// All cacti with profile `n`: `n^{d-1} Π_t C(n-1, n_t-1) (n_t-1)!`.
pub fn count_cacti_total(profile: &Profile) -> BigUint {
    let d = profile.d() as u64;
    if d < 2 {
        return BigUint::zero();
    }
    let total = profile.num_vertices() as u64 - 1;
    if !total.is_multiple_of(d - 1) {
        return BigUint::zero();
    }
    let n = total / (d - 1);
    let mut acc = BigUint::from(n).pow(d as u32 - 1);
    for &k in profile.counts() {
        let k = u64::from(k);
        acc *= binomial(n - 1, k - 1) * factorial(k - 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u32]) -> Profile {
        Profile::new(c.to_vec()).unwrap()
    }

    #[test]
    fn sizes() {
        assert_eq!(cactus_size(&p(&[1, 1])), Some(1));
        assert_eq!(cactus_size(&p(&[2, 2])), Some(3));
        assert_eq!(cactus_size(&p(&[1, 1, 2])), None);
        assert_eq!(cactus_size(&p(&[3, 1, 1])), None);
        assert_eq!(cactus_size(&p(&[3])), None);
    }

    #[test]
    fn totals() {
        assert_eq!(count_cacti_total(&p(&[1, 1])), BigUint::from(1u32));
        assert_eq!(count_cacti_total(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(count_cacti_total(&p(&[2, 2])), BigUint::from(12u32));
        assert_eq!(count_cacti_total(&p(&[1, 1, 1])), BigUint::from(1u32));
        assert_eq!(count_cacti_total(&p(&[1, 1, 2])), BigUint::zero());
        assert_eq!(count_cacti_total(&p(&[3, 1, 1])), BigUint::zero());
    }

    #[test]
    fn by_degree() {
        let prof = p(&[2, 1]);
        let g = CactusDegreeVector::from_degrees(&prof, &[1, 1, 2]).unwrap();
        assert_eq!(count_cacti_by_degree(&g), BigUint::from(2u32));
        let bad = CactusDegreeVector::from_degrees(&prof, &[2, 1, 2]).unwrap();
        assert_eq!(count_cacti_by_degree(&bad), BigUint::zero());
        let star = CactusDegreeVector::star(&p(&[1, 3]), 3);
        assert_eq!(star.degrees(), &[3, 1, 1, 1]);
        assert_eq!(count_cacti_by_degree(&star), BigUint::from(6u32));
    }
}
