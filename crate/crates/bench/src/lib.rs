//! Fixed inputs shared by the benchmarks, so runs stay comparable.

use multitree::algebra::Polynomial;
use multitree::lagrange::FunctionalSystem;
use multitree::Profile;

/// Profiles for tree enumeration, smallest first.
pub fn tree_profiles() -> Vec<(Profile, u32)> {
    [(vec![7], 1), (vec![3, 4], 1), (vec![2, 2, 3], 2), (vec![4, 4], 2)]
        .into_iter()
        .map(|(c, rho)| (Profile::new(c).unwrap(), rho))
        .collect()
}

/// Profiles for cactus generation.
pub fn cactus_profiles() -> Vec<Profile> {
    [vec![2, 2], vec![3, 2], vec![2, 2, 3], vec![3, 3, 1]].into_iter().map(|c| Profile::new(c).unwrap()).collect()
}

/// `f_1 = x_1 (1 + f_2)^2`, `f_2 = x_2 (1 + f_1 f_2)`, with `G_3 = 1 + f_1`.
pub fn two_type_system(order: u32) -> FunctionalSystem {
    use multitree::algebra::Var::Plain;
    let y = |t| Polynomial::var(Plain(t));
    let one = Polynomial::one;
    let g1 = (one() + y(2)).pow(2);
    let g2 = one() + y(1) * y(2);
    let g3 = one() + y(1);
    FunctionalSystem::new(2, vec![g1, g2, g3], order).unwrap()
}
