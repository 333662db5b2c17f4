/// Size limits for generators, expansions and determinants.
///
/// Every limit is enforced with a typed [`Error::SizeBound`](crate::Error::SizeBound);
/// nothing is silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest vertex set handed to the tree and forest generators.
    pub max_vertices: usize,
    /// Largest type count for skeleton enumeration.
    pub max_types: usize,
    /// Largest plane tree size.
    pub max_plane_vertices: usize,
    /// Largest term count a generating-function expansion may reach.
    pub max_gf_terms: usize,
    /// Largest matrix dimension for [`determinant`](crate::algebra::determinant).
    pub max_det_dim: usize,
    /// Largest cactus size (number of gons).
    pub max_cactus_size: usize,
    /// Largest polygon degree for cacti.
    pub max_cactus_d: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_vertices: 9,
            max_types: 8,
            max_plane_vertices: 12,
            max_gf_terms: 1_000_000,
            max_det_dim: 8,
            max_cactus_size: 4,
            max_cactus_d: 4,
        }
    }
}
