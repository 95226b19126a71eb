use serde::{Deserialize, Serialize};

/// Size limits and the seed for sampled checks.
///
/// Every algorithm in the crate is exact; the caps only decide where a
/// computation refuses to run rather than allocate or search too much.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest group order for which a dense table is built.
    pub order_cap: usize,
    /// Associativity is checked on all triples up to this order and on
    /// `10 * n^2` seeded random triples above it.
    pub assoc_exhaustive_cap: usize,
    /// Largest order for which the full subgroup lattice is enumerated
    /// (maximal subgroups, Frattini of non-p-groups).
    pub subgroup_cap: usize,
    /// Largest order accepted by the isomorphism test.
    pub iso_cap: usize,
    /// Largest generating-set size tried by brute-force rank search.
    pub rank_k_cap: usize,
    /// Burnside-basis ranks of p-groups up to this order are confirmed by
    /// exhaustive subset search.
    pub rank_certify_cap: usize,
    /// Live-coset limit for coset enumeration.
    pub max_cosets: usize,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: 4096,
            assoc_exhaustive_cap: 512,
            subgroup_cap: 256,
            iso_cap: 256,
            rank_k_cap: 6,
            rank_certify_cap: 128,
            max_cosets: 65536,
            seed: 0x5eed_c0de,
        }
    }
}
