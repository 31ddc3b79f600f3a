//! Single-pass graph stream sampling.
//!
//! The crate provides four streaming samplers (node sampling, edge sampling,
//! windowed BFS and partially-induced edge sampling), two offline baselines
//! (forest fire and induced edge sampling), the property distributions used
//! to judge how representative a sample is, and an experiment harness that
//! runs seeded sweeps and writes CSV/JSON results.

pub mod error;
pub mod experiment;
pub mod graph;
pub mod metrics;
pub mod sampling;
pub mod stream;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, NodeId, SampledGraph};
pub use metrics::{Distribution, Property};
pub use sampling::{Algorithm, SamplerParams, StreamSampler};
pub use stream::{EdgeList, GraphSummary, StreamSource};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator used everywhere randomness is needed.
pub type Rng = ChaCha8Rng;

/// Domain tags for [`derive_seed`]; keep them distinct so one run seed can
/// drive several independent random sources.
pub(crate) mod seed_tag {
    pub const PERMUTATION: u64 = 1;
    pub const SAMPLER: u64 = 2;
    pub const HASH_SALT: u64 = 3;
    pub const PATH_SOURCES: u64 = 4;
}

/// SplitMix64 finalizer.
pub(crate) fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent seed for the random source identified by `tag`.
pub fn derive_seed(seed: u64, tag: u64) -> u64 {
    mix64(seed ^ mix64(tag))
}

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
