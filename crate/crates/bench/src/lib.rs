//! Fixed-seed inputs shared by the benchmarks.

use aalpha_core::{a_alpha_matrix, random_mixed_graph, Alpha, Beta, HermitianMatrix, MixedGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SIZES: [usize; 4] = [8, 16, 32, 64];

pub fn graph(n: usize) -> MixedGraph {
    random_mixed_graph(n, 0.4, 0.5, n as u64).expect("valid parameters")
}

pub fn omega_matrix(n: usize, alpha: f64) -> HermitianMatrix {
    a_alpha_matrix(
        &graph(n),
        Alpha::new(alpha).expect("alpha in [0, 1]"),
        Beta::omega(),
    )
}

pub fn dense(n: usize) -> HermitianMatrix {
    HermitianMatrix::random(n, &mut ChaCha8Rng::seed_from_u64(n as u64))
}
