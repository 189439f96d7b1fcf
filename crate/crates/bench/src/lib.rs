//! Inputs shared by the criterion benches.

use faultrank_core::graph::random_directed_graph;
use faultrank_core::{ExposureMap, FaultGraph, FaultId, TestId};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Uniform random fault graph on `n` nodes with `m` edges.
pub fn random_graph(n: usize, m: usize, seed: u64) -> FaultGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_directed_graph(n, m, &mut rng).expect("m fits n")
}

/// One test per pair of consecutive faults, so every fault is revealed.
pub fn paired_exposure(g: &FaultGraph) -> ExposureMap {
    let mut e = ExposureMap::new();
    for (i, &FaultId(f)) in g.nodes().iter().enumerate() {
        e.insert(TestId(i as u32 / 2 + 1), FaultId(f));
    }
    e
}
