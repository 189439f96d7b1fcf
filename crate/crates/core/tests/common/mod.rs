//! Shared helpers for the integration tests: brute-force oracles plus a
//! proptest strategy for small random graphs.

#![allow(dead_code)]

mod oracles;

pub use oracles::*;
use proptest::prelude::*;

/// Graphs on `1..=max_n` nodes; each ordered pair is an edge with probability `p`.
pub fn graphs(max_n: usize, p: f64) -> impl Strategy<Value = (usize, Edges)> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let slots = n * (n - 1);
            (
                Just(n),
                proptest::collection::vec(proptest::bool::weighted(p), slots),
            )
        })
        .prop_map(|(n, bits)| {
            let edges = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(k, _)| {
                    let (i, r) = (k / (n - 1), k % (n - 1));
                    (i, if r >= i { r + 1 } else { r })
                })
                .collect();
            (n, edges)
        })
}
