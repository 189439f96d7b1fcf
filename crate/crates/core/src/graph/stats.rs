//! Components, structural statistics and the same-size random reference.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::FaultGraph;
use crate::error::{Error, Result};
use crate::ids::FaultId;

/// Unweighted BFS distances from `source` over adjacency lists.
pub(crate) fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap() + 1;
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(d);
                queue.push_back(v);
            }
        }
    }
    dist
}

pub(crate) fn directed_adjacency(g: &FaultGraph) -> Vec<Vec<usize>> {
    (0..g.node_count())
        .map(|i| g.successors(i).to_vec())
        .collect()
}

pub(crate) fn undirected_adjacency(g: &FaultGraph) -> Vec<Vec<usize>> {
    (0..g.node_count())
        .map(|i| g.undirected_neighbors(i))
        .collect()
}

/// Weak components, largest first; equal sizes ordered by smallest member.
pub fn weakly_connected_components(g: &FaultGraph) -> Vec<Vec<FaultId>> {
    let adj = undirected_adjacency(g);
    let mut seen = vec![false; g.node_count()];
    let mut comps = Vec::new();
    for start in 0..g.node_count() {
        if seen[start] {
            continue;
        }
        let mut members: Vec<FaultId> = bfs_distances(&adj, start)
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_some())
            .map(|(i, _)| {
                seen[i] = true;
                g.nodes()[i]
            })
            .collect();
        members.sort_unstable();
        comps.push(members);
    }
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    comps
}

/// Subgraph induced by the largest weak component.
pub fn giant_component(g: &FaultGraph) -> Result<FaultGraph> {
    let comps = weakly_connected_components(g);
    let first = comps.into_iter().next().ok_or(Error::EmptyGraph)?;
    Ok(g.induced_subgraph(&first.into_iter().collect()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructuralStats {
    pub node_count: usize,
    pub edge_count: usize,
    pub avg_in_degree: f64,
    /// Mean directed distance over ordered reachable pairs.
    pub avg_path_length: f64,
    /// Number of ordered pairs `(u, v)`, `u != v`, with a directed path.
    pub reachable_pairs: usize,
    /// False when no pair is reachable and `avg_path_length` is reported as 0.
    pub path_length_defined: bool,
    /// Same as `avg_path_length` but on the undirected projection.
    pub undirected_path_length: f64,
    /// Mean local clustering on the undirected projection.
    pub global_clustering: f64,
    /// Mean local clustering counting directed links among neighbours over
    /// `k(k-1)` ordered slots. Equals half of `global_clustering` when no
    /// pair of faults depends on each other mutually.
    pub directed_clustering: f64,
    pub component_sizes: Vec<usize>,
}

struct PathSummary {
    mean: f64,
    pairs: usize,
}

fn mean_path_length(adj: &[Vec<usize>]) -> PathSummary {
    let (mut total, mut pairs) = (0u64, 0usize);
    for s in 0..adj.len() {
        for d in bfs_distances(adj, s).into_iter().flatten() {
            if d > 0 {
                total += d as u64;
                pairs += 1;
            }
        }
    }
    let mean = if pairs == 0 {
        0.0
    } else {
        total as f64 / pairs as f64
    };
    PathSummary { mean, pairs }
}

/// Local clustering coefficients on the undirected projection.
pub fn local_clustering(g: &FaultGraph) -> Vec<f64> {
    let adj = undirected_adjacency(g);
    adj.iter()
        .map(|nbrs| {
            let k = nbrs.len();
            if k < 2 {
                return 0.0;
            }
            let mut links = 0usize;
            for (x, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[x + 1..] {
                    if adj[a].binary_search(&b).is_ok() {
                        links += 1;
                    }
                }
            }
            links as f64 / (k * (k - 1) / 2) as f64
        })
        .collect()
}

fn directed_local_clustering(g: &FaultGraph) -> Vec<f64> {
    (0..g.node_count())
        .map(|i| {
            let nbrs = g.undirected_neighbors(i);
            let k = nbrs.len();
            if k < 2 {
                return 0.0;
            }
            let links: usize = nbrs
                .iter()
                .map(|&a| {
                    g.successors(a)
                        .iter()
                        .filter(|b| nbrs.binary_search(b).is_ok())
                        .count()
                })
                .sum();
            links as f64 / (k * (k - 1)) as f64
        })
        .collect()
}

fn mean(values: &[f64]) -> f64 {
    if values.is_empty() {
        0.0
    } else {
        values.iter().sum::<f64>() / values.len() as f64
    }
}

pub fn structural_stats(g: &FaultGraph) -> StructuralStats {
    let directed = mean_path_length(&directed_adjacency(g));
    let undirected = mean_path_length(&undirected_adjacency(g));
    let n = g.node_count();
    StructuralStats {
        node_count: n,
        edge_count: g.edge_count(),
        avg_in_degree: if n == 0 {
            0.0
        } else {
            g.edge_count() as f64 / n as f64
        },
        avg_path_length: directed.mean,
        reachable_pairs: directed.pairs,
        path_length_defined: directed.pairs > 0,
        undirected_path_length: undirected.mean,
        global_clustering: mean(&local_clustering(g)),
        directed_clustering: mean(&directed_local_clustering(g)),
        component_sizes: weakly_connected_components(g)
            .iter()
            .map(Vec::len)
            .collect(),
    }
}

/// Averages over uniform random directed graphs with a fixed node and edge
/// count. Path lengths and clustering are reported under both the directed
/// and the undirected-projection conventions used by [`StructuralStats`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RandomReference {
    pub trials: usize,
    pub seed: u64,
    pub node_count: usize,
    pub edge_count: usize,
    /// Mean path length on the undirected projection.
    pub mean_path_length: f64,
    /// Mean local clustering on the undirected projection.
    pub mean_clustering: f64,
    pub mean_directed_path_length: f64,
    pub mean_directed_clustering: f64,
}

/// Uniform simple directed graph on nodes `1..=n` with exactly `m` edges.
pub fn random_directed_graph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<FaultGraph> {
    let slots = n * n.saturating_sub(1);
    if m > slots {
        return Err(Error::TooManyEdges {
            nodes: n,
            edges: m,
            max: slots,
        });
    }
    let id = |i: usize| FaultId(i as u32 + 1);
    let edges: Vec<(FaultId, FaultId)> = sample(rng, slots, m)
        .into_iter()
        .map(|k| {
            let (i, r) = (k / (n - 1), k % (n - 1));
            let j = if r >= i { r + 1 } else { r };
            (id(i), id(j))
        })
        .collect();
    FaultGraph::new((0..n).map(id), edges)
}

pub fn random_reference(g: &FaultGraph, trials: usize, seed: u64) -> Result<RandomReference> {
    random_reference_sized(g.node_count(), g.edge_count(), trials, seed)
}

/// Trial `t` draws from a ChaCha stream `t` under `seed`, so results do not
/// depend on how trials are scheduled across threads.
pub fn random_reference_sized(
    n: usize,
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<RandomReference> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let slots = n * n.saturating_sub(1);
    if m > slots {
        return Err(Error::TooManyEdges {
            nodes: n,
            edges: m,
            max: slots,
        });
    }
    let per_trial: Vec<[f64; 4]> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let g = random_directed_graph(n, m, &mut rng).expect("edge count checked");
            let s = structural_stats(&g);
            [
                s.undirected_path_length,
                s.global_clustering,
                s.avg_path_length,
                s.directed_clustering,
            ]
        })
        .collect();
    let avg = |k: usize| per_trial.iter().map(|v| v[k]).sum::<f64>() / trials as f64;
    Ok(RandomReference {
        trials,
        seed,
        node_count: n,
        edge_count: m,
        mean_path_length: avg(0),
        mean_clustering: avg(1),
        mean_directed_path_length: avg(2),
        mean_directed_clustering: avg(3),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeConcentration {
    pub faults: Vec<FaultId>,
    pub incident_edges: usize,
    pub total_edges: usize,
    pub edge_fraction: f64,
    pub fault_fraction: f64,
}

/// Share of edges touching at least one of `faults`.
pub fn edge_concentration(g: &FaultGraph, faults: &[FaultId]) -> EdgeConcentration {
    let set: BTreeSet<FaultId> = faults.iter().copied().collect();
    let incident = g
        .edges()
        .filter(|(a, b)| set.contains(a) || set.contains(b))
        .count();
    let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
    EdgeConcentration {
        faults: set.iter().copied().collect(),
        incident_edges: incident,
        total_edges: g.edge_count(),
        edge_fraction: ratio(incident, g.edge_count()),
        fault_fraction: ratio(set.len(), g.node_count()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;

    fn f(i: u32) -> FaultId {
        FaultId(i)
    }

    #[test]
    fn components_sorted_and_tied_by_smallest_member() {
        let g = FaultGraph::new([f(1), f(2), f(3), f(4)], [(f(2), f(1)), (f(4), f(3))]).unwrap();
        assert_eq!(
            weakly_connected_components(&g),
            vec![vec![f(1), f(2)], vec![f(3), f(4)]]
        );
        assert_eq!(giant_component(&g).unwrap().nodes(), &[f(1), f(2)]);

        let single = FaultGraph::new([f(5)], []).unwrap();
        assert_eq!(weakly_connected_components(&single), vec![vec![f(5)]]);
    }

    #[test]
    fn giant_of_connected_graph_is_identity() {
        let g = load_edge_list("2,1\n3,2\n").unwrap();
        assert_eq!(giant_component(&g).unwrap(), g);
        let empty = FaultGraph::new([], []).unwrap();
        assert_eq!(giant_component(&empty), Err(Error::EmptyGraph));
    }

    #[test]
    fn chain_path_length() {
        let g = load_edge_list("1,2\n2,3\n").unwrap();
        let s = structural_stats(&g);
        assert!((s.avg_path_length - 4.0 / 3.0).abs() < 1e-12);
        assert_eq!(s.reachable_pairs, 3);
        assert!(s.path_length_defined);
    }

    #[test]
    fn no_reachable_pairs_is_flagged() {
        let g = FaultGraph::new([f(1), f(2)], []).unwrap();
        let s = structural_stats(&g);
        assert_eq!(s.avg_path_length, 0.0);
        assert!(!s.path_length_defined);
    }

    #[test]
    fn triangle_clustering() {
        let g = load_edge_list("1,2\n2,3\n3,1\n").unwrap();
        let s = structural_stats(&g);
        assert_eq!(s.global_clustering, 1.0);
        assert_eq!(s.directed_clustering, 0.5);
        let both = load_edge_list("1,2\n2,1\n2,3\n3,2\n3,1\n1,3\n").unwrap();
        assert_eq!(structural_stats(&both).global_clustering, 1.0);
        assert_eq!(structural_stats(&both).directed_clustering, 1.0);
    }

    #[test]
    fn complete_random_reference_has_unit_paths() {
        let r = random_reference_sized(3, 6, 5, 1).unwrap();
        assert_eq!(r.mean_path_length, 1.0);
        assert_eq!(r.mean_directed_path_length, 1.0);
        assert_eq!(r.mean_clustering, 1.0);
    }

    #[test]
    fn random_reference_rejects_impossible_sizes() {
        assert!(matches!(
            random_reference_sized(3, 7, 1, 0),
            Err(Error::TooManyEdges { max: 6, .. })
        ));
        assert!(random_reference_sized(3, 2, 0, 0).is_err());
    }

    #[test]
    fn random_graph_has_requested_size() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = random_directed_graph(10, 40, &mut rng).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (10, 40));
    }
}
