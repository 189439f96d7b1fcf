use super::{CentralityResult, Direction, MetricId, Oriented, SolverParams};
use crate::graph::{bfs_distances, FaultGraph};

/// Closeness scaled by the reachable share of the graph:
/// `((r-1)/sum_d) * ((r-1)/(n-1))` where `r` counts the node itself and
/// everything it reaches. Nodes reaching nothing score 0.
pub fn closeness_centrality(g: &FaultGraph, direction: Direction) -> CentralityResult {
    let o = Oriented::new(g, direction);
    let n = g.node_count();
    let values: Vec<f64> = (0..n)
        .map(|x| {
            let (mut reached, mut total) = (0usize, 0u64);
            for d in bfs_distances(&o.out, x).into_iter().flatten() {
                if d > 0 {
                    reached += 1;
                    total += d as u64;
                }
            }
            if reached == 0 {
                0.0
            } else {
                let r = reached as f64;
                (r / total as f64) * (r / (n - 1) as f64)
            }
        })
        .collect();
    CentralityResult::new(
        g,
        MetricId::Closeness,
        direction,
        SolverParams::default(),
        &values,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;
    use crate::ids::FaultId;

    #[test]
    fn undirected_path() {
        let g = load_edge_list("1,2\n2,3\n").unwrap();
        let v = closeness_centrality(&g, Direction::Undirected).values();
        assert_eq!(v[1], 1.0);
        assert!((v[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((v[2] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn isolated_node_scores_zero() {
        let g = crate::graph::FaultGraph::new([FaultId(1), FaultId(2)], []).unwrap();
        assert_eq!(
            closeness_centrality(&g, Direction::Directed).values(),
            vec![0.0, 0.0]
        );
        let single = crate::graph::FaultGraph::new([FaultId(1)], []).unwrap();
        assert_eq!(
            closeness_centrality(&single, Direction::Directed).values(),
            vec![0.0]
        );
    }

    #[test]
    fn directed_sink_scores_zero() {
        let g = load_edge_list("2,1\n3,1\n").unwrap();
        let v = closeness_centrality(&g, Direction::Directed).values();
        assert_eq!(v[0], 0.0);
        assert!((v[1] - 0.5).abs() < 1e-15);
    }
}
