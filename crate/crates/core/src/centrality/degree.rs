use super::{CentralityResult, Direction, MetricId, Oriented, SolverParams};
use crate::graph::FaultGraph;

/// Number of edges arriving at each fault under `direction`.
pub fn indegree_centrality(g: &FaultGraph, direction: Direction) -> CentralityResult {
    let o = Oriented::new(g, direction);
    let values: Vec<f64> = o.inc.iter().map(|l| l.len() as f64).collect();
    CentralityResult::new(
        g,
        MetricId::Indegree,
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
    fn counts_dependents() {
        let g = load_edge_list("2,1\n3,1\n3,2\n").unwrap();
        let r = indegree_centrality(&g, Direction::Directed);
        assert_eq!(r.values(), vec![2.0, 1.0, 0.0]);
        let r = indegree_centrality(&g, Direction::Reversed);
        assert_eq!(r.score(FaultId(3)), Some(2.0));
        let r = indegree_centrality(&g, Direction::Undirected);
        assert_eq!(r.values(), vec![2.0, 2.0, 2.0]);
    }
}
