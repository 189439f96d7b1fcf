use super::{
    CentralityResult, Direction, MetricId, Oriented, SolverParams, MAX_ITERATIONS,
    PAGERANK_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::graph::FaultGraph;

pub const DEFAULT_DAMPING: f64 = 0.85;

/// Damped PageRank; an edge passes score from its source to its target, so in
/// the stored orientation dependents feed their leading faults. Dangling mass
/// is spread uniformly. Stops at L1 change below 1e-9.
pub fn pagerank_centrality(
    g: &FaultGraph,
    direction: Direction,
    damping: f64,
) -> Result<CentralityResult> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !(damping > 0.0 && damping < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "damping must lie in (0, 1), got {damping}"
        )));
    }
    let o = Oriented::new(g, direction);
    let nf = n as f64;
    let mut x = vec![1.0 / nf; n];
    let mut next = vec![0.0; n];
    let mut iterations = 0;
    let mut converged = false;

    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let dangling: f64 = (0..n).filter(|&u| o.out[u].is_empty()).map(|u| x[u]).sum();
        let base = (1.0 - damping) / nf + damping * dangling / nf;
        for (v, slot) in next.iter_mut().enumerate() {
            let inflow: f64 = o.inc[v].iter().map(|&u| x[u] / o.out[u].len() as f64).sum();
            *slot = base + damping * inflow;
        }
        let change: f64 = x.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
        std::mem::swap(&mut x, &mut next);
        if change < PAGERANK_TOLERANCE {
            converged = true;
            break;
        }
    }
    let total: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v /= total);

    let params = SolverParams {
        damping: Some(damping),
        tolerance: Some(PAGERANK_TOLERANCE),
        max_iterations: Some(MAX_ITERATIONS),
        iterations: Some(iterations),
        converged: Some(converged),
    };
    Ok(CentralityResult::new(
        g,
        MetricId::Pagerank,
        direction,
        params,
        &x,
    ))
}
