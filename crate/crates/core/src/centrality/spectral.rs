//! Eigenvector and HITS hub centrality by power iteration.

use super::{
    zip_scores, CentralityResult, Direction, MetricId, Oriented, SolverParams, MAX_ITERATIONS,
    POWER_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::graph::FaultGraph;

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
}

fn max_change(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn power_params(iterations: usize, converged: bool) -> SolverParams {
    SolverParams {
        tolerance: Some(POWER_TOLERANCE),
        max_iterations: Some(MAX_ITERATIONS),
        iterations: Some(iterations),
        converged: Some(converged),
        ..SolverParams::default()
    }
}

/// Each fault's score is proportional to the summed scores of the faults
/// pointing at it under `direction`.
///
/// Iterates `x <- (A^T + I) x` from the uniform vector. The identity shift
/// keeps the dominant eigenvector but stops the oscillation plain power
/// iteration shows on bipartite graphs.
pub fn eigenvector_centrality(g: &FaultGraph, direction: Direction) -> Result<CentralityResult> {
    let o = Oriented::new(g, direction);
    if !o.has_edges() {
        return Err(Error::NoEdges("no edges for eigenvector"));
    }
    let n = g.node_count();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut next = vec![0.0; n];
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        for v in 0..n {
            next[v] = x[v] + o.inc[v].iter().map(|&u| x[u]).sum::<f64>();
        }
        normalize(&mut next);
        let change = max_change(&x, &next);
        std::mem::swap(&mut x, &mut next);
        if change < POWER_TOLERANCE {
            converged = true;
            break;
        }
    }
    Ok(CentralityResult::new(
        g,
        MetricId::Eigenvector,
        direction,
        power_params(iterations, converged),
        &x,
    ))
}

/// HITS: authority sums the hub scores of predecessors, hub sums the
/// authority scores of successors, both L2-normalised each step. Returns hub
/// scores with authorities attached.
pub fn hub_centrality(g: &FaultGraph, direction: Direction) -> Result<CentralityResult> {
    let o = Oriented::new(g, direction);
    if !o.has_edges() {
        return Err(Error::NoEdges("no edges for hub centrality"));
    }
    let n = g.node_count();
    let mut hub = vec![1.0 / (n as f64).sqrt(); n];
    let mut auth = hub.clone();
    let mut iterations = 0;
    let mut converged = false;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let mut next_auth: Vec<f64> = (0..n)
            .map(|v| o.inc[v].iter().map(|&u| hub[u]).sum())
            .collect();
        normalize(&mut next_auth);
        let mut next_hub: Vec<f64> = (0..n)
            .map(|u| o.out[u].iter().map(|&v| next_auth[v]).sum())
            .collect();
        normalize(&mut next_hub);
        let change = max_change(&hub, &next_hub).max(max_change(&auth, &next_auth));
        hub = next_hub;
        auth = next_auth;
        if change < POWER_TOLERANCE {
            converged = true;
            break;
        }
    }
    let mut result = CentralityResult::new(
        g,
        MetricId::Hub,
        direction,
        power_params(iterations, converged),
        &hub,
    );
    result.authority = Some(zip_scores(g, &auth));
    Ok(result)
}
