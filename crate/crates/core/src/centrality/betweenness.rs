//! Brandes betweenness: one BFS per source, then back-propagated
//! pair dependencies. Scores are raw sums, endpoints excluded.

use std::collections::VecDeque;

use super::{CentralityResult, Direction, MetricId, Oriented, SolverParams};
use crate::graph::FaultGraph;

pub fn betweenness_centrality(g: &FaultGraph, direction: Direction) -> CentralityResult {
    let o = Oriented::new(g, direction);
    let n = g.node_count();
    let mut bc = vec![0.0f64; n];

    let mut sigma = vec![0.0f64; n];
    let mut dist = vec![-1i64; n];
    let mut delta = vec![0.0f64; n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut stack = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);

    for s in 0..n {
        sigma.fill(0.0);
        dist.fill(-1);
        delta.fill(0.0);
        preds.iter_mut().for_each(Vec::clear);
        stack.clear();

        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in &o.out[v] {
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }

        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }

    if direction == Direction::Undirected {
        // Each unordered pair was visited from both ends.
        bc.iter_mut().for_each(|x| *x /= 2.0);
    }
    CentralityResult::new(
        g,
        MetricId::Betweenness,
        direction,
        SolverParams::default(),
        &bc,
    )
}
