//! The six centrality metrics aggregated into leading scores, with a
//! per-metric choice of how edge direction is read.
//!
//! `Direction::Directed` follows stored edges (dependent -> leading), so
//! directed in-degree counts the faults that depend on a fault.
//! `Reversed` flips every edge and `Undirected` uses the symmetric projection.

mod betweenness;
mod closeness;
mod degree;
mod pagerank;
mod spectral;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::FaultGraph;
use crate::ids::FaultId;

pub use betweenness::betweenness_centrality;
pub use closeness::closeness_centrality;
pub use degree::indegree_centrality;
pub use pagerank::{pagerank_centrality, DEFAULT_DAMPING};
pub use spectral::{eigenvector_centrality, hub_centrality};

pub const POWER_TOLERANCE: f64 = 1e-8;
pub const PAGERANK_TOLERANCE: f64 = 1e-9;
pub const MAX_ITERATIONS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricId {
    Indegree,
    Betweenness,
    Closeness,
    Eigenvector,
    Pagerank,
    Hub,
}

impl MetricId {
    pub const ALL: [MetricId; 6] = [
        MetricId::Indegree,
        MetricId::Betweenness,
        MetricId::Closeness,
        MetricId::Eigenvector,
        MetricId::Pagerank,
        MetricId::Hub,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MetricId::Indegree => "indegree",
            MetricId::Betweenness => "betweenness",
            MetricId::Closeness => "closeness",
            MetricId::Eigenvector => "eigenvector",
            MetricId::Pagerank => "pagerank",
            MetricId::Hub => "hub",
        }
    }
}

impl fmt::Display for MetricId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        MetricId::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown metric `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Directed,
    Reversed,
    Undirected,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Directed => "directed",
            Direction::Reversed => "reversed",
            Direction::Undirected => "undirected",
        })
    }
}

/// Direction assignment for every metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DirectionConfig {
    pub indegree: Direction,
    pub betweenness: Direction,
    pub closeness: Direction,
    pub eigenvector: Direction,
    pub pagerank: Direction,
    pub hub: Direction,
}

impl DirectionConfig {
    /// Degree and PageRank on true dependency direction, path and spectral
    /// metrics on the undirected projection. This is the convention under
    /// which eigenvector and hub rankings coincide and the root fault tops
    /// betweenness.
    pub fn paper_mode() -> Self {
        Self {
            indegree: Direction::Directed,
            betweenness: Direction::Undirected,
            closeness: Direction::Undirected,
            eigenvector: Direction::Undirected,
            pagerank: Direction::Directed,
            hub: Direction::Undirected,
        }
    }

    pub fn strict_directed() -> Self {
        Self::uniform(Direction::Directed)
    }

    pub fn uniform(d: Direction) -> Self {
        Self {
            indegree: d,
            betweenness: d,
            closeness: d,
            eigenvector: d,
            pagerank: d,
            hub: d,
        }
    }

    pub fn get(&self, metric: MetricId) -> Direction {
        match metric {
            MetricId::Indegree => self.indegree,
            MetricId::Betweenness => self.betweenness,
            MetricId::Closeness => self.closeness,
            MetricId::Eigenvector => self.eigenvector,
            MetricId::Pagerank => self.pagerank,
            MetricId::Hub => self.hub,
        }
    }
}

impl Default for DirectionConfig {
    fn default() -> Self {
        Self::paper_mode()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    PaperMode,
    StrictDirected,
}

impl Preset {
    pub fn config(self) -> DirectionConfig {
        match self {
            Preset::PaperMode => DirectionConfig::paper_mode(),
            Preset::StrictDirected => DirectionConfig::strict_directed(),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Preset::PaperMode => "paper-mode",
            Preset::StrictDirected => "strict-directed",
        })
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper-mode" => Ok(Preset::PaperMode),
            "strict-directed" => Ok(Preset::StrictDirected),
            other => Err(format!("unknown preset `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SolverParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub damping: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralityResult {
    pub metric: MetricId,
    pub direction: Direction,
    pub params: SolverParams,
    pub scores: BTreeMap<FaultId, f64>,
    /// Authority scores, only present for the hub metric.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub authority: Option<BTreeMap<FaultId, f64>>,
}

impl CentralityResult {
    pub(crate) fn new(
        g: &FaultGraph,
        metric: MetricId,
        direction: Direction,
        params: SolverParams,
        values: &[f64],
    ) -> Self {
        Self {
            metric,
            direction,
            params,
            scores: zip_scores(g, values),
            authority: None,
        }
    }

    /// Scores in node-index order.
    pub fn values(&self) -> Vec<f64> {
        self.scores.values().copied().collect()
    }

    pub fn score(&self, id: FaultId) -> Option<f64> {
        self.scores.get(&id).copied()
    }
}

pub(crate) fn zip_scores(g: &FaultGraph, values: &[f64]) -> BTreeMap<FaultId, f64> {
    g.nodes()
        .iter()
        .copied()
        .zip(values.iter().copied())
        .collect()
}

/// Out- and in-adjacency lists after applying a direction.
pub(crate) struct Oriented {
    pub out: Vec<Vec<usize>>,
    pub inc: Vec<Vec<usize>>,
}

impl Oriented {
    pub fn new(g: &FaultGraph, direction: Direction) -> Self {
        let n = g.node_count();
        let succ = |i| g.successors(i).to_vec();
        let pred = |i| g.predecessors(i).to_vec();
        let (out, inc): (Vec<_>, Vec<_>) = match direction {
            Direction::Directed => (0..n).map(|i| (succ(i), pred(i))).unzip(),
            Direction::Reversed => (0..n).map(|i| (pred(i), succ(i))).unzip(),
            Direction::Undirected => (0..n)
                .map(|i| {
                    let nb = g.undirected_neighbors(i);
                    (nb.clone(), nb)
                })
                .unzip(),
        };
        Self { out, inc }
    }

    pub fn has_edges(&self) -> bool {
        self.out.iter().any(|l| !l.is_empty())
    }
}

pub fn compute_metric(
    g: &FaultGraph,
    metric: MetricId,
    direction: Direction,
) -> Result<CentralityResult> {
    match metric {
        MetricId::Indegree => Ok(indegree_centrality(g, direction)),
        MetricId::Betweenness => Ok(betweenness_centrality(g, direction)),
        MetricId::Closeness => Ok(closeness_centrality(g, direction)),
        MetricId::Eigenvector => eigenvector_centrality(g, direction),
        MetricId::Pagerank => pagerank_centrality(g, direction, DEFAULT_DAMPING),
        MetricId::Hub => hub_centrality(g, direction),
    }
}

/// Results of a multi-metric run; metrics that failed are kept with their error.
#[derive(Debug, Clone)]
pub struct CentralitySet {
    pub results: Vec<CentralityResult>,
    pub failures: Vec<(MetricId, Error)>,
}

impl CentralitySet {
    pub fn get(&self, metric: MetricId) -> Option<&CentralityResult> {
        self.results.iter().find(|r| r.metric == metric)
    }

    /// All results, or a single error naming every failed metric.
    pub fn into_results(self) -> Result<Vec<CentralityResult>> {
        if self.failures.is_empty() {
            Ok(self.results)
        } else {
            Err(Error::Metrics(self.failures))
        }
    }
}

pub fn compute_all(g: &FaultGraph, config: &DirectionConfig) -> CentralitySet {
    compute_selected(g, config, &MetricId::ALL)
}

pub fn compute_selected(
    g: &FaultGraph,
    config: &DirectionConfig,
    metrics: &[MetricId],
) -> CentralitySet {
    let mut results = Vec::new();
    let mut failures = Vec::new();
    for &m in metrics {
        match compute_metric(g, m, config.get(m)) {
            Ok(r) => results.push(r),
            Err(e) => failures.push((m, e)),
        }
    }
    CentralitySet { results, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::load_edge_list;

    #[test]
    fn paper_mode_assignment() {
        let c = DirectionConfig::paper_mode();
        assert_eq!(c.get(MetricId::Indegree), Direction::Directed);
        assert_eq!(c.get(MetricId::Pagerank), Direction::Directed);
        for m in [
            MetricId::Betweenness,
            MetricId::Closeness,
            MetricId::Eigenvector,
            MetricId::Hub,
        ] {
            assert_eq!(c.get(m), Direction::Undirected);
        }
    }

    #[test]
    fn metric_names_parse() {
        for m in MetricId::ALL {
            assert_eq!(m.name().parse::<MetricId>(), Ok(m));
        }
        assert!("authority".parse::<MetricId>().is_err());
        assert_eq!("paper-mode".parse::<Preset>(), Ok(Preset::PaperMode));
    }

    #[test]
    fn edgeless_graph_reports_spectral_failures() {
        let g = FaultGraph::new([FaultId(1), FaultId(2), FaultId(3)], []).unwrap();
        let set = compute_all(&g, &DirectionConfig::paper_mode());
        let failed: Vec<MetricId> = set.failures.iter().map(|(m, _)| *m).collect();
        assert_eq!(failed, vec![MetricId::Eigenvector, MetricId::Hub]);
        for m in [
            MetricId::Indegree,
            MetricId::Closeness,
            MetricId::Betweenness,
        ] {
            assert!(set.get(m).unwrap().scores.values().all(|&s| s == 0.0));
        }
        let err = set.into_results().unwrap_err().to_string();
        assert!(err.contains("eigenvector") && err.contains("hub"), "{err}");
    }

    #[test]
    fn reversed_direction_swaps_lists() {
        let g = load_edge_list("2,1\n").unwrap();
        let o = Oriented::new(&g, Direction::Reversed);
        assert_eq!(o.out, vec![vec![1], vec![]]);
        assert_eq!(o.inc, vec![vec![], vec![0]]);
    }
}
