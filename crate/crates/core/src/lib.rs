//! Fault dependency networks for regression test prioritization.
//!
//! A [`FaultGraph`] records which faults depend on which. Six centrality
//! metrics are ranked and averaged into a leading score per fault; tests are
//! then ordered by the leading faults they reveal. Directed-modularity
//! communities guide percentage-budget selection, and APFDD scores how
//! quickly an ordering detects dependencies.
//!
//! ```
//! use faultrank_core::{fixtures, leading_table, prioritize, DirectionConfig, TestId};
//!
//! let g = fixtures::tarantula_graph();
//! let leading = leading_table(&g, &DirectionConfig::paper_mode()).unwrap();
//! let suite = prioritize(&fixtures::tarantula_exposure(), &leading).unwrap();
//! assert_eq!(&suite.order[..3], &[TestId(1), TestId(2), TestId(3)]);
//! ```

pub mod centrality;
pub mod community;
pub mod error;
pub mod evaluate;
pub mod fixtures;
pub mod graph;
pub mod ids;
pub mod prioritize;
pub mod ranking;

pub use centrality::{
    compute_all, compute_metric, CentralityResult, CentralitySet, Direction, DirectionConfig,
    MetricId, Preset,
};
pub use community::{
    community_of, directed_modularity, louvain, louvain_restarts, louvain_run, LouvainConfig,
    Partition,
};
pub use error::{Error, Result};
pub use evaluate::{
    apfdd, apfdd_with_rule, detection_table, random_baseline, random_baseline_with_rule,
    score_external_order, ApfddReport, DetectionRule, DetectionTable,
};
pub use graph::{
    giant_component, load_adjacency_matrix, load_edge_list, random_reference, structural_stats,
    weakly_connected_components, FaultGraph, RandomReference, StructuralStats,
};
pub use ids::{FaultId, TestId};
pub use prioritize::{
    load_exposure, prioritize, select_budget, BudgetSelection, ExposureMap, PrioritizedSuite,
};
pub use ranking::{
    leading_scores, rank_scores, rank_scores_with, top_k, LeadingScoreTable, RankTable, TieRule,
};

/// All six metrics under `config`, ranked competition-style and averaged.
pub fn leading_table(g: &FaultGraph, config: &DirectionConfig) -> Result<LeadingScoreTable> {
    leading_table_with(g, config, TieRule::Competition)
}

pub fn leading_table_with(
    g: &FaultGraph,
    config: &DirectionConfig,
    rule: TieRule,
) -> Result<LeadingScoreTable> {
    let results = compute_all(g, config).into_results()?;
    ranking::leading_from_results(&results, rule)
}
