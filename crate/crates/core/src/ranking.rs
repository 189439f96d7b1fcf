//! Tie-aware ranks per metric and their mean, the leading score.
//!
//! Ranks default to competition ordering (1, 2, 2, 4): a fault's rank is one
//! plus the number of faults with a strictly higher score. Dense ordering
//! (1, 2, 2, 3) is available through [`TieRule::Dense`]; on the bundled case
//! study it reproduces the published average ranks exactly. Scores within a
//! relative `1e-9` of the previous, sorted, score count as ties so that float
//! summation noise does not split faults that are symmetric in the graph.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::centrality::{CentralityResult, MetricId};
use crate::error::{Error, Result};
use crate::ids::FaultId;

pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TieRule {
    /// Next rank after a tie skips the tied positions: 1, 2, 2, 4.
    #[default]
    Competition,
    /// Next rank after a tie is one more: 1, 2, 2, 3.
    Dense,
}

impl std::fmt::Display for TieRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TieRule::Competition => "competition",
            TieRule::Dense => "dense",
        })
    }
}

impl std::str::FromStr for TieRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "competition" => Ok(TieRule::Competition),
            "dense" => Ok(TieRule::Dense),
            other => Err(format!("unknown tie rule `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankTable {
    pub metric: MetricId,
    pub ranks: BTreeMap<FaultId, u32>,
}

fn same_score(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

/// Competition ranks over raw scores, highest score first.
pub fn rank_values(scores: &BTreeMap<FaultId, f64>) -> BTreeMap<FaultId, u32> {
    rank_values_with(scores, TieRule::Competition)
}

pub fn rank_values_with(scores: &BTreeMap<FaultId, f64>, rule: TieRule) -> BTreeMap<FaultId, u32> {
    let mut sorted: Vec<(FaultId, f64)> = scores.iter().map(|(&k, &v)| (k, v)).collect();
    sorted.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut ranks = BTreeMap::new();
    let mut current = 1u32;
    for (pos, &(id, score)) in sorted.iter().enumerate() {
        if pos > 0 && !same_score(sorted[pos - 1].1, score) {
            current = match rule {
                TieRule::Competition => pos as u32 + 1,
                TieRule::Dense => current + 1,
            };
        }
        ranks.insert(id, current);
    }
    ranks
}

pub fn rank_scores(c: &CentralityResult) -> RankTable {
    rank_scores_with(c, TieRule::Competition)
}

pub fn rank_scores_with(c: &CentralityResult, rule: TieRule) -> RankTable {
    RankTable {
        metric: c.metric,
        ranks: rank_values_with(&c.scores, rule),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeadingEntry {
    pub fault: FaultId,
    /// Mean rank; lower is more leading.
    pub score: f64,
    /// Ranks in `metrics_used` order.
    pub ranks: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeadingScoreTable {
    pub metrics_used: Vec<MetricId>,
    /// Sorted ascending by score, ties by fault id.
    pub entries: Vec<LeadingEntry>,
}

impl LeadingScoreTable {
    pub fn score(&self, id: FaultId) -> Option<f64> {
        self.entries.iter().find(|e| e.fault == id).map(|e| e.score)
    }

    pub fn scores(&self) -> BTreeMap<FaultId, f64> {
        self.entries.iter().map(|e| (e.fault, e.score)).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn leading_scores(tables: &[RankTable]) -> Result<LeadingScoreTable> {
    let first = tables
        .first()
        .ok_or_else(|| Error::InvalidParameter("at least one rank table is required".into()))?;
    if tables
        .iter()
        .any(|t| t.ranks.len() != first.ranks.len() || !t.ranks.keys().eq(first.ranks.keys()))
    {
        return Err(Error::MismatchedRankTables);
    }
    let mut entries: Vec<LeadingEntry> = first
        .ranks
        .keys()
        .map(|&fault| {
            let ranks: Vec<u32> = tables.iter().map(|t| t.ranks[&fault]).collect();
            let score = ranks.iter().map(|&r| r as f64).sum::<f64>() / ranks.len() as f64;
            LeadingEntry {
                fault,
                score,
                ranks,
            }
        })
        .collect();
    entries.sort_by(|a, b| a.score.total_cmp(&b.score).then(a.fault.cmp(&b.fault)));
    Ok(LeadingScoreTable {
        metrics_used: tables.iter().map(|t| t.metric).collect(),
        entries,
    })
}

/// Ranks every result and averages them.
pub fn leading_from_results(
    results: &[CentralityResult],
    rule: TieRule,
) -> Result<LeadingScoreTable> {
    let tables: Vec<RankTable> = results.iter().map(|r| rank_scores_with(r, rule)).collect();
    leading_scores(&tables)
}

pub fn top_k(table: &LeadingScoreTable, k: usize) -> Result<Vec<FaultId>> {
    if k == 0 || k > table.len() {
        return Err(Error::InvalidParameter(format!(
            "k must lie in 1..={}, got {k}",
            table.len()
        )));
    }
    Ok(table.entries[..k].iter().map(|e| e.fault).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(i: u32) -> FaultId {
        FaultId(i)
    }

    fn table(metric: MetricId, ranks: &[(u32, u32)]) -> RankTable {
        RankTable {
            metric,
            ranks: ranks.iter().map(|&(id, r)| (f(id), r)).collect(),
        }
    }

    #[test]
    fn competition_ties() {
        let scores = BTreeMap::from([(f(1), 5.0), (f(2), 5.0), (f(3), 3.0)]);
        let ranks = rank_values(&scores);
        assert_eq!(ranks, BTreeMap::from([(f(1), 1), (f(2), 1), (f(3), 3)]));

        let scores = BTreeMap::from([
            (f(1), 1.0),
            (f(2), 4.0),
            (f(3), 4.0),
            (f(4), 4.0),
            (f(5), 0.5),
        ]);
        assert_eq!(
            rank_values(&scores).values().copied().collect::<Vec<_>>(),
            vec![4, 1, 1, 1, 5]
        );
    }

    #[test]
    fn dense_ties() {
        let scores = BTreeMap::from([(f(1), 5.0), (f(2), 5.0), (f(3), 3.0), (f(4), 1.0)]);
        let ranks = rank_values_with(&scores, TieRule::Dense);
        assert_eq!(
            ranks.values().copied().collect::<Vec<_>>(),
            vec![1, 1, 2, 3]
        );
    }

    #[test]
    fn float_noise_is_a_tie() {
        let scores = BTreeMap::from([(f(1), 0.1 + 0.2), (f(2), 0.3), (f(3), 0.2)]);
        let ranks = rank_values(&scores);
        assert_eq!(ranks[&f(1)], ranks[&f(2)]);
    }

    #[test]
    fn single_table_is_identity() {
        let t = table(MetricId::Indegree, &[(1, 1), (2, 3), (3, 2)]);
        let lead = leading_scores(std::slice::from_ref(&t)).unwrap();
        for (id, r) in &t.ranks {
            assert_eq!(lead.score(*id), Some(*r as f64));
        }
        assert_eq!(top_k(&lead, 3).unwrap(), vec![f(1), f(3), f(2)]);
    }

    #[test]
    fn averages_and_tie_break() {
        let a = table(MetricId::Indegree, &[(1, 1), (2, 2), (3, 3)]);
        let b = table(MetricId::Hub, &[(1, 3), (2, 2), (3, 1)]);
        let lead = leading_scores(&[a, b]).unwrap();
        assert!(lead.entries.iter().all(|e| e.score == 2.0));
        assert_eq!(top_k(&lead, 1).unwrap(), vec![f(1)]);
        assert_eq!(lead.metrics_used, vec![MetricId::Indegree, MetricId::Hub]);
    }

    #[test]
    fn rejects_mismatch_and_bad_k() {
        let a = table(MetricId::Indegree, &[(1, 1), (2, 2)]);
        let b = table(MetricId::Hub, &[(1, 1), (3, 2)]);
        assert_eq!(
            leading_scores(&[a.clone(), b]),
            Err(Error::MismatchedRankTables)
        );
        assert!(leading_scores(&[]).is_err());
        let lead = leading_scores(&[a]).unwrap();
        assert!(top_k(&lead, 0).is_err());
        assert!(top_k(&lead, 3).is_err());
    }
}
