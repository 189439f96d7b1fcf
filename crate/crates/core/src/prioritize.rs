//! Test ordering from leading scores and community-guided budget selection.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Serialize, Serializer};

use crate::community::Partition;
use crate::error::{Error, Result};
use crate::graph::FaultGraph;
use crate::ids::{FaultId, TestId};
use crate::ranking::{top_k, LeadingScoreTable};

/// Faults revealed by each test case. Tests may reveal nothing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExposureMap {
    tests: BTreeMap<TestId, BTreeSet<FaultId>>,
}

impl ExposureMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert_test(&mut self, test: TestId) {
        self.tests.entry(test).or_default();
    }

    /// Returns false if the pair was already present.
    pub fn insert(&mut self, test: TestId, fault: FaultId) -> bool {
        self.tests.entry(test).or_default().insert(fault)
    }

    pub fn tests(&self) -> impl Iterator<Item = TestId> + '_ {
        self.tests.keys().copied()
    }

    pub fn faults_of(&self, test: TestId) -> Option<&BTreeSet<FaultId>> {
        self.tests.get(&test)
    }

    pub fn iter(&self) -> impl Iterator<Item = (TestId, &BTreeSet<FaultId>)> {
        self.tests.iter().map(|(&t, f)| (t, f))
    }

    pub fn len(&self) -> usize {
        self.tests.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tests.is_empty()
    }

    pub fn reference_count(&self) -> usize {
        self.tests.values().map(BTreeSet::len).sum()
    }

    pub fn check_against(&self, g: &FaultGraph) -> Result<()> {
        for faults in self.tests.values() {
            if let Some(&f) = faults.iter().find(|f| !g.contains(**f)) {
                return Err(Error::UnknownFault(f));
            }
        }
        Ok(())
    }
}

/// Parses `test_id,fault_id` lines without checking fault ids against a
/// graph. `test_id,` declares a test that revealed nothing.
pub fn parse_exposure(text: &str) -> Result<ExposureMap> {
    let mut map = ExposureMap::new();
    for (k, (line, raw)) in text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .enumerate()
    {
        let cells: Vec<&str> = raw.split(',').map(str::trim).collect();
        let parse_err = |message: String| Error::Parse { line, message };
        if k == 0
            && cells[0].parse::<TestId>().is_err()
            && cells[0]
                .chars()
                .all(|c| c.is_ascii_alphabetic() || c == '_')
        {
            continue;
        }
        let (test, fault) = match cells.as_slice() {
            [t] | [t, ""] => (t.parse::<TestId>().map_err(parse_err)?, None),
            [t, f] => (
                t.parse::<TestId>().map_err(parse_err)?,
                Some(f.parse::<FaultId>().map_err(parse_err)?),
            ),
            _ => {
                return Err(parse_err(format!(
                    "expected `test,fault`, got {} fields",
                    cells.len()
                )))
            }
        };
        match fault {
            None => map.insert_test(test),
            Some(fault) => {
                if !map.insert(test, fault) {
                    return Err(Error::DuplicateExposure { test, fault });
                }
            }
        }
    }
    Ok(map)
}

/// Parses an exposure file and checks every fault exists in `g`.
pub fn load_exposure(text: &str, g: &FaultGraph) -> Result<ExposureMap> {
    let map = parse_exposure(text)?;
    map.check_against(g)?;
    Ok(map)
}

fn finite_or_null<S: Serializer>(
    map: &BTreeMap<TestId, f64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_map(
        map.iter()
            .map(|(t, v)| (t.get(), if v.is_finite() { Some(*v) } else { None })),
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrioritizedSuite {
    pub order: Vec<TestId>,
    /// Best (lowest) leading score among each test's faults; infinite for
    /// tests that revealed nothing, serialised as `null`.
    #[serde(serialize_with = "finite_or_null")]
    pub rationale: BTreeMap<TestId, f64>,
}

/// Orders tests by the best leading score among their faults, then by the
/// second best, and so on down each test's sorted scores (a test with fewer
/// faults counts as `+inf` past its last one), then by id. Tests without
/// faults come last in id order.
///
/// Comparing whole score lists rather than the first two keeps the order
/// monotone: improving a fault's score never moves a test revealing it later.
pub fn prioritize(exposure: &ExposureMap, leading: &LeadingScoreTable) -> Result<PrioritizedSuite> {
    let scores = leading.scores();
    let mut keyed = Vec::with_capacity(exposure.len());
    let mut rationale = BTreeMap::new();
    for (test, faults) in exposure.iter() {
        let mut s: Vec<f64> = faults
            .iter()
            .map(|f| scores.get(f).copied().ok_or(Error::MissingLeadingScore(*f)))
            .collect::<Result<_>>()?;
        s.sort_by(f64::total_cmp);
        rationale.insert(test, s.first().copied().unwrap_or(f64::INFINITY));
        keyed.push((s, test));
    }
    keyed.sort_by(|a, b| compare_scores(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(PrioritizedSuite {
        order: keyed.into_iter().map(|k| k.1).collect(),
        rationale,
    })
}

/// Lexicographic on ascending score lists padded with `+inf`.
fn compare_scores(a: &[f64], b: &[f64]) -> Ordering {
    let pad = |s: &[f64], i: usize| s.get(i).copied().unwrap_or(f64::INFINITY);
    (0..a.len().max(b.len()))
        .map(|i| pad(a, i).total_cmp(&pad(b, i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BudgetSelection {
    pub selected: Vec<TestId>,
    pub budget_percent: f64,
    pub anchors: Vec<FaultId>,
    pub communities_used: Vec<usize>,
    /// Faults revealed by the selected tests.
    pub covered_faults: BTreeSet<FaultId>,
    /// Faults in the anchors' communities.
    pub community_faults: BTreeSet<FaultId>,
    /// Tests revealing at least one community fault.
    pub community_tests: usize,
}

/// Number of tests a percentage budget admits (ceiling, at least one for any
/// positive budget on a nonempty suite).
pub fn budget_size(budget_percent: f64, suite_size: usize) -> usize {
    let exact = budget_percent / 100.0 * suite_size as f64;
    // Guard against 0.07 * 100 style rounding pushing the ceiling up.
    ((exact - 1e-9).ceil().max(0.0) as usize).min(suite_size)
}

/// Takes the `anchor_count` most leading faults, gathers their communities,
/// and fills the budget from prioritized tests revealing any of those faults
/// before falling back to the rest of the prioritized order.
pub fn select_budget(
    suite: &PrioritizedSuite,
    exposure: &ExposureMap,
    partition: &Partition,
    leading: &LeadingScoreTable,
    budget_percent: f64,
    anchor_count: usize,
) -> Result<BudgetSelection> {
    if !(budget_percent > 0.0 && budget_percent <= 100.0) {
        return Err(Error::InvalidParameter(format!(
            "budget must lie in (0, 100], got {budget_percent}"
        )));
    }
    let size = budget_size(budget_percent, suite.order.len());
    if size == 0 {
        return Err(Error::InvalidParameter("budget selects no tests".into()));
    }
    let anchors = top_k(leading, anchor_count)?;
    let communities_used: BTreeSet<usize> = anchors
        .iter()
        .map(|f| {
            partition
                .assignment
                .get(f)
                .copied()
                .ok_or(Error::UnknownFault(*f))
        })
        .collect::<Result<_>>()?;
    let community_faults: BTreeSet<FaultId> = partition
        .assignment
        .iter()
        .filter(|(_, c)| communities_used.contains(c))
        .map(|(&f, _)| f)
        .collect();

    let empty = BTreeSet::new();
    let hits = |t: &TestId| {
        exposure
            .faults_of(*t)
            .unwrap_or(&empty)
            .iter()
            .any(|f| community_faults.contains(f))
    };
    let (primary, rest): (Vec<TestId>, Vec<TestId>) = suite.order.iter().partition(|t| hits(t));
    let community_tests = primary.len();
    let chosen: BTreeSet<TestId> = primary.iter().chain(&rest).take(size).copied().collect();
    // Emit in prioritized order.
    let selected: Vec<TestId> = suite
        .order
        .iter()
        .copied()
        .filter(|t| chosen.contains(t))
        .collect();
    let covered_faults = selected
        .iter()
        .flat_map(|t| exposure.faults_of(*t).into_iter().flatten().copied())
        .collect();

    Ok(BudgetSelection {
        selected,
        budget_percent,
        anchors,
        communities_used: communities_used.into_iter().collect(),
        covered_faults,
        community_faults,
        community_tests,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::MetricId;
    use crate::ranking::LeadingEntry;

    fn t(i: u32) -> TestId {
        TestId(i)
    }
    fn f(i: u32) -> FaultId {
        FaultId(i)
    }

    fn leading(scores: &[(u32, f64)]) -> LeadingScoreTable {
        let mut entries: Vec<LeadingEntry> = scores
            .iter()
            .map(|&(id, score)| LeadingEntry {
                fault: f(id),
                score,
                ranks: vec![],
            })
            .collect();
        entries.sort_by(|a, b| a.score.total_cmp(&b.score).then(a.fault.cmp(&b.fault)));
        LeadingScoreTable {
            metrics_used: vec![MetricId::Indegree],
            entries,
        }
    }

    #[test]
    fn ties_fall_through_to_later_scores() {
        let e = parse_exposure("T1,1\nT1,2\nT2,1\nT2,2\nT2,3\n").unwrap();
        let suite = prioritize(&e, &leading(&[(1, 1.0), (2, 2.0), (3, 2.5)])).unwrap();
        assert_eq!(suite.order, vec![t(2), t(1)]);
    }

    #[test]
    fn parses_exposure_lines() {
        let m = parse_exposure("test,fault\nT1,F1\nT2,2\nT2,F3\n4,\n").unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m.reference_count(), 3);
        assert!(m.faults_of(t(4)).unwrap().is_empty());
        assert!(parse_exposure("").unwrap().is_empty());
        assert_eq!(
            parse_exposure("T1,F1\nT1,F1\n"),
            Err(Error::DuplicateExposure {
                test: t(1),
                fault: f(1)
            })
        );
        assert!(matches!(
            parse_exposure("T1,F1,F2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_exposure("T1,F1\nX,F1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn referential_integrity() {
        let g = FaultGraph::new([f(1), f(2)], [(f(2), f(1))]).unwrap();
        assert_eq!(
            load_exposure("T5,F99\n", &g),
            Err(Error::UnknownFault(f(99)))
        );
        assert!(load_exposure("T5,F2\n", &g).is_ok());
    }

    #[test]
    fn ordering_rules() {
        let e = parse_exposure("T1,F3\nT2,F1\nT2,F4\nT3,F1\nT3,F2\nT4,\nT5,F2\n").unwrap();
        let l = leading(&[(1, 1.0), (2, 2.0), (3, 3.0), (4, 4.0)]);
        let p = prioritize(&e, &l).unwrap();
        assert_eq!(p.order, vec![t(3), t(2), t(5), t(1), t(4)]);
        assert_eq!(p.rationale[&t(4)], f64::INFINITY);
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains(r#""4":null"#), "{json}");
    }

    #[test]
    fn fault_free_suite_keeps_id_order() {
        let e = parse_exposure("T3,\nT1,\nT2,\n").unwrap();
        let p = prioritize(&e, &leading(&[(1, 1.0)])).unwrap();
        assert_eq!(p.order, vec![t(1), t(2), t(3)]);
    }

    #[test]
    fn missing_leading_score_is_reported() {
        let e = parse_exposure("T1,F9\n").unwrap();
        assert_eq!(
            prioritize(&e, &leading(&[(1, 1.0)])),
            Err(Error::MissingLeadingScore(f(9)))
        );
    }

    #[test]
    fn budget_ceiling() {
        assert_eq!(budget_size(50.0, 16), 8);
        assert_eq!(budget_size(100.0, 16), 16);
        assert_eq!(budget_size(1.0, 16), 1);
        assert_eq!(budget_size(7.0, 100), 7);
        assert_eq!(budget_size(43.75, 16), 7);
        assert_eq!(budget_size(44.0, 16), 8);
    }

    #[test]
    fn singleton_anchor_selects_its_test() {
        let g = FaultGraph::new([f(1), f(2), f(3)], [(f(3), f(2))]).unwrap();
        let e = parse_exposure("T1,F2\nT2,F1\nT3,F3\n").unwrap();
        let l = leading(&[(1, 1.0), (2, 2.0), (3, 3.0)]);
        let partition =
            Partition::from_assignment(&g, &BTreeMap::from([(f(1), 5), (f(2), 6), (f(3), 6)]))
                .unwrap();
        let suite = prioritize(&e, &l).unwrap();
        let sel = select_budget(&suite, &e, &partition, &l, 100.0 / 3.0, 1).unwrap();
        assert_eq!(sel.selected, vec![t(2)]);
        assert_eq!(sel.community_faults, BTreeSet::from([f(1)]));

        let full = select_budget(&suite, &e, &partition, &l, 100.0, 1).unwrap();
        assert_eq!(full.selected, suite.order);

        assert!(select_budget(&suite, &e, &partition, &l, 0.0, 1).is_err());
        assert!(select_budget(&suite, &e, &partition, &l, 120.0, 1).is_err());
    }
}
