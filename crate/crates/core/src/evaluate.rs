//! APFDD: how quickly an ordering detects fault dependencies.
//!
//! A dependency edge counts as detected once the tests run so far have
//! revealed both of its faults (or only the dependent one, under
//! [`DetectionRule::DependentOnly`]). With `n` tests, `m` edges and
//! detection positions `p_e` (undetected edges take `n + 1`):
//!
//! ```text
//! APFDD = 100 * (1 - sum(p_e) / (n * m) + 1 / (2n))
//! ```
//!
//! which equals 100 times the area under the curve through the points
//! `(i/n, detected_i/m)`, `i = 0..=n`, when every edge is detected.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::FaultGraph;
use crate::ids::{FaultId, TestId};
use crate::prioritize::ExposureMap;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DetectionRule {
    #[default]
    BothEndpoints,
    DependentOnly,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeDetection {
    pub dependent: FaultId,
    pub leading: FaultId,
    /// 1-based position in the order, or `n + 1` when never detected.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DetectionTable {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<EdgeDetection>,
}

impl DetectionTable {
    pub fn undetected(&self) -> usize {
        self.edges.iter().filter(|e| e.position > self.n).count()
    }
}

pub fn detection_table(
    order: &[TestId],
    exposure: &ExposureMap,
    g: &FaultGraph,
    rule: DetectionRule,
) -> DetectionTable {
    let mut first_seen: BTreeMap<FaultId, usize> = BTreeMap::new();
    for (pos, test) in order.iter().enumerate() {
        for &f in exposure.faults_of(*test).into_iter().flatten() {
            first_seen.entry(f).or_insert(pos + 1);
        }
    }
    let n = order.len();
    let sentinel = n + 1;
    let seen = |f: FaultId| first_seen.get(&f).copied().unwrap_or(sentinel);
    let edges = g
        .edges()
        .map(|(dependent, leading)| EdgeDetection {
            dependent,
            leading,
            position: match rule {
                DetectionRule::BothEndpoints => seen(dependent).max(seen(leading)),
                DetectionRule::DependentOnly => seen(dependent),
            },
        })
        .collect();
    DetectionTable {
        n,
        m: g.edge_count(),
        edges,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApfddReport {
    pub apfdd: f64,
    pub undetected: usize,
    /// `(fraction_tests, fraction_dependencies)` after each executed test,
    /// starting at `(0, 0)`.
    pub curve: Vec<(f64, f64)>,
}

impl ApfddReport {
    /// 100 times the trapezoidal area under `curve`.
    pub fn curve_area(&self) -> f64 {
        100.0
            * self
                .curve
                .windows(2)
                .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0)
                .sum::<f64>()
    }

    pub fn curve_csv(&self) -> String {
        let mut out = String::from("fraction_tests,fraction_dependencies\n");
        for (x, y) in &self.curve {
            writeln!(out, "{x},{y}").unwrap();
        }
        out
    }
}

pub fn apfdd_from_table(table: &DetectionTable) -> Result<ApfddReport> {
    let (n, m) = (table.n, table.m);
    if m == 0 {
        return Err(Error::NoEdges("APFDD needs at least one dependency"));
    }
    if n == 0 {
        return Err(Error::InvalidParameter(
            "APFDD needs at least one test".into(),
        ));
    }
    let total: usize = table.edges.iter().map(|e| e.position).sum();
    let (nf, mf) = (n as f64, m as f64);
    let apfdd = 100.0 * (1.0 - total as f64 / (nf * mf) + 1.0 / (2.0 * nf));

    let mut detected_at = vec![0usize; n + 2];
    for e in &table.edges {
        detected_at[e.position] += 1;
    }
    let mut curve = Vec::with_capacity(n + 1);
    let mut cumulative = 0;
    curve.push((0.0, 0.0));
    for (i, &count) in detected_at.iter().enumerate().take(n + 1).skip(1) {
        cumulative += count;
        curve.push((i as f64 / nf, cumulative as f64 / mf));
    }
    Ok(ApfddReport {
        apfdd,
        undetected: table.undetected(),
        curve,
    })
}

pub fn apfdd(order: &[TestId], exposure: &ExposureMap, g: &FaultGraph) -> Result<ApfddReport> {
    apfdd_with_rule(order, exposure, g, DetectionRule::default())
}

pub fn apfdd_with_rule(
    order: &[TestId],
    exposure: &ExposureMap,
    g: &FaultGraph,
    rule: DetectionRule,
) -> Result<ApfddReport> {
    apfdd_from_table(&detection_table(order, exposure, g, rule))
}

/// Mean APFDD over `trials` uniformly shuffled orders of the suite.
///
/// Trial `t` shuffles with ChaCha stream `t` under `seed`; the mean is summed
/// in trial order, so the value does not depend on thread scheduling.
pub fn random_baseline(
    exposure: &ExposureMap,
    g: &FaultGraph,
    trials: usize,
    seed: u64,
) -> Result<f64> {
    random_baseline_with_rule(exposure, g, trials, seed, DetectionRule::default())
}

pub fn random_baseline_with_rule(
    exposure: &ExposureMap,
    g: &FaultGraph,
    trials: usize,
    seed: u64,
    rule: DetectionRule,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let suite: Vec<TestId> = exposure.tests().collect();
    let values: Vec<f64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t as u64);
            let mut order = suite.clone();
            order.shuffle(&mut rng);
            apfdd_with_rule(&order, exposure, g, rule).map(|r| r.apfdd)
        })
        .collect::<Result<_>>()?;
    Ok(values.iter().sum::<f64>() / trials as f64)
}

/// Reads one test id per line (blank lines and `#` comments skipped) and
/// checks it is a permutation of the suite.
pub fn parse_order(text: &str, exposure: &ExposureMap) -> Result<Vec<TestId>> {
    let mut order = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let id = line.parse::<TestId>().map_err(|message| Error::Parse {
            line: i + 1,
            message,
        })?;
        order.push(id);
    }
    check_permutation(&order, exposure)?;
    Ok(order)
}

pub fn check_permutation(order: &[TestId], exposure: &ExposureMap) -> Result<()> {
    let suite: BTreeSet<TestId> = exposure.tests().collect();
    let mut seen = BTreeSet::new();
    let mut duplicated = BTreeSet::new();
    let mut unknown = BTreeSet::new();
    for &t in order {
        if !seen.insert(t) {
            duplicated.insert(t);
        }
        if !suite.contains(&t) {
            unknown.insert(t);
        }
    }
    let missing: Vec<TestId> = suite.difference(&seen).copied().collect();
    if missing.is_empty() && duplicated.is_empty() && unknown.is_empty() {
        Ok(())
    } else {
        Err(Error::NotAPermutation {
            missing,
            duplicated: duplicated.into_iter().collect(),
            unknown: unknown.into_iter().collect(),
        })
    }
}

pub fn score_external_order(
    order_text: &str,
    exposure: &ExposureMap,
    g: &FaultGraph,
) -> Result<ApfddReport> {
    let order = parse_order(order_text, exposure)?;
    apfdd(&order, exposure, g)
}
