//! One function per subcommand: load inputs, run the pipeline, render.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use faultrank_core::centrality::compute_selected;
use faultrank_core::evaluate::{apfdd_with_rule, parse_order, random_baseline_with_rule};
use faultrank_core::ranking::leading_from_results;
use faultrank_core::{
    giant_component, louvain_restarts, prioritize as order_suite, random_reference, select_budget,
    structural_stats, ApfddReport, BudgetSelection, CentralityResult, DirectionConfig, Error,
    ExposureMap, FaultGraph, FaultId, LeadingScoreTable, MetricId, Partition, PrioritizedSuite,
    RandomReference, StructuralStats, TestId, TieRule,
};
use serde::Serialize;

use crate::output::{emit, render, write_file};
use crate::{
    input, CommunityArgs, EvaluateArgs, Failure, LouvainArgs, PrioritizeArgs, RankArgs,
    RankingArgs, StatsArgs,
};

// ---- stats ----

#[derive(Debug, Serialize)]
pub struct SmallWorld {
    pub clustering_ratio: f64,
    pub path_length_ratio: f64,
    /// Clustering at least twice the random reference and path length at
    /// most one and a half times it.
    pub small_world: bool,
}

impl SmallWorld {
    pub fn compare(s: &StructuralStats, r: &RandomReference) -> Self {
        let ratio = |a: f64, b: f64| if b > 0.0 { a / b } else { f64::NAN };
        let clustering_ratio = ratio(s.global_clustering, r.mean_clustering);
        let path_length_ratio = ratio(s.undirected_path_length, r.mean_path_length);
        Self {
            clustering_ratio,
            path_length_ratio,
            small_world: clustering_ratio >= 2.0 && path_length_ratio <= 1.5,
        }
    }
}

#[derive(Debug, Serialize)]
struct StatsReport {
    giant_only: bool,
    stats: StructuralStats,
    random_reference: RandomReference,
    comparison: SmallWorld,
}

pub fn stats(args: &StatsArgs) -> Result<(), Failure> {
    let mut g = input::graph(&args.graph)?;
    if args.giant {
        g = giant_component(&g)?;
    }
    if g.is_empty() {
        return Err(Error::EmptyGraph.into());
    }
    let stats = structural_stats(&g);
    let random_reference = random_reference(&g, args.trials, args.seed.seed)?;
    let report = StatsReport {
        giant_only: args.giant,
        comparison: SmallWorld::compare(&stats, &random_reference),
        stats,
        random_reference,
    };
    let body = render(
        args.output.format,
        &report,
        || stats_text(&report),
        || stats_csv(&report),
    )?;
    emit(&args.output, &body)
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn stats_text(r: &StatsReport) -> String {
    let (s, rr, c) = (&r.stats, &r.random_reference, &r.comparison);
    let mut out = String::new();
    let scope = if r.giant_only {
        "giant component"
    } else {
        "whole graph"
    };
    writeln!(out, "scope                      {scope}").unwrap();
    writeln!(out, "nodes                      {}", s.node_count).unwrap();
    writeln!(out, "edges                      {}", s.edge_count).unwrap();
    writeln!(
        out,
        "weak components            {} (sizes {})",
        s.component_sizes.len(),
        join(&s.component_sizes, ", ")
    )
    .unwrap();
    writeln!(out, "average in-degree          {:.4}", s.avg_in_degree).unwrap();
    if s.path_length_defined {
        writeln!(
            out,
            "path length, directed      {:.4} over {} reachable pairs",
            s.avg_path_length, s.reachable_pairs
        )
        .unwrap();
    } else {
        writeln!(
            out,
            "path length, directed      undefined (no reachable pairs)"
        )
        .unwrap();
    }
    writeln!(
        out,
        "path length, undirected    {:.4}",
        s.undirected_path_length
    )
    .unwrap();
    writeln!(out, "clustering, undirected     {:.4}", s.global_clustering).unwrap();
    writeln!(
        out,
        "clustering, directed       {:.4}",
        s.directed_clustering
    )
    .unwrap();
    writeln!(
        out,
        "random reference           {} graphs, n={}, m={}, seed {}",
        rr.trials, rr.node_count, rr.edge_count, rr.seed
    )
    .unwrap();
    writeln!(out, "  path length, undirected  {:.4}", rr.mean_path_length).unwrap();
    writeln!(out, "  clustering, undirected   {:.4}", rr.mean_clustering).unwrap();
    writeln!(
        out,
        "  path length, directed    {:.4}",
        rr.mean_directed_path_length
    )
    .unwrap();
    writeln!(
        out,
        "  clustering, directed     {:.4}",
        rr.mean_directed_clustering
    )
    .unwrap();
    let verdict = if c.small_world {
        "small world"
    } else {
        "not small world"
    };
    writeln!(
        out,
        "{verdict}: clustering {:.2}x random, path length {:.2}x random",
        c.clustering_ratio, c.path_length_ratio
    )
    .unwrap();
    out
}

fn stats_csv(r: &StatsReport) -> String {
    let (s, rr) = (&r.stats, &r.random_reference);
    let rows: Vec<(&str, String)> = vec![
        ("nodes", s.node_count.to_string()),
        ("edges", s.edge_count.to_string()),
        ("avg_in_degree", s.avg_in_degree.to_string()),
        ("avg_path_length", s.avg_path_length.to_string()),
        ("reachable_pairs", s.reachable_pairs.to_string()),
        (
            "undirected_path_length",
            s.undirected_path_length.to_string(),
        ),
        ("global_clustering", s.global_clustering.to_string()),
        ("directed_clustering", s.directed_clustering.to_string()),
        ("random_path_length", rr.mean_path_length.to_string()),
        ("random_clustering", rr.mean_clustering.to_string()),
        (
            "random_directed_path_length",
            rr.mean_directed_path_length.to_string(),
        ),
        (
            "random_directed_clustering",
            rr.mean_directed_clustering.to_string(),
        ),
        ("small_world", r.comparison.small_world.to_string()),
    ];
    let mut out = String::from("metric,value\n");
    for (k, v) in rows {
        writeln!(out, "{k},{v}").unwrap();
    }
    out
}

// ---- rank ----

#[derive(Debug, Serialize)]
struct RankRow {
    fault: FaultId,
    score: f64,
    ranks: BTreeMap<MetricId, u32>,
}

#[derive(Debug, Serialize)]
struct RankReport {
    preset: String,
    ties: TieRule,
    metrics: Vec<MetricId>,
    entries: Vec<RankRow>,
    centralities: Vec<CentralityResult>,
}

/// Centralities and the leading table for `metrics` (all six when empty).
pub fn leading(
    g: &FaultGraph,
    ranking: &RankingArgs,
    metrics: &[MetricId],
) -> Result<(Vec<CentralityResult>, LeadingScoreTable), Failure> {
    let metrics = if metrics.is_empty() {
        &MetricId::ALL[..]
    } else {
        metrics
    };
    let config: DirectionConfig = ranking.preset.config();
    let results = compute_selected(g, &config, metrics).into_results()?;
    let table = leading_from_results(&results, ranking.ties)?;
    Ok((results, table))
}

pub fn rank(args: &RankArgs) -> Result<(), Failure> {
    let g = input::graph(&args.graph)?;
    if args.k == Some(0) {
        return Err(Failure::input(anyhow::anyhow!("--k must be at least 1")));
    }
    let (results, table) = leading(&g, &args.ranking, &args.metrics)?;
    let limit = args.k.unwrap_or(table.len());
    let report = RankReport {
        preset: args.ranking.preset.to_string(),
        ties: args.ranking.ties,
        metrics: table.metrics_used.clone(),
        entries: table
            .entries
            .iter()
            .take(limit)
            .map(|e| RankRow {
                fault: e.fault,
                score: e.score,
                ranks: table
                    .metrics_used
                    .iter()
                    .copied()
                    .zip(e.ranks.iter().copied())
                    .collect(),
            })
            .collect(),
        centralities: results,
    };
    let text_rows = args.k.unwrap_or(10);
    let body = render(
        args.output.format,
        &report,
        || rank_text(&report, text_rows),
        || rank_csv(&report),
    )?;
    emit(&args.output, &body)
}

fn rank_text(r: &RankReport, rows: usize) -> String {
    let mut out = String::new();
    writeln!(out, "preset {}, {} ranking", r.preset, r.ties).unwrap();
    write!(out, "{:<5} {:<6} {:>7}", "pos", "fault", "score").unwrap();
    for m in &r.metrics {
        write!(out, " {:>11}", m.name()).unwrap();
    }
    out.push('\n');
    for (i, row) in r.entries.iter().take(rows).enumerate() {
        write!(
            out,
            "{:<5} {:<6} {:>7.2}",
            i + 1,
            row.fault.to_string(),
            row.score
        )
        .unwrap();
        for m in &r.metrics {
            write!(out, " {:>11}", row.ranks[m]).unwrap();
        }
        out.push('\n');
    }
    for c in &r.centralities {
        if c.params.converged == Some(false) {
            writeln!(
                out,
                "note: {} ({}) did not converge in {} iterations",
                c.metric,
                c.direction,
                c.params.iterations.unwrap_or_default()
            )
            .unwrap();
        }
    }
    out
}

fn rank_csv(r: &RankReport) -> String {
    let mut out = String::from("fault");
    for m in &r.metrics {
        write!(out, ",{}", m.name()).unwrap();
    }
    out.push_str(",average\n");
    for row in &r.entries {
        write!(out, "{}", row.fault).unwrap();
        for m in &r.metrics {
            write!(out, ",{}", row.ranks[m]).unwrap();
        }
        writeln!(out, ",{}", row.score).unwrap();
    }
    out
}

// ---- communities ----

pub fn best_partition(
    g: &FaultGraph,
    louvain: &LouvainArgs,
    seed: u64,
) -> Result<(u64, Partition), Failure> {
    Ok(louvain_restarts(
        g,
        seed,
        louvain.restarts,
        louvain.resolution,
    )?)
}

pub fn communities(args: &CommunityArgs) -> Result<(), Failure> {
    let mut g = input::graph(&args.graph)?;
    if args.giant {
        g = giant_component(&g)?;
    }
    let (seed, p) = best_partition(&g, &args.louvain, args.seed.seed)?;
    let text = || {
        let mut out = String::new();
        writeln!(
            out,
            "Q = {:.4}, {} communities (best of {} runs, seed {seed})",
            p.q,
            p.community_count(),
            args.louvain.restarts
        )
        .unwrap();
        for (i, c) in p.communities().iter().enumerate() {
            writeln!(out, "community {i} ({}): {}", c.len(), join(c, " ")).unwrap();
        }
        out
    };
    let csv = || {
        let mut out = String::from("fault,community\n");
        for (f, c) in &p.assignment {
            writeln!(out, "{f},{c}").unwrap();
        }
        out
    };
    let body = render(args.output.format, &p, text, csv)?;
    emit(&args.output, &body)
}

// ---- prioritize ----

#[derive(Debug, Serialize)]
struct PrioritizeReport<'a> {
    #[serde(flatten)]
    suite: &'a PrioritizedSuite,
    #[serde(skip_serializing_if = "Option::is_none")]
    selection: Option<&'a BudgetSelection>,
}

fn check_budget(budget: f64) -> Result<(), Failure> {
    if budget > 0.0 && budget <= 100.0 {
        Ok(())
    } else {
        Err(Failure::input(anyhow::anyhow!(
            "--budget must lie in (0, 100], got {budget}"
        )))
    }
}

pub fn prioritize(args: &PrioritizeArgs) -> Result<(), Failure> {
    check_budget(args.budget)?;
    let g = input::graph(&args.graph)?;
    let exposure = input::exposure(&args.exposure, &g)?;
    let (_, table) = leading(&g, &args.ranking, &[])?;
    let suite = order_suite(&exposure, &table)?;
    let selection = if args.budget < 100.0 {
        let (_, p) = best_partition(&g, &args.louvain, args.seed.seed)?;
        Some(select_budget(
            &suite,
            &exposure,
            &p,
            &table,
            args.budget,
            args.anchors,
        )?)
    } else {
        None
    };
    let listed: &[TestId] = selection.as_ref().map_or(&suite.order, |s| &s.selected);
    let report = PrioritizeReport {
        suite: &suite,
        selection: selection.as_ref(),
    };
    let text = || listed.iter().map(|t| format!("{t}\n")).collect::<String>();
    let csv = || {
        let mut out = String::from("position,test,best_score,selected\n");
        for (i, t) in suite.order.iter().enumerate() {
            let best = suite.rationale[t];
            let best = if best.is_finite() {
                best.to_string()
            } else {
                String::new()
            };
            writeln!(out, "{},{t},{best},{}", i + 1, listed.contains(t)).unwrap();
        }
        out
    };
    let body = render(args.output.format, &report, text, csv)?;
    emit(&args.output, &body)
}

// ---- evaluate ----

#[derive(Debug, Serialize)]
pub struct Baseline {
    pub trials: usize,
    pub seed: u64,
    pub mean: f64,
}

#[derive(Debug, Serialize)]
struct EvaluateReport {
    order_source: String,
    order: Vec<TestId>,
    #[serde(flatten)]
    report: ApfddReport,
    random_baseline: Baseline,
}

pub fn computed_order(
    g: &FaultGraph,
    exposure: &ExposureMap,
    ranking: &RankingArgs,
) -> Result<Vec<TestId>, Failure> {
    let (_, table) = leading(g, ranking, &[])?;
    Ok(order_suite(exposure, &table)?.order)
}

pub fn evaluate(args: &EvaluateArgs) -> Result<(), Failure> {
    let g = input::graph(&args.graph)?;
    let exposure = input::exposure(&args.exposure, &g)?;
    let (order, order_source) = match &args.order_file {
        Some(path) => {
            let text = input::read(path)?;
            let order = parse_order(&text, &exposure).map_err(|e| {
                Failure::input(
                    anyhow::Error::new(e).context(format!("invalid order file {}", path.display())),
                )
            })?;
            (order, format!("file {}", path.display()))
        }
        None => (
            computed_order(&g, &exposure, &args.ranking)?,
            format!(
                "computed ({}, {} ties)",
                args.ranking.preset, args.ranking.ties
            ),
        ),
    };
    let rule = args.rule.into();
    let report = apfdd_with_rule(&order, &exposure, &g, rule)?;
    let mean = random_baseline_with_rule(&exposure, &g, args.trials, args.seed.seed, rule)?;
    if let Some(path) = &args.curve_out {
        write_file(path, &report.curve_csv())?;
    }
    let report = EvaluateReport {
        order_source,
        order,
        report,
        random_baseline: Baseline {
            trials: args.trials,
            seed: args.seed.seed,
            mean,
        },
    };
    let text = || {
        let r = &report;
        let mut out = String::new();
        writeln!(out, "order          {}", r.order_source).unwrap();
        writeln!(out, "apfdd          {:.2}", r.report.apfdd).unwrap();
        writeln!(out, "undetected     {}", r.report.undetected).unwrap();
        writeln!(
            out,
            "random mean    {:.2} ({} trials, seed {})",
            r.random_baseline.mean, r.random_baseline.trials, r.random_baseline.seed
        )
        .unwrap();
        writeln!(
            out,
            "margin         {:+.2}",
            r.report.apfdd - r.random_baseline.mean
        )
        .unwrap();
        out
    };
    let body = render(args.output.format, &report, text, || {
        report.report.curve_csv()
    })?;
    emit(&args.output, &body)
}
