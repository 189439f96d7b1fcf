//! `faultrank`: fault dependency analysis and test prioritization.
//!
//! Exit codes: 0 on success, 1 on internal errors, 2 on bad input.

mod commands;
mod demo;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand, ValueEnum};
use faultrank_core::{DetectionRule, MetricId, Preset, TieRule};

#[derive(Debug, Parser)]
#[command(
    name = "faultrank",
    version,
    about = "Rank leading faults and prioritize regression tests from a fault dependency network"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural statistics with a random-graph reference.
    Stats(StatsArgs),
    /// Six centralities, their ranks and the averaged leading score.
    Rank(RankArgs),
    /// Directed-modularity communities.
    Communities(CommunityArgs),
    /// Order the test suite by leading faults, optionally within a budget.
    Prioritize(PrioritizeArgs),
    /// APFDD of a computed or supplied order against a random baseline.
    Evaluate(EvaluateArgs),
    /// Run the bundled Tarantula case study end to end.
    Demo(DemoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// Matrix when any line has more than two cells, otherwise edge list.
    Auto,
    /// Square 0/1 adjacency matrix, rows are dependents.
    Matrix,
    /// `dependent,leading` pairs, one per line.
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    /// Both endpoint faults must have been revealed.
    Both,
    /// Revealing the dependent fault is enough.
    Dependent,
}

impl From<Rule> for DetectionRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Both => DetectionRule::BothEndpoints,
            Rule::Dependent => DetectionRule::DependentOnly,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// Fault graph file.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = GraphFormat::Auto)]
    pub graph_format: GraphFormat,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct RankingArgs {
    /// Direction preset for the centrality metrics.
    #[arg(
        long,
        default_value = "paper-mode",
        value_parser = PossibleValuesParser::new(["paper-mode", "strict-directed"])
            .map(|s| s.parse::<Preset>().expect("listed value"))
    )]
    pub preset: Preset,
    /// How tied scores share ranks.
    #[arg(
        long,
        default_value = "competition",
        value_parser = PossibleValuesParser::new(["competition", "dense"])
            .map(|s| s.parse::<TieRule>().expect("listed value"))
    )]
    pub ties: TieRule,
}

#[derive(Debug, Clone, Args)]
pub struct SeedArgs {
    /// Random seed.
    #[arg(long, env = "FAULTRANK_SEED", default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct StatsArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Analyse only the largest weakly connected component.
    #[arg(long)]
    pub giant: bool,
    /// Random graphs averaged for the reference.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[command(flatten)]
    pub seed: SeedArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub ranking: RankingArgs,
    /// Comma-separated subset of metrics to average.
    #[arg(
        long,
        value_delimiter = ',',
        value_parser = PossibleValuesParser::new(MetricId::ALL.map(MetricId::name))
            .map(|s| s.parse::<MetricId>().expect("listed value"))
    )]
    pub metrics: Vec<MetricId>,
    /// Rows to show; all faults when omitted (text shows 10).
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LouvainArgs {
    /// Seeded Louvain runs; the best partition is kept.
    #[arg(long, default_value_t = 10)]
    pub restarts: usize,
    /// Modularity resolution; above 1 favours smaller communities.
    #[arg(long, default_value_t = 1.0)]
    pub resolution: f64,
}

#[derive(Debug, Clone, Args)]
pub struct CommunityArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Partition only the largest weakly connected component.
    #[arg(long)]
    pub giant: bool,
    #[command(flatten)]
    pub louvain: LouvainArgs,
    #[command(flatten)]
    pub seed: SeedArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PrioritizeArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// `test,fault` exposure file.
    #[arg(long)]
    pub exposure: PathBuf,
    #[command(flatten)]
    pub ranking: RankingArgs,
    /// Percentage of the suite to select, in (0, 100].
    #[arg(long, default_value_t = 100.0)]
    pub budget: f64,
    /// Leading faults whose communities guide budget selection.
    #[arg(long, default_value_t = 1)]
    pub anchors: usize,
    #[command(flatten)]
    pub louvain: LouvainArgs,
    #[command(flatten)]
    pub seed: SeedArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct EvaluateArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// `test,fault` exposure file.
    #[arg(long)]
    pub exposure: PathBuf,
    /// Score this order (one test id per line) instead of the computed one.
    #[arg(long)]
    pub order_file: Option<PathBuf>,
    #[command(flatten)]
    pub ranking: RankingArgs,
    /// Random orders averaged for the baseline.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, value_enum, default_value_t = Rule::Both)]
    pub rule: Rule,
    /// Write the detection curve CSV here.
    #[arg(long)]
    pub curve_out: Option<PathBuf>,
    #[command(flatten)]
    pub seed: SeedArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DemoArgs {
    /// Random orders averaged for the APFDD baseline and random graphs for the reference.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    /// Seeded Louvain runs on the case-study graph.
    #[arg(long, default_value_t = 100)]
    pub restarts: usize,
    #[command(flatten)]
    pub seed: SeedArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// An error with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn input(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: 2,
            error: error.into(),
        }
    }

    pub fn internal(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: 1,
            error: error.into(),
        }
    }
}

impl From<faultrank_core::Error> for Failure {
    fn from(e: faultrank_core::Error) -> Self {
        Failure::input(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Stats(a) => commands::stats(&a),
        Command::Rank(a) => commands::rank(&a),
        Command::Communities(a) => commands::communities(&a),
        Command::Prioritize(a) => commands::prioritize(&a),
        Command::Evaluate(a) => commands::evaluate(&a),
        Command::Demo(a) => demo::run(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
