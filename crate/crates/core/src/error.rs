use thiserror::Error;

use crate::centrality::MetricId;
use crate::ids::{FaultId, TestId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("matrix is not square: {rows} rows but row {row} has {columns} entries")]
    NotSquare {
        rows: usize,
        row: usize,
        columns: usize,
    },

    #[error("cell (row {row}, column {column}): {message}")]
    InvalidCell {
        row: FaultId,
        column: FaultId,
        message: String,
    },

    #[error("fault {0} cannot depend on itself")]
    SelfLoop(FaultId),

    #[error("duplicate dependency {dependent} -> {leading}")]
    DuplicateEdge {
        dependent: FaultId,
        leading: FaultId,
    },

    #[error("duplicate fault id {0}")]
    DuplicateFault(FaultId),

    #[error("unknown fault {0}")]
    UnknownFault(FaultId),

    #[error("duplicate exposure {test} -> {fault}")]
    DuplicateExposure { test: TestId, fault: FaultId },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("{0}")]
    NoEdges(&'static str),

    #[error(
        "requested {edges} edges but a simple directed graph on {nodes} nodes holds at most {max}"
    )]
    TooManyEdges {
        nodes: usize,
        edges: usize,
        max: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("rank tables cover different fault sets")]
    MismatchedRankTables,

    #[error("fault {0} has no leading score")]
    MissingLeadingScore(FaultId),

    #[error(
        "order is not a permutation of the suite (missing: [{}], duplicated: [{}], unknown: [{}])",
        join(.missing), join(.duplicated), join(.unknown)
    )]
    NotAPermutation {
        missing: Vec<TestId>,
        duplicated: Vec<TestId>,
        unknown: Vec<TestId>,
    },

    #[error("{}", format_metric_failures(.0))]
    Metrics(Vec<(MetricId, Error)>),
}

fn join(ids: &[TestId]) -> String {
    ids.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn format_metric_failures(failures: &[(MetricId, Error)]) -> String {
    failures
        .iter()
        .map(|(metric, err)| format!("{metric}: {err}"))
        .collect::<Vec<_>>()
        .join("; ")
}
