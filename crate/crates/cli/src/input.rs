//! Reading graph, exposure and order files.

use std::fs;
use std::path::Path;

use anyhow::Context;
use faultrank_core::{
    load_adjacency_matrix, load_edge_list, load_exposure, ExposureMap, FaultGraph,
};

use crate::{Failure, GraphArgs, GraphFormat};

pub fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::input)
}

/// Matrix rows carry one cell per fault; edge-list lines never have more
/// than two.
fn looks_like_matrix(text: &str) -> bool {
    text.lines().any(|l| l.split(',').count() > 2)
}

pub fn graph(args: &GraphArgs) -> Result<FaultGraph, Failure> {
    let text = read(&args.graph)?;
    let matrix = match args.graph_format {
        GraphFormat::Matrix => true,
        GraphFormat::Edges => false,
        GraphFormat::Auto => looks_like_matrix(&text),
    };
    let parsed = if matrix {
        load_adjacency_matrix(&text)
    } else {
        load_edge_list(&text)
    };
    parsed
        .with_context(|| format!("invalid graph {}", args.graph.display()))
        .map_err(Failure::input)
}

pub fn exposure(path: &Path, g: &FaultGraph) -> Result<ExposureMap, Failure> {
    let text = read(path)?;
    load_exposure(&text, g)
        .with_context(|| format!("invalid exposure map {}", path.display()))
        .map_err(Failure::input)
}
