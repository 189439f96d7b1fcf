//! The bundled Tarantula case study: 23 faults, 16 fault-revealing tests.

use crate::graph::{load_adjacency_matrix, FaultGraph};
use crate::ids::TestId;
use crate::prioritize::{load_exposure, ExposureMap};

pub const TARANTULA_MATRIX: &str = include_str!("../data/tarantula_matrix.csv");
pub const TARANTULA_EXPOSURE: &str = include_str!("../data/tarantula_exposure.csv");
/// The ordering published for the case study, one test per line.
pub const TARANTULA_PUBLISHED_ORDER: &str = include_str!("../data/tarantula_published_order.txt");

pub fn tarantula_graph() -> FaultGraph {
    load_adjacency_matrix(TARANTULA_MATRIX).expect("bundled matrix is valid")
}

pub fn tarantula_exposure() -> ExposureMap {
    load_exposure(TARANTULA_EXPOSURE, &tarantula_graph()).expect("bundled exposure is valid")
}

pub fn tarantula_published_order() -> Vec<TestId> {
    TARANTULA_PUBLISHED_ORDER
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.parse().expect("bundled order is valid"))
        .collect()
}
