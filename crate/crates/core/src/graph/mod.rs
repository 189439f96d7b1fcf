//! Directed fault-dependency graph.
//!
//! An edge `dependent -> leading` means the dependent fault cannot be removed
//! before the leading one. Nodes are kept sorted by id, so internal indices,
//! adjacency lists and every derived output are independent of the order in
//! which faults were declared.

mod io;
mod stats;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::ids::FaultId;

pub use io::{load_adjacency_matrix, load_edge_list, to_adjacency_csv, to_edge_list_csv};
pub(crate) use stats::bfs_distances;
pub use stats::{
    edge_concentration, giant_component, local_clustering, random_directed_graph, random_reference,
    random_reference_sized, structural_stats, weakly_connected_components, EdgeConcentration,
    RandomReference, StructuralStats,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaultGraph {
    nodes: Vec<FaultId>,
    index: BTreeMap<FaultId, usize>,
    edges: BTreeSet<(FaultId, FaultId)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl FaultGraph {
    /// Builds a graph, rejecting self-dependencies, duplicate edges and edges
    /// that mention faults missing from `nodes`.
    pub fn new(
        nodes: impl IntoIterator<Item = FaultId>,
        edges: impl IntoIterator<Item = (FaultId, FaultId)>,
    ) -> Result<Self> {
        let mut node_set = BTreeSet::new();
        for id in nodes {
            if !node_set.insert(id) {
                return Err(Error::DuplicateFault(id));
            }
        }
        let nodes: Vec<FaultId> = node_set.into_iter().collect();
        let index: BTreeMap<FaultId, usize> =
            nodes.iter().enumerate().map(|(i, &id)| (id, i)).collect();

        let mut edge_set = BTreeSet::new();
        for (dependent, leading) in edges {
            if dependent == leading {
                return Err(Error::SelfLoop(dependent));
            }
            for id in [dependent, leading] {
                if !index.contains_key(&id) {
                    return Err(Error::UnknownFault(id));
                }
            }
            if !edge_set.insert((dependent, leading)) {
                return Err(Error::DuplicateEdge { dependent, leading });
            }
        }

        let mut out_adj = vec![Vec::new(); nodes.len()];
        let mut in_adj = vec![Vec::new(); nodes.len()];
        // BTreeSet iteration keeps both adjacency lists sorted.
        for (dependent, leading) in &edge_set {
            let (u, v) = (index[dependent], index[leading]);
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }

        Ok(Self {
            nodes,
            index,
            edges: edge_set,
            out_adj,
            in_adj,
        })
    }

    /// Builds a graph whose nodes are exactly the faults mentioned by `edges`.
    pub fn from_edges(edges: impl IntoIterator<Item = (FaultId, FaultId)>) -> Result<Self> {
        let edges: Vec<_> = edges.into_iter().collect();
        let nodes: BTreeSet<FaultId> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        Self::new(nodes, edges)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Fault ids in ascending order; position in this slice is the node index.
    pub fn nodes(&self) -> &[FaultId] {
        &self.nodes
    }

    /// Edges as `(dependent, leading)` pairs in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (FaultId, FaultId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains(&self, id: FaultId) -> bool {
        self.index.contains_key(&id)
    }

    pub fn has_edge(&self, dependent: FaultId, leading: FaultId) -> bool {
        self.edges.contains(&(dependent, leading))
    }

    pub fn index_of(&self, id: FaultId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    /// Indices of the faults `i` depends on (its leading faults).
    pub fn successors(&self, i: usize) -> &[usize] {
        &self.out_adj[i]
    }

    /// Indices of the faults depending on `i`.
    pub fn predecessors(&self, i: usize) -> &[usize] {
        &self.in_adj[i]
    }

    pub fn out_degree(&self, i: usize) -> usize {
        self.out_adj[i].len()
    }

    pub fn in_degree(&self, i: usize) -> usize {
        self.in_adj[i].len()
    }

    /// Sorted, deduplicated neighbor indices ignoring direction.
    pub fn undirected_neighbors(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.out_adj[i].len() + self.in_adj[i].len());
        let (a, b) = (&self.out_adj[i], &self.in_adj[i]);
        let (mut x, mut y) = (0, 0);
        while x < a.len() || y < b.len() {
            let next = match (a.get(x), b.get(y)) {
                (Some(&p), Some(&q)) if p == q => {
                    x += 1;
                    y += 1;
                    p
                }
                (Some(&p), Some(&q)) if p < q => {
                    x += 1;
                    p
                }
                (Some(_), Some(&q)) => {
                    y += 1;
                    q
                }
                (Some(&p), None) => {
                    x += 1;
                    p
                }
                (None, Some(&q)) => {
                    y += 1;
                    q
                }
                (None, None) => unreachable!(),
            };
            out.push(next);
        }
        out
    }

    /// Row = dependent, column = leading.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.node_count();
        let mut m = vec![vec![0u8; n]; n];
        for (u, succ) in self.out_adj.iter().enumerate() {
            for &v in succ {
                m[u][v] = 1;
            }
        }
        m
    }

    /// Subgraph induced by `keep`; ids outside the graph are ignored.
    pub fn induced_subgraph(&self, keep: &BTreeSet<FaultId>) -> FaultGraph {
        let nodes: Vec<FaultId> = self
            .nodes
            .iter()
            .copied()
            .filter(|id| keep.contains(id))
            .collect();
        let edges: Vec<(FaultId, FaultId)> = self
            .edges
            .iter()
            .copied()
            .filter(|(a, b)| keep.contains(a) && keep.contains(b))
            .collect();
        FaultGraph::new(nodes, edges).expect("induced subgraph of a valid graph is valid")
    }
}
