//! Exact degree, connectivity, clique and colouring quantities.
//!
//! Edge connectivity counts parallel edges as separate capacity. Vertex
//! connectivity, clique number and chromatic number are taken on the
//! underlying simple graph.

mod coloring;
mod connectivity;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

pub use coloring::{chromatic_number, clique_number, dsatur_coloring, maximum_clique};
pub use connectivity::{edge_connectivity, global_min_cut, local_vertex_connectivity, vertex_connectivity};

/// Node budget for the exact clique and colouring searches.
pub const DEFAULT_COLORING_BUDGET: u64 = 50_000_000;

pub fn min_degree(g: &MultiGraph) -> Result<u64> {
    g.degrees().into_iter().min().ok_or(Error::EmptyGraph)
}

pub fn degree_histogram(g: &MultiGraph) -> BTreeMap<u64, usize> {
    let mut hist = BTreeMap::new();
    for d in g.degrees() {
        *hist.entry(d).or_insert(0) += 1;
    }
    hist
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub min_degree: u64,
    pub degree_histogram: BTreeMap<u64, usize>,
    pub edge_connectivity: u64,
    pub vertex_connectivity: Option<usize>,
    pub chromatic_number: usize,
    pub clique_number: usize,
    pub graph_hash: String,
}

impl MetricsReport {
    pub fn compute(g: &MultiGraph, with_vertex_connectivity: bool, budget: u64) -> Result<Self> {
        Ok(MetricsReport {
            min_degree: min_degree(g)?,
            degree_histogram: degree_histogram(g),
            edge_connectivity: edge_connectivity(g)?,
            vertex_connectivity: if with_vertex_connectivity {
                Some(vertex_connectivity(g)?)
            } else {
                None
            },
            chromatic_number: chromatic_number(g, budget)?,
            clique_number: clique_number(g, budget)?,
            graph_hash: g.canonical_hash(),
        })
    }
}
