//! Layer-level structure: strongly connected components, path statistics,
//! degree assortativity, structural equivalence and wedge closure.

mod assortativity;
mod equivalence;
mod paths;
mod scc;
mod wedges;

pub use assortativity::{assortativity, directed_assortativity, DirectedAssortativity};
pub use equivalence::{group_by_metrics, structural_equivalence, DegreeFilter, EquivalenceClass};
pub use paths::{path_stats, PathStats};
pub use scc::{induced_edge_count, largest_component, strongly_connected_components, Component};
pub use wedges::{wedge_closure, ClosureStat, WedgeReport};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, LayerView, NodeId};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructureError {
    #[error("node set is not strongly connected: no path {from} -> {to}")]
    NotStronglyConnected { from: NodeId, to: NodeId },
    #[error("assortativity needs at least two edges, layer has {0}")]
    TooFewEdges(usize),
    #[error("all edge endpoints have the same degree; assortativity is undefined")]
    DegenerateVariance,
    #[error("tolerance must be a finite non-negative number, got {0}")]
    InvalidTolerance(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One row of the per-layer structure table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerSummary {
    pub layer: String,
    pub n_nodes: usize,
    pub n_edges: usize,
    /// `|E| / |V|`: the mean out-degree, equal to the mean in-degree.
    pub avg_total_degree: f64,
    /// Undirected-projection assortativity; `None` when undefined.
    pub assortativity: Option<f64>,
    pub scc_nodes: usize,
    pub scc_edges: usize,
    pub avg_path: f64,
    pub diameter: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub directed_assortativity: Option<DirectedAssortativity>,
}

/// Assembles a [`LayerSummary`]; path statistics are measured on the
/// largest SCC.
pub fn layer_summary(v: &LayerView) -> LayerSummary {
    let n = v.node_count();
    let e = v.edge_count();
    let largest = largest_component(v);
    let paths = path_stats(v, &largest.nodes).expect("an SCC is strongly connected");
    LayerSummary {
        layer: v.name().to_owned(),
        n_nodes: n,
        n_edges: e,
        avg_total_degree: if n == 0 { 0.0 } else { e as f64 / n as f64 },
        assortativity: assortativity(v).ok(),
        scc_nodes: largest.nodes.len(),
        scc_edges: largest.edges,
        avg_path: paths.avg_path,
        diameter: paths.diameter,
        directed_assortativity: None,
    }
}

/// [`layer_summary`] plus the four directed assortativity variants.
pub fn layer_summary_verbose(v: &LayerView) -> LayerSummary {
    LayerSummary { directed_assortativity: Some(directed_assortativity(v)), ..layer_summary(v) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_summary() {
        let v = LayerView::from_pairs("c", 3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let s = layer_summary(&v);
        assert_eq!((s.n_nodes, s.n_edges, s.scc_nodes, s.scc_edges, s.diameter), (3, 3, 3, 3, 2));
        assert_eq!(s.avg_total_degree, 1.0);
        assert_eq!(s.avg_path, 1.5);
        assert_eq!(s.assortativity, None);
    }

    #[test]
    fn empty_summary() {
        let s = layer_summary(&LayerView::from_pairs("e", 5, &[]).unwrap());
        assert_eq!((s.n_edges, s.scc_nodes, s.scc_edges, s.diameter), (0, 1, 0, 0));
        assert_eq!((s.avg_path, s.avg_total_degree), (0.0, 0.0));
    }

    #[test]
    fn tot_degree_is_edges_per_node() {
        // 153 nodes and 1487 edges give 9.719 to three decimals
        assert_eq!(format!("{:.3}", 1487.0_f64 / 153.0), "9.719");
        let v = LayerView::from_pairs("p", 4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = layer_summary(&v);
        assert_eq!(s.avg_total_degree * s.n_nodes as f64, s.n_edges as f64);
    }
}
