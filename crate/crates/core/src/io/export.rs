//! Canonical JSON serialization of a whole multiplex graph: node labels
//! sorted, each layer's edges sorted by (source, target) label.

use serde::{Deserialize, Serialize};

use super::ExportError;
use crate::graph::{build_graph, LayerKind, LayerSpec, MultiplexGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExportLayer {
    pub name: String,
    pub kind: LayerKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constituents: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphExport {
    pub nodes: Vec<String>,
    pub layers: Vec<ExportLayer>,
}

impl GraphExport {
    pub fn from_graph(g: &MultiplexGraph) -> Self {
        let mut nodes = g.labels().to_vec();
        nodes.sort();
        let layers = g
            .layer_specs()
            .map(|spec| ExportLayer {
                name: spec.name.clone(),
                kind: spec.kind,
                constituents: spec.constituents.clone(),
                edges: g
                    .labeled_edges(&spec.name)
                    .expect("declared layer")
                    .into_iter()
                    .map(|(s, t)| (s.to_owned(), t.to_owned()))
                    .collect(),
            })
            .collect();
        GraphExport { nodes, layers }
    }

    /// Rebuilds the graph from basic-layer edges and checks that every
    /// aggregate's listed edges equal the union of its constituents.
    pub fn into_graph(self) -> Result<MultiplexGraph, ExportError> {
        let specs: Vec<LayerSpec> = self
            .layers
            .iter()
            .map(|l| LayerSpec { name: l.name.clone(), kind: l.kind, constituents: l.constituents.clone() })
            .collect();
        let edges = self
            .layers
            .iter()
            .filter(|l| l.kind == LayerKind::Basic)
            .flat_map(|l| l.edges.iter().map(move |(s, t)| (s.as_str(), t.as_str(), l.name.as_str())));
        let g = build_graph(self.nodes.iter().cloned(), &specs, edges)?;
        for layer in &self.layers {
            let mut listed: Vec<(&str, &str)> = layer.edges.iter().map(|(s, t)| (s.as_str(), t.as_str())).collect();
            listed.sort_unstable();
            listed.dedup();
            if listed.len() != layer.edges.len() || g.labeled_edges(&layer.name)? != listed {
                return Err(ExportError::LayerMismatch(layer.name.clone()));
            }
        }
        Ok(g)
    }
}

pub fn to_canonical_json(g: &MultiplexGraph) -> String {
    let mut s = serde_json::to_string_pretty(&GraphExport::from_graph(g)).expect("export serializes");
    s.push('\n');
    s
}

pub fn from_canonical_json(text: &str) -> Result<MultiplexGraph, ExportError> {
    let export: GraphExport = serde_json::from_str(text).map_err(|e| ExportError::Json(e.to_string()))?;
    export.into_graph()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> MultiplexGraph {
        build_graph(
            ["c", "a", "b"],
            &[LayerSpec::basic("x"), LayerSpec::basic("y"), LayerSpec::aggregate("xy", ["x", "y"])],
            [("c", "a", "x"), ("a", "b", "y"), ("a", "c", "x"), ("a", "b", "x")],
        )
        .unwrap()
    }

    #[test]
    fn sorted_output() {
        let export = GraphExport::from_graph(&sample());
        assert_eq!(export.nodes, vec!["a", "b", "c"]);
        let x: Vec<(&str, &str)> = export.layers[0].edges.iter().map(|(s, t)| (s.as_str(), t.as_str())).collect();
        assert_eq!(x, vec![("a", "b"), ("a", "c"), ("c", "a")]);
    }

    #[test]
    fn round_trip_preserves_layers() {
        let g = sample();
        let back = from_canonical_json(&to_canonical_json(&g)).unwrap();
        for name in g.layer_names() {
            assert_eq!(back.labeled_edges(name).unwrap(), g.labeled_edges(name).unwrap());
        }
        assert_eq!(to_canonical_json(&back), to_canonical_json(&g));
    }

    #[test]
    fn tampered_aggregate_rejected() {
        let mut export = GraphExport::from_graph(&sample());
        export.layers[2].edges.pop();
        assert_eq!(export.into_graph().unwrap_err(), ExportError::LayerMismatch("xy".into()));
    }
}
