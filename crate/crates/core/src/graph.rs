//! Multiplex directed graph: a shared node registry plus named basic layers
//! and edge-union aggregate layers.
//!
//! Every layer is materialized as a [`LayerView`] at build time. Views are
//! immutable and hold sorted successor and predecessor lists, so neighbor
//! sets can be intersected with a linear merge.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense node index, contiguous in `0..n` in node-list order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for NodeId {
    fn from(i: usize) -> Self {
        NodeId(u32::try_from(i).expect("node index exceeds u32"))
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LayerKind {
    Basic,
    Aggregate,
}

/// Declaration of one layer. Aggregates name the basic layers whose edge
/// sets they union; a single constituent is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LayerSpec {
    pub name: String,
    pub kind: LayerKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constituents: Vec<String>,
}

impl LayerSpec {
    pub fn basic(name: impl Into<String>) -> Self {
        LayerSpec { name: name.into(), kind: LayerKind::Basic, constituents: Vec::new() }
    }

    pub fn aggregate<I, S>(name: impl Into<String>, constituents: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        LayerSpec {
            name: name.into(),
            kind: LayerKind::Aggregate,
            constituents: constituents.into_iter().map(Into::into).collect(),
        }
    }

    pub fn is_basic(&self) -> bool {
        self.kind == LayerKind::Basic
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown node {label:?}{}", .record.map(|r| format!(" (edge record {r})")).unwrap_or_default())]
    UnknownNode { label: String, record: Option<usize> },
    #[error("node id {0} is out of range")]
    NodeOutOfRange(NodeId),
    #[error("unknown layer {name:?}{}", .record.map(|r| format!(" (edge record {r})")).unwrap_or_default())]
    UnknownLayer { name: String, record: Option<usize> },
    #[error("edge record {record}: layer {name:?} is an aggregate; edges must target basic layers")]
    EdgeOnAggregate { name: String, record: usize },
    #[error("edge record {record}: self-tie on node {label:?} in layer {layer:?}")]
    SelfTie { label: String, layer: String, record: usize },
    #[error("layer name {0:?} declared more than once")]
    DuplicateLayerName(String),
    #[error("node label {0:?} declared more than once")]
    DuplicateNode(String),
    #[error("aggregate layer {0:?} has no constituents")]
    EmptyAggregate(String),
    #[error("basic layer {0:?} must not list constituents")]
    BasicWithConstituents(String),
    #[error("aggregate layer {aggregate:?} references {constituent:?}, which is not a basic layer")]
    BadConstituent { aggregate: String, constituent: String },
}

/// One directed graph over the shared node set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerView {
    name: String,
    succ: Vec<Vec<NodeId>>,
    pred: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl LayerView {
    /// Builds a view from an edge list over `n` nodes. Duplicate pairs are
    /// collapsed. Panics on out-of-range endpoints or self-ties; callers
    /// validate first.
    pub(crate) fn from_edges(name: &str, n: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Self {
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for (s, t) in edges {
            assert!(s != t, "self-tie in layer {name}");
            succ[s.index()].push(t);
            pred[t.index()].push(s);
        }
        for list in succ.iter_mut().chain(pred.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = succ.iter().map(Vec::len).sum();
        LayerView { name: name.to_owned(), succ, pred, edge_count }
    }

    /// Convenience constructor for anonymous single-layer graphs on nodes
    /// `0..n`.
    pub fn from_pairs(name: &str, n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut checked = Vec::with_capacity(edges.len());
        for (record, &(s, t)) in edges.iter().enumerate() {
            for v in [s, t] {
                if v >= n {
                    return Err(GraphError::UnknownNode { label: v.to_string(), record: Some(record) });
                }
            }
            if s == t {
                return Err(GraphError::SelfTie { label: s.to_string(), layer: name.to_owned(), record });
            }
            checked.push((NodeId::from(s), NodeId::from(t)));
        }
        Ok(Self::from_edges(name, n, checked))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn node_count(&self) -> usize {
        self.succ.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        (0..self.succ.len()).map(NodeId::from)
    }

    fn check(&self, i: NodeId) -> Result<(), GraphError> {
        if i.index() < self.succ.len() {
            Ok(())
        } else {
            Err(GraphError::NodeOutOfRange(i))
        }
    }

    /// `{j : i -> j}`, sorted.
    pub fn out_set(&self, i: NodeId) -> Result<&[NodeId], GraphError> {
        self.check(i)?;
        Ok(&self.succ[i.index()])
    }

    /// `{j : j -> i}`, sorted.
    pub fn in_set(&self, i: NodeId) -> Result<&[NodeId], GraphError> {
        self.check(i)?;
        Ok(&self.pred[i.index()])
    }

    pub fn out_degree(&self, i: NodeId) -> Result<usize, GraphError> {
        self.out_set(i).map(<[NodeId]>::len)
    }

    pub fn in_degree(&self, i: NodeId) -> Result<usize, GraphError> {
        self.in_set(i).map(<[NodeId]>::len)
    }

    #[inline]
    pub(crate) fn succ(&self, i: NodeId) -> &[NodeId] {
        &self.succ[i.index()]
    }

    #[inline]
    pub(crate) fn pred(&self, i: NodeId) -> &[NodeId] {
        &self.pred[i.index()]
    }

    pub fn has_edge(&self, s: NodeId, t: NodeId) -> bool {
        self.succ.get(s.index()).is_some_and(|l| l.binary_search(&t).is_ok())
    }

    /// All edges in (source, target) order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(s, ts)| ts.iter().map(move |&t| (NodeId::from(s), t)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Layer {
    spec: LayerSpec,
    view: LayerView,
}

/// Immutable multiplex graph. Layers keep their declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplexGraph {
    labels: Vec<String>,
    ids: HashMap<String, NodeId>,
    layers: Vec<Layer>,
    layer_ids: HashMap<String, usize>,
    duplicates_collapsed: usize,
}

/// Checks layer declarations without touching any edges.
pub fn validate_layer_specs(specs: &[LayerSpec]) -> Result<(), GraphError> {
    let mut seen = HashSet::new();
    for spec in specs {
        if !seen.insert(spec.name.as_str()) {
            return Err(GraphError::DuplicateLayerName(spec.name.clone()));
        }
    }
    let basic: HashSet<&str> = specs.iter().filter(|s| s.is_basic()).map(|s| s.name.as_str()).collect();
    for spec in specs {
        match spec.kind {
            LayerKind::Basic if !spec.constituents.is_empty() => {
                return Err(GraphError::BasicWithConstituents(spec.name.clone()));
            }
            LayerKind::Aggregate if spec.constituents.is_empty() => {
                return Err(GraphError::EmptyAggregate(spec.name.clone()));
            }
            LayerKind::Aggregate => {
                if let Some(c) = spec.constituents.iter().find(|c| !basic.contains(c.as_str())) {
                    return Err(GraphError::BadConstituent {
                        aggregate: spec.name.clone(),
                        constituent: c.clone(),
                    });
                }
            }
            LayerKind::Basic => {}
        }
    }
    Ok(())
}

/// Builds a multiplex graph from node labels, layer declarations and
/// `(source, target, layer)` triples. Duplicate triples collapse to one edge
/// and are counted in [`MultiplexGraph::duplicates_collapsed`].
pub fn build_graph<N, E, S>(nodes: N, specs: &[LayerSpec], edges: E) -> Result<MultiplexGraph, GraphError>
where
    N: IntoIterator<Item = S>,
    S: Into<String>,
    E: IntoIterator,
    E::Item: EdgeTriple,
{
    validate_layer_specs(specs)?;

    let mut labels = Vec::new();
    let mut ids = HashMap::new();
    for label in nodes {
        let label: String = label.into();
        let id = NodeId::from(labels.len());
        if ids.insert(label.clone(), id).is_some() {
            return Err(GraphError::DuplicateNode(label));
        }
        labels.push(label);
    }
    let n = labels.len();

    let layer_ids: HashMap<String, usize> =
        specs.iter().enumerate().map(|(k, s)| (s.name.clone(), k)).collect();
    let mut per_layer: Vec<HashSet<(NodeId, NodeId)>> = vec![HashSet::new(); specs.len()];
    let mut duplicates_collapsed = 0;

    for (record, edge) in edges.into_iter().enumerate() {
        let (src, dst, layer) = edge.parts();
        let lookup = |label: &str| {
            ids.get(label)
                .copied()
                .ok_or_else(|| GraphError::UnknownNode { label: label.to_owned(), record: Some(record) })
        };
        let s = lookup(src)?;
        let t = lookup(dst)?;
        let k = *layer_ids
            .get(layer)
            .ok_or_else(|| GraphError::UnknownLayer { name: layer.to_owned(), record: Some(record) })?;
        if !specs[k].is_basic() {
            return Err(GraphError::EdgeOnAggregate { name: layer.to_owned(), record });
        }
        if s == t {
            return Err(GraphError::SelfTie { label: src.to_owned(), layer: layer.to_owned(), record });
        }
        if !per_layer[k].insert((s, t)) {
            duplicates_collapsed += 1;
        }
    }

    let mut layers = Vec::with_capacity(specs.len());
    for spec in specs {
        let view = match spec.kind {
            LayerKind::Basic => {
                let k = layer_ids[&spec.name];
                LayerView::from_edges(&spec.name, n, per_layer[k].iter().copied())
            }
            LayerKind::Aggregate => {
                let union = spec
                    .constituents
                    .iter()
                    .flat_map(|c| per_layer[layer_ids[c]].iter().copied());
                LayerView::from_edges(&spec.name, n, union)
            }
        };
        layers.push(Layer { spec: spec.clone(), view });
    }

    Ok(MultiplexGraph { labels, ids, layers, layer_ids, duplicates_collapsed })
}

/// Anything that can be read as a `(source, target, layer)` label triple.
pub trait EdgeTriple {
    fn parts(&self) -> (&str, &str, &str);
}

impl<A: AsRef<str>, B: AsRef<str>, C: AsRef<str>> EdgeTriple for (A, B, C) {
    fn parts(&self) -> (&str, &str, &str) {
        (self.0.as_ref(), self.1.as_ref(), self.2.as_ref())
    }
}

impl<T: EdgeTriple> EdgeTriple for &T {
    fn parts(&self) -> (&str, &str, &str) {
        (*self).parts()
    }
}

impl MultiplexGraph {
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: NodeId) -> Option<&str> {
        self.labels.get(i.index()).map(String::as_str)
    }

    pub fn node_id(&self, label: &str) -> Option<NodeId> {
        self.ids.get(label).copied()
    }

    pub fn node(&self, label: &str) -> Result<NodeId, GraphError> {
        self.node_id(label)
            .ok_or_else(|| GraphError::UnknownNode { label: label.to_owned(), record: None })
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> {
        (0..self.labels.len()).map(NodeId::from)
    }

    /// Layer declarations in declaration order.
    pub fn layer_specs(&self) -> impl Iterator<Item = &LayerSpec> {
        self.layers.iter().map(|l| &l.spec)
    }

    pub fn layer_names(&self) -> impl Iterator<Item = &str> {
        self.layers.iter().map(|l| l.spec.name.as_str())
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn has_layer(&self, name: &str) -> bool {
        self.layer_ids.contains_key(name)
    }

    pub fn layer_view(&self, name: &str) -> Result<&LayerView, GraphError> {
        self.layer_ids
            .get(name)
            .map(|&k| &self.layers[k].view)
            .ok_or_else(|| GraphError::UnknownLayer { name: name.to_owned(), record: None })
    }

    pub fn views(&self) -> impl Iterator<Item = &LayerView> {
        self.layers.iter().map(|l| &l.view)
    }

    /// Number of `(source, target, layer)` triples dropped as repeats during
    /// construction.
    pub fn duplicates_collapsed(&self) -> usize {
        self.duplicates_collapsed
    }

    /// Edges of a layer as label pairs, sorted by (source, target) label.
    pub fn labeled_edges(&self, name: &str) -> Result<Vec<(&str, &str)>, GraphError> {
        let view = self.layer_view(name)?;
        let mut edges: Vec<(&str, &str)> = view
            .edges()
            .map(|(s, t)| (self.labels[s.index()].as_str(), self.labels[t.index()].as_str()))
            .collect();
        edges.sort_unstable();
        Ok(edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> MultiplexGraph {
        let specs = [
            LayerSpec::basic("alpha"),
            LayerSpec::basic("beta"),
            LayerSpec::aggregate("all", ["alpha", "beta"]),
        ];
        build_graph(
            ["a", "b", "c"],
            &specs,
            [("a", "b", "alpha"), ("b", "a", "alpha"), ("a", "c", "beta")],
        )
        .unwrap()
    }

    fn ids(g: &MultiplexGraph, labels: &[&str]) -> Vec<NodeId> {
        labels.iter().map(|l| g.node_id(l).unwrap()).collect()
    }

    #[test]
    fn aggregate_is_union() {
        let g = small();
        assert_eq!(g.labeled_edges("all").unwrap(), vec![("a", "b"), ("a", "c"), ("b", "a")]);
        let all = g.layer_view("all").unwrap();
        assert_eq!(all.out_set(g.node_id("a").unwrap()).unwrap(), ids(&g, &["b", "c"]));
    }

    #[test]
    fn basic_view_reads_direct() {
        let g = small();
        let a = g.node_id("a").unwrap();
        let alpha = g.layer_view("alpha").unwrap();
        assert_eq!(alpha.out_set(a).unwrap(), ids(&g, &["b"]));
        assert_eq!(alpha.in_set(a).unwrap(), ids(&g, &["b"]));
        assert_eq!(g.layer_view("alpha").unwrap(), alpha);
    }

    #[test]
    fn missing_layer() {
        assert!(matches!(small().layer_view("missing"), Err(GraphError::UnknownLayer { .. })));
    }

    #[test]
    fn self_tie_rejected() {
        let err = build_graph(["a", "b"], &[LayerSpec::basic("alpha")], [("a", "a", "alpha")]).unwrap_err();
        assert_eq!(err, GraphError::SelfTie { label: "a".into(), layer: "alpha".into(), record: 0 });
    }

    #[test]
    fn construction_errors_name_the_record() {
        let specs = [LayerSpec::basic("x"), LayerSpec::aggregate("agg", ["x"])];
        let err = build_graph(["a", "b"], &specs, [("a", "b", "x"), ("a", "z", "x")]).unwrap_err();
        assert_eq!(err, GraphError::UnknownNode { label: "z".into(), record: Some(1) });
        let err = build_graph(["a", "b"], &specs, [("a", "b", "y")]).unwrap_err();
        assert_eq!(err, GraphError::UnknownLayer { name: "y".into(), record: Some(0) });
        let err = build_graph(["a", "b"], &specs, [("a", "b", "agg")]).unwrap_err();
        assert_eq!(err, GraphError::EdgeOnAggregate { name: "agg".into(), record: 0 });
        let err = build_graph(["a", "a"], &specs, Vec::<(&str, &str, &str)>::new()).unwrap_err();
        assert_eq!(err, GraphError::DuplicateNode("a".into()));
    }

    #[test]
    fn layer_spec_validation() {
        let dup = [LayerSpec::basic("x"), LayerSpec::basic("x")];
        assert_eq!(validate_layer_specs(&dup), Err(GraphError::DuplicateLayerName("x".into())));
        let bad = [LayerSpec::basic("x"), LayerSpec::aggregate("agg", ["y"])];
        assert!(matches!(validate_layer_specs(&bad), Err(GraphError::BadConstituent { .. })));
        let nested = [LayerSpec::basic("x"), LayerSpec::aggregate("a1", ["x"]), LayerSpec::aggregate("a2", ["a1"])];
        assert!(matches!(validate_layer_specs(&nested), Err(GraphError::BadConstituent { .. })));
        let empty = [LayerSpec::aggregate("agg", Vec::<String>::new())];
        assert_eq!(validate_layer_specs(&empty), Err(GraphError::EmptyAggregate("agg".into())));
        // single-constituent aggregates are fine
        let single = [LayerSpec::basic("x"), LayerSpec::aggregate("agg", ["x"])];
        assert!(validate_layer_specs(&single).is_ok());
    }

    #[test]
    fn duplicates_collapse_and_are_counted() {
        let g = build_graph(
            ["a", "b"],
            &[LayerSpec::basic("x")],
            [("a", "b", "x"), ("a", "b", "x"), ("a", "b", "x")],
        )
        .unwrap();
        assert_eq!(g.layer_view("x").unwrap().edge_count(), 1);
        assert_eq!(g.duplicates_collapsed(), 2);
    }

    #[test]
    fn labels_are_case_sensitive() {
        let g = build_graph(["a", "A"], &[LayerSpec::basic("x")], [("a", "A", "x")]).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_ne!(g.node_id("a"), g.node_id("A"));
    }

    #[test]
    fn neighbor_sets_by_definition() {
        // directed 3-cycle 1->2->3->1
        let v = LayerView::from_pairs("c", 3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(v.out_set(NodeId(0)).unwrap(), &[NodeId(1)]);
        assert_eq!(v.in_set(NodeId(0)).unwrap(), &[NodeId(2)]);

        // {1->2, 2->1, 1->3} plus an isolate
        let v = LayerView::from_pairs("d", 4, &[(0, 1), (1, 0), (0, 2)]).unwrap();
        assert_eq!(v.out_set(NodeId(0)).unwrap(), &[NodeId(1), NodeId(2)]);
        assert_eq!(v.in_set(NodeId(0)).unwrap(), &[NodeId(1)]);
        assert!(v.out_set(NodeId(3)).unwrap().is_empty());
        assert_eq!(v.in_degree(NodeId(3)).unwrap(), 0);
        assert_eq!(v.out_set(NodeId(9)), Err(GraphError::NodeOutOfRange(NodeId(9))));
    }

    #[test]
    fn survey_vocabulary_gives_nine_views() {
        let g = build_graph(
            ["a", "b", "c"],
            &crate::survey_layer_specs(),
            [("a", "b", "strong_off"), ("b", "c", "weak_on")],
        )
        .unwrap();
        assert_eq!(g.layer_count(), 9);
        assert_eq!(g.views().count(), 9);
        assert_eq!(g.layer_view("all").unwrap().edge_count(), 2);
        assert_eq!(g.layer_view("off").unwrap().edge_count(), 1);
        assert_eq!(g.layer_view("weak").unwrap().edge_count(), 1);
    }
}
