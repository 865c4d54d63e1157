//! Attribute-similarity (exogenous) metrics.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::endogenous::mean_of_terms;
use crate::graph::{GraphError, MultiplexGraph, NodeId};
use crate::jaccard::{jaccard_sets, JaccardConvention};

/// Attribute tokens (`key:value`) per node label. Nodes without an entry
/// have the empty set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AttributeTable {
    sets: BTreeMap<String, BTreeSet<String>>,
}

static EMPTY: BTreeSet<String> = BTreeSet::new();

impl AttributeTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one token; returns false if it was already present.
    pub fn insert(&mut self, node: impl Into<String>, token: impl Into<String>) -> bool {
        self.sets.entry(node.into()).or_default().insert(token.into())
    }

    /// Makes `node` present with an empty attribute set if it has none.
    pub fn touch(&mut self, node: impl Into<String>) {
        self.sets.entry(node.into()).or_default();
    }

    pub fn get(&self, node: &str) -> &BTreeSet<String> {
        self.sets.get(node).unwrap_or(&EMPTY)
    }

    pub fn nodes(&self) -> impl Iterator<Item = &str> {
        self.sets.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &BTreeSet<String>)> {
        self.sets.iter().map(|(k, v)| (k.as_str(), v))
    }
}

impl<K: Into<String>, T: Into<String>> FromIterator<(K, T)> for AttributeTable {
    fn from_iter<I: IntoIterator<Item = (K, T)>>(iter: I) -> Self {
        let mut table = AttributeTable::new();
        for (k, t) in iter {
            table.insert(k, t);
        }
        table
    }
}

/// `J(A_i, A_j)` under the metric convention.
pub fn attribute_similarity(att: &AttributeTable, i: &str, j: &str) -> f64 {
    jaccard_sets(att.get(i), att.get(j), JaccardConvention::Metric)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributeMetrics {
    pub node: NodeId,
    pub layer: String,
    pub att_out: f64,
    pub att_in: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributeReport {
    pub layer: String,
    pub actors: Vec<AttributeMetrics>,
    /// Mean pairwise similarity over all unordered node pairs, independent
    /// of edges.
    pub baseline: f64,
}

/// `att = 2/(n(n-1)) Σ_{i<j} J(A_i, A_j)`. Pair terms are summed in sorted
/// order, which makes the value exactly invariant under relabeling.
pub fn unnetworked_baseline(g: &MultiplexGraph, att: &AttributeTable) -> f64 {
    let labels = g.labels();
    let n = labels.len();
    if n < 2 {
        return 0.0;
    }
    let mut terms = Vec::with_capacity(n * (n - 1) / 2);
    for (a, la) in labels.iter().enumerate() {
        for lb in &labels[a + 1..] {
            terms.push(attribute_similarity(att, la, lb));
        }
    }
    let pairs = terms.len();
    mean_of_terms(&mut terms, pairs)
}

/// Per-node `att_out`/`att_in` on one layer, plus the baseline.
pub fn attribute_metrics(g: &MultiplexGraph, layer: &str, att: &AttributeTable) -> Result<AttributeReport, GraphError> {
    let view = g.layer_view(layer)?;
    let labels = g.labels();
    let mean_similarity = |i: NodeId, others: &[NodeId]| {
        let me = &labels[i.index()];
        let mut terms: Vec<f64> =
            others.iter().map(|j| attribute_similarity(att, me, &labels[j.index()])).collect();
        mean_of_terms(&mut terms, others.len())
    };
    let actors = g
        .nodes()
        .map(|i| AttributeMetrics {
            node: i,
            layer: layer.to_owned(),
            att_out: mean_similarity(i, view.succ(i)),
            att_in: mean_similarity(i, view.pred(i)),
        })
        .collect();
    Ok(AttributeReport { layer: layer.to_owned(), actors, baseline: unnetworked_baseline(g, att) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, LayerSpec};

    fn table() -> AttributeTable {
        [("1", "gender:F"), ("1", "dept:CS"), ("2", "gender:F"), ("2", "dept:EE")].into_iter().collect()
    }

    #[test]
    fn similarity_examples() {
        let t = table();
        assert!((attribute_similarity(&t, "1", "2") - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(attribute_similarity(&t, "1", "1"), 1.0);
        assert_eq!(attribute_similarity(&t, "x", "y"), 0.0);
    }

    #[test]
    fn single_edge() {
        let g = build_graph(["1", "2"], &[LayerSpec::basic("l")], [("1", "2", "l")]).unwrap();
        let rep = attribute_metrics(&g, "l", &table()).unwrap();
        let third = 1.0 / 3.0;
        assert_eq!(rep.actors[0].att_out, third);
        assert_eq!(rep.actors[0].att_in, 0.0);
        assert_eq!(rep.actors[1].att_in, third);
        assert_eq!(rep.baseline, third);
    }

    #[test]
    fn uniform_attributes() {
        let g = build_graph(["a", "b", "c"], &[LayerSpec::basic("l")], [("a", "b", "l"), ("b", "c", "l"), ("c", "a", "l")])
            .unwrap();
        let t: AttributeTable = ["a", "b", "c"].iter().flat_map(|n| [(*n, "k:1"), (*n, "m:2")]).collect();
        let rep = attribute_metrics(&g, "l", &t).unwrap();
        assert!(rep.actors.iter().all(|m| m.att_out == 1.0 && m.att_in == 1.0));
        assert_eq!(rep.baseline, 1.0);
    }

    #[test]
    fn empty_layer_keeps_baseline() {
        let g = build_graph(["1", "2"], &[LayerSpec::basic("l")], Vec::<(&str, &str, &str)>::new()).unwrap();
        let rep = attribute_metrics(&g, "l", &table()).unwrap();
        assert!(rep.actors.iter().all(|m| m.att_out == 0.0 && m.att_in == 0.0));
        assert!((rep.baseline - 1.0 / 3.0).abs() < 1e-15);
        assert!(attribute_metrics(&g, "nope", &table()).is_err());
    }

    #[test]
    fn tokens_are_a_set() {
        let mut t = AttributeTable::new();
        assert!(t.insert("a", "x:1"));
        assert!(!t.insert("a", "x:1"));
        assert_eq!(t.get("a").len(), 1);
    }
}
