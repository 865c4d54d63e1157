//! Per-actor endogenous metrics of a single layer: degrees, reciprocity,
//! three-cycles and transitive triplets, raw and Jaccard-normalized.
//!
//! The normalized metrics are evaluated through two-layer kernels shared
//! with [`crate::multiplex`]; the single-layer form passes the same view
//! twice, so `r_i(G, G)` and `r_i` are the same floating-point computation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{GraphError, LayerView, NodeId};
use crate::jaccard::{intersection_count, jaccard, JaccardConvention};

const METRIC: JaccardConvention = JaccardConvention::Metric;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ActorMetrics {
    pub node: NodeId,
    pub d_out: usize,
    pub d_in: usize,
    /// Reciprocated ties, `|S_out ∩ S_in|`.
    pub rec: usize,
    pub r: f64,
    pub cyc: usize,
    pub tc: f64,
    pub plt: usize,
    pub tp: f64,
}

/// Means of the normalized metrics over every node of the layer.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct MetricAverages {
    pub r: f64,
    pub tc: f64,
    pub tp: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerMetrics {
    pub layer: String,
    pub actors: Vec<ActorMetrics>,
    pub averages: MetricAverages,
}

/// Mean of a list of Jaccard terms. Terms are summed in ascending order so
/// the result does not depend on node numbering.
pub(crate) fn mean_of_terms(terms: &mut [f64], denominator: usize) -> f64 {
    if denominator == 0 {
        return 0.0;
    }
    terms.sort_unstable_by(f64::total_cmp);
    terms.iter().sum::<f64>() / denominator as f64
}

/// `J(S_i^out(a), S_i^in(b))`.
pub(crate) fn reciprocity_kernel(a: &LayerView, b: &LayerView, i: NodeId) -> f64 {
    jaccard(a.succ(i), b.pred(i), METRIC)
}

/// `(1/|S_i^in(w)|) Σ_{h ∈ S_i^in(w)} J(S_i^out(a), S_h^in(b))`.
pub(crate) fn three_cycles_kernel(a: &LayerView, b: &LayerView, weights: &LayerView, i: NodeId) -> f64 {
    let out_i = a.succ(i);
    let senders = weights.pred(i);
    let mut terms: Vec<f64> = senders.iter().map(|&h| jaccard(out_i, b.pred(h), METRIC)).collect();
    mean_of_terms(&mut terms, senders.len())
}

/// `(1/|S_i^out(w)|) Σ_{j ∈ S_i^out(w)} J(S_i^out(a), S_j^out(b))`.
pub(crate) fn triplets_kernel(a: &LayerView, b: &LayerView, weights: &LayerView, i: NodeId) -> f64 {
    let out_i = a.succ(i);
    let receivers = weights.succ(i);
    let mut terms: Vec<f64> = receivers.iter().map(|&j| jaccard(out_i, b.succ(j), METRIC)).collect();
    mean_of_terms(&mut terms, receivers.len())
}

fn checked(v: &LayerView, i: NodeId) -> Result<(), GraphError> {
    v.out_set(i).map(|_| ())
}

/// `Rec_i`: number of reciprocated ties of `i`.
pub fn reciprocity_raw(v: &LayerView, i: NodeId) -> Result<usize, GraphError> {
    checked(v, i)?;
    Ok(intersection_count(v.succ(i), v.pred(i)))
}

/// `r_i = J(S_i^out, S_i^in)`, 0 when `i` has no ties.
pub fn normalized_reciprocity(v: &LayerView, i: NodeId) -> Result<f64, GraphError> {
    checked(v, i)?;
    Ok(reciprocity_kernel(v, v, i))
}

/// `cyc_i`: ordered pairs `(j, h)` with `i -> j -> h -> i`.
pub fn three_cycles_raw(v: &LayerView, i: NodeId) -> Result<usize, GraphError> {
    checked(v, i)?;
    let out_i = v.succ(i);
    Ok(v.pred(i).iter().map(|&h| intersection_count(out_i, v.pred(h))).sum())
}

/// `tc_i`, 0 when `i` has no in-ties.
pub fn normalized_three_cycles(v: &LayerView, i: NodeId) -> Result<f64, GraphError> {
    checked(v, i)?;
    Ok(three_cycles_kernel(v, v, v, i))
}

/// `plt_i`: ordered pairs `(j, h)` with `i -> j -> h` and `i -> h`.
pub fn triplets_raw(v: &LayerView, i: NodeId) -> Result<usize, GraphError> {
    checked(v, i)?;
    let out_i = v.succ(i);
    Ok(out_i.iter().map(|&j| intersection_count(out_i, v.succ(j))).sum())
}

/// `tp_i`, 0 when `i` has no out-ties.
pub fn normalized_triplets(v: &LayerView, i: NodeId) -> Result<f64, GraphError> {
    checked(v, i)?;
    Ok(triplets_kernel(v, v, v, i))
}

/// All endogenous metrics of one node.
pub fn actor_metrics(v: &LayerView, i: NodeId) -> Result<ActorMetrics, GraphError> {
    Ok(ActorMetrics {
        node: i,
        d_out: v.out_degree(i)?,
        d_in: v.in_degree(i)?,
        rec: reciprocity_raw(v, i)?,
        r: normalized_reciprocity(v, i)?,
        cyc: three_cycles_raw(v, i)?,
        tc: normalized_three_cycles(v, i)?,
        plt: triplets_raw(v, i)?,
        tp: normalized_triplets(v, i)?,
    })
}

/// Sums in node order and divides by `n`; an empty node set averages to 0.
pub(crate) fn average(values: impl Iterator<Item = f64>, n: usize) -> f64 {
    if n == 0 {
        0.0
    } else {
        values.sum::<f64>() / n as f64
    }
}

/// Metrics for every node plus layer averages over all of `V`, isolates
/// included.
pub fn layer_metrics(v: &LayerView) -> LayerMetrics {
    let nodes: Vec<NodeId> = v.nodes().collect();
    let actors: Vec<ActorMetrics> = nodes
        .par_iter()
        .map(|&i| actor_metrics(v, i).expect("node drawn from the view"))
        .collect();
    let n = actors.len();
    let averages = MetricAverages {
        r: average(actors.iter().map(|m| m.r), n),
        tc: average(actors.iter().map(|m| m.tc), n),
        tp: average(actors.iter().map(|m| m.tp), n),
    };
    LayerMetrics { layer: v.name().to_owned(), actors, averages }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn view(n: usize, edges: &[(usize, usize)]) -> LayerView {
        LayerView::from_pairs("t", n, edges).unwrap()
    }

    fn cycle3() -> LayerView {
        view(3, &[(0, 1), (1, 2), (2, 0)])
    }

    fn triplet() -> LayerView {
        view(3, &[(0, 1), (1, 2), (0, 2)])
    }

    fn dyad_plus() -> LayerView {
        view(3, &[(0, 1), (1, 0), (0, 2)])
    }

    const N0: NodeId = NodeId(0);
    const N1: NodeId = NodeId(1);
    const N2: NodeId = NodeId(2);

    #[test]
    fn reciprocity_examples() {
        let g = dyad_plus();
        assert_eq!(reciprocity_raw(&g, N0).unwrap(), 1);
        assert_eq!(normalized_reciprocity(&g, N0).unwrap(), 0.5);
        assert_eq!(normalized_reciprocity(&g, N1).unwrap(), 1.0);
        assert_eq!(normalized_reciprocity(&g, N2).unwrap(), 0.0);
        for i in [N0, N1, N2] {
            assert_eq!(reciprocity_raw(&cycle3(), i).unwrap(), 0);
        }
        assert_eq!(reciprocity_raw(&view(2, &[(0, 1), (1, 0)]), N0).unwrap(), 1);
        let star = view(3, &[(0, 1), (1, 0), (0, 2), (2, 0)]);
        assert_eq!(normalized_reciprocity(&star, N0).unwrap(), 1.0);
    }

    #[test]
    fn isolated_node_is_zero_everywhere() {
        let g = view(4, &[(0, 1)]);
        let m = actor_metrics(&g, NodeId(3)).unwrap();
        assert_eq!((m.d_out, m.d_in, m.rec, m.cyc, m.plt), (0, 0, 0, 0, 0));
        assert_eq!((m.r, m.tc, m.tp), (0.0, 0.0, 0.0));
    }

    #[test]
    fn three_cycle_examples() {
        assert_eq!(three_cycles_raw(&cycle3(), N0).unwrap(), 1);
        assert_eq!(normalized_three_cycles(&cycle3(), N0).unwrap(), 1.0);
        assert_eq!(three_cycles_raw(&triplet(), N0).unwrap(), 0);
        assert_eq!(normalized_three_cycles(&triplet(), N2).unwrap(), 0.0);
        // in-degree zero
        assert_eq!(normalized_three_cycles(&triplet(), N0).unwrap(), 0.0);
        // 0->1->2->0 and 0->3->4->0 share node 0
        let two = view(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]);
        assert_eq!(three_cycles_raw(&two, N0).unwrap(), 2);
    }

    #[test]
    fn triplet_examples() {
        assert_eq!(triplets_raw(&triplet(), N0).unwrap(), 1);
        assert_eq!(normalized_triplets(&triplet(), N0).unwrap(), 0.25);
        for i in [N0, N1, N2] {
            assert_eq!(triplets_raw(&cycle3(), i).unwrap(), 0);
        }
        assert_eq!(normalized_triplets(&triplet(), N2).unwrap(), 0.0);
        let fan = view(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(triplets_raw(&fan, N0).unwrap(), 2);
    }

    #[test]
    fn clique_triplets() {
        // every node: out = the other two; J({j,h}, {i,h}) = 1/3 for both j
        let k3 = view(3, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]);
        for i in [N0, N1, N2] {
            assert_eq!(triplets_raw(&k3, i).unwrap(), 2);
            assert!((normalized_triplets(&k3, i).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn layer_averages() {
        let m = layer_metrics(&cycle3());
        assert_eq!(m.averages, MetricAverages { r: 0.0, tc: 1.0, tp: 0.0 });
        assert_eq!(layer_metrics(&view(4, &[])).averages, MetricAverages::default());
        assert_eq!(layer_metrics(&dyad_plus()).averages.r, 0.5);
        assert_eq!(layer_metrics(&view(0, &[])).averages, MetricAverages::default());
    }

    #[test]
    fn unknown_node_is_an_error() {
        assert!(normalized_triplets(&cycle3(), NodeId(7)).is_err());
        assert!(three_cycles_raw(&cycle3(), NodeId(3)).is_err());
    }
}
