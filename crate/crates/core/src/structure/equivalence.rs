use serde::{Deserialize, Serialize};

use super::StructureError;
use crate::endogenous::{layer_metrics, ActorMetrics};
use crate::graph::{LayerView, NodeId};

/// Restricts grouping to nodes with the given out- and in-degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeFilter {
    pub d_out: Option<usize>,
    pub d_in: Option<usize>,
}

impl DegreeFilter {
    pub fn admits(&self, m: &ActorMetrics) -> bool {
        self.d_out.is_none_or(|d| m.d_out == d) && self.d_in.is_none_or(|d| m.d_in == d)
    }
}

/// Nodes whose `(r, tc, tp)` triples agree pairwise within `tolerance`.
/// The reported triple is that of the first (smallest) member.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceClass {
    pub members: Vec<NodeId>,
    pub r: f64,
    pub tc: f64,
    pub tp: f64,
    pub tolerance: f64,
}

fn close(a: &ActorMetrics, b: &ActorMetrics, tol: f64) -> bool {
    (a.r - b.r).abs() <= tol && (a.tc - b.tc).abs() <= tol && (a.tp - b.tp).abs() <= tol
}

/// Groups pre-computed metrics. Nodes are visited in id order and each joins
/// the first class all of whose members are within `tolerance` of it;
/// otherwise it opens a new class. With `tolerance = 0` this is exact
/// equality of the triples.
pub fn group_by_metrics(metrics: &[ActorMetrics], tolerance: f64) -> Result<Vec<EquivalenceClass>, StructureError> {
    if !tolerance.is_finite() || tolerance < 0.0 {
        return Err(StructureError::InvalidTolerance(tolerance));
    }
    let mut sorted: Vec<&ActorMetrics> = metrics.iter().collect();
    sorted.sort_by_key(|m| m.node);
    let mut groups: Vec<Vec<&ActorMetrics>> = Vec::new();
    for m in sorted {
        match groups.iter_mut().find(|g| g.iter().all(|o| close(o, m, tolerance))) {
            Some(g) => g.push(m),
            None => groups.push(vec![m]),
        }
    }
    Ok(groups
        .into_iter()
        .map(|g| EquivalenceClass {
            members: g.iter().map(|m| m.node).collect(),
            r: g[0].r,
            tc: g[0].tc,
            tp: g[0].tp,
            tolerance,
        })
        .collect())
}

pub fn structural_equivalence(
    v: &LayerView,
    tolerance: f64,
    filter: Option<DegreeFilter>,
) -> Result<Vec<EquivalenceClass>, StructureError> {
    let metrics = layer_metrics(v).actors;
    let kept: Vec<ActorMetrics> = match filter {
        Some(f) => metrics.into_iter().filter(|m| f.admits(m)).collect(),
        None => metrics,
    };
    group_by_metrics(&kept, tolerance)
}
