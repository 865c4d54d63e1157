//! Cross-layer reciprocity, three-cycles and triplets for an ordered layer
//! pair `(α, β)`, and the out/in overlapping indexes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::endogenous::{average, reciprocity_kernel, three_cycles_kernel, triplets_kernel};
use crate::graph::{GraphError, LayerView, MultiplexGraph, NodeId};
use crate::jaccard::{jaccard, JaccardConvention};

/// Which side of the pair supplies a weighting edge and its degree
/// denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairSide {
    Alpha,
    Beta,
}

/// Layer attribution of the bare `x_hi`, `d_in` (three-cycles) and `x_ij`,
/// `d_out` (triplets) terms. The default is the only choice under which
/// `α = β` reduces to the single-layer formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossLayerConfig {
    pub tc_weights: PairSide,
    pub tp_weights: PairSide,
}

impl Default for CrossLayerConfig {
    fn default() -> Self {
        CrossLayerConfig { tc_weights: PairSide::Beta, tp_weights: PairSide::Alpha }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossLayerMetrics {
    pub node: NodeId,
    pub alpha: String,
    pub beta: String,
    pub r_ab: f64,
    pub tc_ab: f64,
    pub tp_ab: f64,
    pub oi_out: f64,
    pub oi_in: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CrossAverages {
    pub r: f64,
    pub tc: f64,
    pub tp: f64,
    pub oi_out: f64,
    pub oi_in: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairMetrics {
    pub alpha: String,
    pub beta: String,
    pub actors: Vec<CrossLayerMetrics>,
    pub averages: CrossAverages,
}

/// Two resolved layers of a multiplex graph.
#[derive(Debug, Clone, Copy)]
pub struct LayerPair<'g> {
    pub alpha: &'g LayerView,
    pub beta: &'g LayerView,
    pub config: CrossLayerConfig,
}

impl<'g> LayerPair<'g> {
    pub fn new(g: &'g MultiplexGraph, alpha: &str, beta: &str) -> Result<Self, GraphError> {
        Self::with_config(g, alpha, beta, CrossLayerConfig::default())
    }

    pub fn with_config(
        g: &'g MultiplexGraph,
        alpha: &str,
        beta: &str,
        config: CrossLayerConfig,
    ) -> Result<Self, GraphError> {
        Ok(LayerPair { alpha: g.layer_view(alpha)?, beta: g.layer_view(beta)?, config })
    }

    fn side(&self, side: PairSide) -> &'g LayerView {
        match side {
            PairSide::Alpha => self.alpha,
            PairSide::Beta => self.beta,
        }
    }

    fn check(&self, i: NodeId) -> Result<(), GraphError> {
        self.alpha.out_set(i).map(|_| ())
    }

    pub fn reciprocity(&self, i: NodeId) -> Result<f64, GraphError> {
        self.check(i)?;
        Ok(reciprocity_kernel(self.alpha, self.beta, i))
    }

    pub fn three_cycles(&self, i: NodeId) -> Result<f64, GraphError> {
        self.check(i)?;
        Ok(three_cycles_kernel(self.alpha, self.beta, self.side(self.config.tc_weights), i))
    }

    pub fn triplets(&self, i: NodeId) -> Result<f64, GraphError> {
        self.check(i)?;
        Ok(triplets_kernel(self.alpha, self.beta, self.side(self.config.tp_weights), i))
    }

    pub fn overlap_out(&self, i: NodeId) -> Result<f64, GraphError> {
        self.check(i)?;
        Ok(jaccard(self.alpha.succ(i), self.beta.succ(i), JaccardConvention::Metric))
    }

    pub fn overlap_in(&self, i: NodeId) -> Result<f64, GraphError> {
        self.check(i)?;
        Ok(jaccard(self.alpha.pred(i), self.beta.pred(i), JaccardConvention::Metric))
    }

    pub fn actor(&self, i: NodeId) -> Result<CrossLayerMetrics, GraphError> {
        Ok(CrossLayerMetrics {
            node: i,
            alpha: self.alpha.name().to_owned(),
            beta: self.beta.name().to_owned(),
            r_ab: self.reciprocity(i)?,
            tc_ab: self.three_cycles(i)?,
            tp_ab: self.triplets(i)?,
            oi_out: self.overlap_out(i)?,
            oi_in: self.overlap_in(i)?,
        })
    }

    /// Per-node metrics and averages over all nodes.
    pub fn metrics(&self) -> PairMetrics {
        let nodes: Vec<NodeId> = self.alpha.nodes().collect();
        let actors: Vec<CrossLayerMetrics> =
            nodes.par_iter().map(|&i| self.actor(i).expect("node drawn from the view")).collect();
        let n = actors.len();
        let averages = CrossAverages {
            r: average(actors.iter().map(|m| m.r_ab), n),
            tc: average(actors.iter().map(|m| m.tc_ab), n),
            tp: average(actors.iter().map(|m| m.tp_ab), n),
            oi_out: average(actors.iter().map(|m| m.oi_out), n),
            oi_in: average(actors.iter().map(|m| m.oi_in), n),
        };
        PairMetrics {
            alpha: self.alpha.name().to_owned(),
            beta: self.beta.name().to_owned(),
            actors,
            averages,
        }
    }
}

/// `r_i(G^α, G^β) = J(S_i^out(α), S_i^in(β))`.
pub fn cross_reciprocity(g: &MultiplexGraph, alpha: &str, beta: &str, i: NodeId) -> Result<f64, GraphError> {
    LayerPair::new(g, alpha, beta)?.reciprocity(i)
}

/// `tc_i(G^α, G^β)` with weights and denominator from `β`.
pub fn cross_three_cycles(g: &MultiplexGraph, alpha: &str, beta: &str, i: NodeId) -> Result<f64, GraphError> {
    LayerPair::new(g, alpha, beta)?.three_cycles(i)
}

/// `tp_i(G^α, G^β)` with weights and denominator from `α`.
pub fn cross_triplets(g: &MultiplexGraph, alpha: &str, beta: &str, i: NodeId) -> Result<f64, GraphError> {
    LayerPair::new(g, alpha, beta)?.triplets(i)
}

/// `oi_i^out = J(S_i^out(α), S_i^out(β))`.
pub fn overlap_out(g: &MultiplexGraph, alpha: &str, beta: &str, i: NodeId) -> Result<f64, GraphError> {
    LayerPair::new(g, alpha, beta)?.overlap_out(i)
}

/// `oi_i^in = J(S_i^in(α), S_i^in(β))`.
pub fn overlap_in(g: &MultiplexGraph, alpha: &str, beta: &str, i: NodeId) -> Result<f64, GraphError> {
    LayerPair::new(g, alpha, beta)?.overlap_in(i)
}
