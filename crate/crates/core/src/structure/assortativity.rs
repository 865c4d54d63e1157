use serde::{Deserialize, Serialize};

use super::StructureError;
use crate::graph::{LayerView, NodeId};

/// Distinct undirected edges `{u, v}` with `u < v`, and undirected degrees.
fn undirected_projection(v: &LayerView) -> (Vec<(NodeId, NodeId)>, Vec<u64>) {
    let mut pairs: Vec<(NodeId, NodeId)> = v.edges().map(|(s, t)| if s < t { (s, t) } else { (t, s) }).collect();
    pairs.sort_unstable();
    pairs.dedup();
    let mut degree = vec![0u64; v.node_count()];
    for &(a, b) in &pairs {
        degree[a.index()] += 1;
        degree[b.index()] += 1;
    }
    (pairs, degree)
}

/// Pearson degree assortativity of the undirected projection.
///
/// Computed in exact integer arithmetic as
/// `(4M·Σjk − (Σ(j+k))²) / (2M·Σ(j²+k²) − (Σ(j+k))²)` over the `M`
/// undirected edges, so zero variance is detected exactly.
pub fn assortativity(v: &LayerView) -> Result<f64, StructureError> {
    if v.edge_count() < 2 {
        return Err(StructureError::TooFewEdges(v.edge_count()));
    }
    let (pairs, degree) = undirected_projection(v);
    let m = pairs.len() as i128;
    let (mut prod, mut sum, mut squares) = (0i128, 0i128, 0i128);
    for (a, b) in pairs {
        let (j, k) = (degree[a.index()] as i128, degree[b.index()] as i128);
        prod += j * k;
        sum += j + k;
        squares += j * j + k * k;
    }
    let num = 4 * m * prod - sum * sum;
    let den = 2 * m * squares - sum * sum;
    if den == 0 {
        return Err(StructureError::DegenerateVariance);
    }
    Ok(num as f64 / den as f64)
}

/// Directed degree correlations across edges `u -> v`, named
/// source-degree/target-degree. `None` where a side has zero variance.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DirectedAssortativity {
    pub out_out: Option<f64>,
    pub out_in: Option<f64>,
    pub in_out: Option<f64>,
    pub in_in: Option<f64>,
}

fn pearson_integer(xy: impl Iterator<Item = (i128, i128)>) -> Option<f64> {
    let (mut n, mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0i128, 0i128, 0i128, 0i128, 0i128, 0i128);
    for (x, y) in xy {
        n += 1;
        sx += x;
        sy += y;
        sxx += x * x;
        syy += y * y;
        sxy += x * y;
    }
    let vx = n * sxx - sx * sx;
    let vy = n * syy - sy * sy;
    if n < 2 || vx == 0 || vy == 0 {
        return None;
    }
    Some((n * sxy - sx * sy) as f64 / ((vx as f64) * (vy as f64)).sqrt())
}

pub fn directed_assortativity(v: &LayerView) -> DirectedAssortativity {
    let out = |i: NodeId| v.succ(i).len() as i128;
    let inn = |i: NodeId| v.pred(i).len() as i128;
    let corr = |fs: &dyn Fn(NodeId) -> i128, ft: &dyn Fn(NodeId) -> i128| {
        pearson_integer(v.edges().map(|(s, t)| (fs(s), ft(t))))
    };
    DirectedAssortativity {
        out_out: corr(&out, &out),
        out_in: corr(&out, &inn),
        in_out: corr(&inn, &out),
        in_in: corr(&inn, &inn),
    }
}
