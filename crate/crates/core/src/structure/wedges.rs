use serde::{Deserialize, Serialize};

use crate::graph::{GraphError, LayerView, MultiplexGraph, NodeId};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosureStat {
    pub layer: String,
    pub closed: u64,
    /// Share of wedges closed, in percent; 0 when there are no wedges.
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WedgeReport {
    pub wedge_layer: String,
    pub total_wedges: u64,
    pub closed_by: Vec<ClosureStat>,
    /// Closed by at least one of the closing layers.
    pub any: ClosureStat,
    /// True when the wedge layer has no wedges at all.
    pub empty: bool,
}

fn undirected_neighbors(v: &LayerView, i: NodeId) -> Vec<NodeId> {
    let mut nb: Vec<NodeId> = v.succ(i).iter().chain(v.pred(i)).copied().collect();
    nb.sort_unstable();
    nb.dedup();
    nb
}

fn tied(v: &LayerView, a: NodeId, b: NodeId) -> bool {
    v.has_edge(a, b) || v.has_edge(b, a)
}

fn stat(layer: &str, closed: u64, total: u64) -> ClosureStat {
    let percent = if total == 0 { 0.0 } else { 100.0 * closed as f64 / total as f64 };
    ClosureStat { layer: layer.to_owned(), closed, percent }
}

/// Counts wedges `(center; {i, k})` in the undirected projection of
/// `wedge_layer`, one per unordered endpoint pair per center, and how many
/// are closed by a tie in either direction between `i` and `k` in each
/// closing layer.
pub fn wedge_closure(g: &MultiplexGraph, wedge_layer: &str, closing_layers: &[&str]) -> Result<WedgeReport, GraphError> {
    let wedge = g.layer_view(wedge_layer)?;
    let closers: Vec<&LayerView> = closing_layers.iter().map(|l| g.layer_view(l)).collect::<Result<_, _>>()?;

    let mut total = 0u64;
    let mut closed = vec![0u64; closers.len()];
    let mut closed_any = 0u64;
    for center in g.nodes() {
        let nb = undirected_neighbors(wedge, center);
        for (a, &i) in nb.iter().enumerate() {
            for &k in &nb[a + 1..] {
                total += 1;
                let mut any = false;
                for (c, layer) in closers.iter().enumerate() {
                    if tied(layer, i, k) {
                        closed[c] += 1;
                        any = true;
                    }
                }
                closed_any += u64::from(any);
            }
        }
    }

    Ok(WedgeReport {
        wedge_layer: wedge_layer.to_owned(),
        total_wedges: total,
        closed_by: closing_layers.iter().zip(&closed).map(|(l, &c)| stat(l, c, total)).collect(),
        any: stat("any", closed_any, total),
        empty: total == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, LayerSpec};

    fn g(edges: &[(&str, &str, &str)]) -> MultiplexGraph {
        build_graph(
            ["1", "2", "3", "4"],
            &[LayerSpec::basic("s"), LayerSpec::basic("w"), LayerSpec::aggregate("all", ["s", "w"])],
            edges.iter(),
        )
        .unwrap()
    }

    #[test]
    fn single_closed_wedge() {
        // path 1-2-3 in s (directions mixed), closed by 1->3 in w
        let g = g(&[("2", "1", "s"), ("2", "3", "s"), ("1", "3", "w")]);
        let rep = wedge_closure(&g, "s", &["s", "w"]).unwrap();
        assert_eq!(rep.total_wedges, 1);
        assert_eq!(rep.closed_by[0].percent, 0.0);
        assert_eq!(rep.closed_by[1].percent, 100.0);
        assert_eq!(rep.any.percent, 100.0);
        assert!(!rep.empty);
    }

    #[test]
    fn mutual_ties_count_once() {
        let g = g(&[("1", "2", "s"), ("2", "1", "s"), ("2", "3", "s"), ("3", "1", "s")]);
        let rep = wedge_closure(&g, "s", &["s"]).unwrap();
        // triangle: one wedge per center
        assert_eq!(rep.total_wedges, 3);
        assert_eq!(rep.closed_by[0].closed, 3);
    }

    #[test]
    fn no_wedges() {
        let g = g(&[("1", "2", "s")]);
        let rep = wedge_closure(&g, "s", &["w"]).unwrap();
        assert_eq!(rep.total_wedges, 0);
        assert!(rep.empty);
        assert_eq!(rep.any.percent, 0.0);
        assert!(wedge_closure(&g, "s", &["nope"]).is_err());
    }

    #[test]
    fn open_star() {
        let g = g(&[("1", "2", "s"), ("1", "3", "s"), ("1", "4", "s")]);
        let rep = wedge_closure(&g, "s", &["s", "w"]).unwrap();
        assert_eq!(rep.total_wedges, 3);
        assert_eq!(rep.any.closed, 0);
    }
}
