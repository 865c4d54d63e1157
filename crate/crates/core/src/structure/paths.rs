use std::collections::VecDeque;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::StructureError;
use crate::graph::{LayerView, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PathStats {
    /// Mean directed distance over ordered pairs of distinct members.
    pub avg_path: f64,
    pub diameter: usize,
}

/// Breadth-first distances from `src` inside the subgraph induced by
/// `inside`. Unreached entries stay `usize::MAX`.
fn bfs(v: &LayerView, inside: &[bool], src: NodeId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; v.node_count()];
    let mut queue = VecDeque::new();
    dist[src.index()] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let d = dist[u.index()] + 1;
        for &w in v.succ(u) {
            if inside[w.index()] && dist[w.index()] == usize::MAX {
                dist[w.index()] = d;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Average shortest-path length and diameter of a strongly connected node
/// set, measured in its induced subgraph. Sets with fewer than two nodes
/// report zeros.
pub fn path_stats(v: &LayerView, component: &[NodeId]) -> Result<PathStats, StructureError> {
    if component.len() < 2 {
        return Ok(PathStats::default());
    }
    let mut inside = vec![false; v.node_count()];
    for &m in component {
        v.out_set(m)?;
        inside[m.index()] = true;
    }
    let per_source: Result<Vec<(u64, usize)>, StructureError> = component
        .par_iter()
        .map(|&s| {
            let dist = bfs(v, &inside, s);
            let mut total = 0u64;
            let mut longest = 0usize;
            for &t in component {
                match dist[t.index()] {
                    usize::MAX => return Err(StructureError::NotStronglyConnected { from: s, to: t }),
                    d => {
                        total += d as u64;
                        longest = longest.max(d);
                    }
                }
            }
            Ok((total, longest))
        })
        .collect();
    let per_source = per_source?;
    let total: u64 = per_source.iter().map(|p| p.0).sum();
    let diameter = per_source.iter().map(|p| p.1).max().unwrap_or(0);
    let k = component.len() as u64;
    Ok(PathStats { avg_path: total as f64 / (k * (k - 1)) as f64, diameter })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(n: u32) -> Vec<NodeId> {
        (0..n).map(NodeId).collect()
    }

    #[test]
    fn cycle_distances() {
        let v = LayerView::from_pairs("c", 3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(path_stats(&v, &all(3)).unwrap(), PathStats { avg_path: 1.5, diameter: 2 });
    }

    #[test]
    fn dyad_and_singleton() {
        let v = LayerView::from_pairs("d", 2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(path_stats(&v, &all(2)).unwrap(), PathStats { avg_path: 1.0, diameter: 1 });
        assert_eq!(path_stats(&v, &all(1)).unwrap(), PathStats::default());
    }

    #[test]
    fn unreachable_pair_is_rejected() {
        let v = LayerView::from_pairs("t", 3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(path_stats(&v, &all(3)), Err(StructureError::NotStronglyConnected { .. })));
    }

    #[test]
    fn paths_stay_inside_the_component() {
        // 0 <-> 1 only reachable through 2 when 2 is outside
        let v = LayerView::from_pairs("x", 3, &[(0, 2), (2, 1), (1, 0)]).unwrap();
        assert!(path_stats(&v, &[NodeId(0), NodeId(1)]).is_err());
    }
}
