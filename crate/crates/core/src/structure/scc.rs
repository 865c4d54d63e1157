use crate::graph::{LayerView, NodeId};

/// Strongly connected components by an iterative Tarjan walk.
///
/// Each component is sorted ascending and components are ordered by their
/// smallest member, so the output is a canonical partition of `V`.
pub fn strongly_connected_components(v: &LayerView) -> Vec<Vec<NodeId>> {
    const UNSEEN: usize = usize::MAX;
    let n = v.node_count();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comps: Vec<Vec<NodeId>> = Vec::new();
    let mut next = 0usize;
    // (node, position in its successor list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (u, ref mut pos)) = call.last_mut() {
            let succ = v.succ(NodeId::from(u));
            if let Some(&w) = succ.get(*pos) {
                *pos += 1;
                let w = w.index();
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(NodeId::from(w));
                    if w == u {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps.sort_unstable_by_key(|c| c[0]);
    comps
}

/// Largest strongly connected component and its induced edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub nodes: Vec<NodeId>,
    pub edges: usize,
}

/// Number of edges of `v` with both endpoints in `members`.
pub fn induced_edge_count(v: &LayerView, members: &[NodeId]) -> usize {
    let mut inside = vec![false; v.node_count()];
    for &m in members {
        inside[m.index()] = true;
    }
    members
        .iter()
        .map(|&m| v.succ(m).iter().filter(|t| inside[t.index()]).count())
        .sum()
}

/// The largest SCC; among equal sizes the one holding the smallest node id.
/// An empty layer on a non-empty node set yields a singleton.
pub fn largest_component(v: &LayerView) -> Component {
    let comps = strongly_connected_components(v);
    let mut best: Option<&Vec<NodeId>> = None;
    for c in &comps {
        if best.is_none_or(|b| c.len() > b.len()) {
            best = Some(c);
        }
    }
    let nodes = best.cloned().unwrap_or_default();
    let edges = induced_edge_count(v, &nodes);
    Component { nodes, edges }
}
