#![allow(dead_code)]

use mplex_core::exogenous::AttributeTable;
use mplex_core::graph::{build_graph, LayerSpec, MultiplexGraph};
use mplex_oracle::{Corpus, Matrix};

pub fn label(i: usize) -> String {
    format!("v{i:02}")
}

/// Layers `a` and `b` plus their union `ab`.
pub fn two_layer(a: &Matrix, b: &Matrix) -> MultiplexGraph {
    let n = a.n;
    let mut edges = Vec::new();
    for (name, m) in [("a", a), ("b", b)] {
        for (s, t) in m.edges() {
            edges.push((label(s), label(t), name.to_owned()));
        }
    }
    build_graph(
        (0..n).map(label),
        &[LayerSpec::basic("a"), LayerSpec::basic("b"), LayerSpec::aggregate("ab", ["a", "b"])],
        edges.iter().map(|(s, t, l)| (s.as_str(), t.as_str(), l.as_str())),
    )
    .unwrap()
}

pub fn single(m: &Matrix) -> MultiplexGraph {
    let edges: Vec<(String, String)> = m.edges().into_iter().map(|(s, t)| (label(s), label(t))).collect();
    build_graph(
        (0..m.n).map(label),
        &[LayerSpec::basic("x")],
        edges.iter().map(|(s, t)| (s.as_str(), t.as_str(), "x")),
    )
    .unwrap()
}

/// Random tokens from a small vocabulary; some nodes get none.
pub fn random_attributes(c: &mut Corpus, n: usize) -> Vec<Vec<String>> {
    (0..n)
        .map(|_| {
            let mut tokens: Vec<String> =
                (0..6).filter(|_| c.chance(0.4)).map(|k| format!("t{k}")).collect();
            tokens.sort();
            tokens
        })
        .collect()
}

pub fn table(attrs: &[Vec<String>]) -> AttributeTable {
    let mut t = AttributeTable::new();
    for (i, tokens) in attrs.iter().enumerate() {
        t.touch(label(i));
        for tok in tokens {
            t.insert(label(i), tok.clone());
        }
    }
    t
}
