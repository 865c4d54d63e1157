#![no_main]

use libfuzzer_sys::fuzz_target;
use mplex_core::graph::{build_graph, LayerSpec};
use mplex_core::io::{parse_edges, Delimiter};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for delimiter in [None, Some(Delimiter::Comma), Some(Delimiter::Tab)] {
        let Ok(parsed) = parse_edges(text, delimiter) else { continue };
        let mut nodes: Vec<&str> = parsed.records.iter().flat_map(|r| [r.source.as_str(), r.target.as_str()]).collect();
        nodes.sort_unstable();
        nodes.dedup();
        let mut layers: Vec<&str> = parsed.records.iter().map(|r| r.layer.as_str()).collect();
        layers.sort_unstable();
        layers.dedup();
        let mut specs: Vec<LayerSpec> = layers.iter().map(|l| LayerSpec::basic(*l)).collect();
        if !layers.is_empty() && !layers.contains(&"__all") {
            specs.push(LayerSpec::aggregate("__all", layers.clone()));
        }
        if let Ok(g) = build_graph(nodes, &specs, &parsed.records) {
            for v in g.views() {
                assert_eq!(v.edges().count(), v.edge_count());
            }
        }
    }
});
