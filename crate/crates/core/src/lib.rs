//! Actor-level metrics for multiplex directed graphs, all expressed through
//! the Jaccard index of neighbor sets: normalized reciprocity, three-cycles
//! and transitive triplets within one layer and across ordered layer pairs,
//! out/in overlapping indexes, and attribute similarity. Layer structure
//! (SCCs, path lengths, assortativity, wedge closure) and dataset I/O are
//! included.
//!
//! ```
//! use mplex_core::graph::{build_graph, LayerSpec};
//! use mplex_core::endogenous::layer_metrics;
//!
//! let g = build_graph(
//!     ["a", "b", "c"],
//!     &[LayerSpec::basic("friends")],
//!     [("a", "b", "friends"), ("b", "c", "friends"), ("c", "a", "friends")],
//! )
//! .unwrap();
//! let m = layer_metrics(g.layer_view("friends").unwrap());
//! assert_eq!(m.averages.tc, 1.0);
//! ```

pub mod endogenous;
pub mod exogenous;
pub mod graph;
pub mod io;
pub mod jaccard;
pub mod multiplex;
pub mod structure;

pub use graph::{build_graph, LayerSpec, LayerView, MultiplexGraph, NodeId};
pub use jaccard::{jaccard, JaccardConvention};

/// Basic layers of an offline/online × strong/weak friendship survey.
pub const SURVEY_BASIC_LAYERS: [&str; 4] = ["strong_off", "weak_off", "strong_on", "weak_on"];

/// The four basic layers followed by the `off`, `on`, `strong`, `weak` and
/// `all` unions, in report order.
pub fn survey_layer_specs() -> Vec<LayerSpec> {
    vec![
        LayerSpec::basic("strong_off"),
        LayerSpec::basic("weak_off"),
        LayerSpec::aggregate("off", ["strong_off", "weak_off"]),
        LayerSpec::basic("strong_on"),
        LayerSpec::basic("weak_on"),
        LayerSpec::aggregate("on", ["strong_on", "weak_on"]),
        LayerSpec::aggregate("strong", ["strong_off", "strong_on"]),
        LayerSpec::aggregate("weak", ["weak_off", "weak_on"]),
        LayerSpec::aggregate("all", SURVEY_BASIC_LAYERS),
    ]
}

/// The twelve ordered pairs of the cross-layer table: six pairs, then the
/// same six reversed.
pub fn survey_pairs() -> Vec<(String, String)> {
    let forward = [
        ("strong_off", "strong_on"),
        ("weak_off", "weak_on"),
        ("strong_off", "weak_off"),
        ("strong_on", "weak_on"),
        ("strong", "weak"),
        ("off", "on"),
    ];
    forward
        .iter()
        .map(|&(a, b)| (a.to_owned(), b.to_owned()))
        .chain(forward.iter().map(|&(a, b)| (b.to_owned(), a.to_owned())))
        .collect()
}

/// True when every layer name of [`survey_layer_specs`] is declared.
pub fn declares_survey_layers<'a>(names: impl IntoIterator<Item = &'a str>) -> bool {
    let names: std::collections::HashSet<&str> = names.into_iter().collect();
    survey_layer_specs().iter().all(|s| names.contains(s.name.as_str()))
}
