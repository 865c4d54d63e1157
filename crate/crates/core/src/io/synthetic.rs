//! Seeded synthetic multiplex datasets.
//!
//! Generator: a ChaCha8 stream seeded with `seed_from_u64(seed)`. Uniform
//! reals take the top 53 bits of one `u64` draw. For each basic layer in
//! declaration order and each node pair `i < j` in lexicographic order, one
//! draw decides whether the pair is tied (`< edge_probability`). A tied pair
//! takes a second draw: below `mutuality` it becomes `i <-> j`, otherwise a
//! third draw's low bit picks `i -> j` (0) or `j -> i` (1). Attributes follow,
//! node by node: gender, program, then a GPA value on a 0.1 grid in
//! `[6.0, 10.0]`. The stream depends only on the seed and the config, so
//! output is identical on every platform.

use std::fs;
use std::path::Path;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use super::manifest::DatasetManifest;
use super::records::{Bucket, BucketRules};
use super::SyntheticError;
use crate::exogenous::AttributeTable;
use crate::graph::{build_graph, LayerSpec, MultiplexGraph};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerParams {
    pub name: String,
    pub edge_probability: f64,
    /// Probability that a generated tie is reciprocated.
    pub mutuality: f64,
}

impl LayerParams {
    pub fn new(name: &str, edge_probability: f64, mutuality: f64) -> Self {
        LayerParams { name: name.to_owned(), edge_probability, mutuality }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticConfig {
    pub seed: u64,
    pub nodes: usize,
    pub layers: Vec<LayerParams>,
    pub aggregates: Vec<LayerSpec>,
    /// Emit gender/program/GPA attributes.
    pub attributes: bool,
}

impl SyntheticConfig {
    /// Four basic layers (strong/weak × offline/online) with reciprocal
    /// strong ties and mostly one-way weak ties, plus the five aggregates.
    pub fn demo(seed: u64, nodes: usize) -> Self {
        SyntheticConfig {
            seed,
            nodes,
            layers: vec![
                LayerParams::new("strong_off", 0.022, 0.85),
                LayerParams::new("weak_off", 0.035, 0.15),
                LayerParams::new("strong_on", 0.014, 0.85),
                LayerParams::new("weak_on", 0.035, 0.15),
            ],
            aggregates: crate::survey_layer_specs().into_iter().filter(|s| !s.is_basic()).collect(),
            attributes: true,
        }
    }

    pub fn layer_specs(&self) -> Vec<LayerSpec> {
        self.layers.iter().map(|l| LayerSpec::basic(&l.name)).chain(self.aggregates.iter().cloned()).collect()
    }
}

/// Generated graph together with the raw rows it was built from.
#[derive(Debug, Clone)]
pub struct SyntheticDataset {
    pub config: SyntheticConfig,
    pub labels: Vec<String>,
    pub edges: Vec<(String, String, String)>,
    /// `(node, key, value)` with GPA as a number.
    pub attribute_rows: Vec<(String, String, String)>,
    pub graph: MultiplexGraph,
    pub attributes: AttributeTable,
}

fn unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

fn pick<'a>(rng: &mut ChaCha8Rng, options: &[&'a str]) -> &'a str {
    options[(rng.next_u64() % options.len() as u64) as usize]
}

pub fn gpa_buckets() -> BucketRules {
    [(
        "gpa".to_owned(),
        vec![Bucket::new("low", 6.0, 7.0), Bucket::new("mid", 7.0, 9.0), Bucket::closed("high", 9.0, 10.0)],
    )]
    .into_iter()
    .collect()
}

fn gpa_label(x: f64) -> &'static str {
    match x {
        x if x < 7.0 => "low",
        x if x < 9.0 => "mid",
        _ => "high",
    }
}

pub fn generate_synthetic(config: &SyntheticConfig) -> Result<SyntheticDataset, SyntheticError> {
    if config.nodes < 2 {
        return Err(SyntheticError::InvalidParameter(format!("need at least 2 nodes, got {}", config.nodes)));
    }
    for l in &config.layers {
        for (what, p) in [("edge_probability", l.edge_probability), ("mutuality", l.mutuality)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(SyntheticError::InvalidParameter(format!("{what} of layer {:?} is {p}", l.name)));
            }
        }
    }

    let n = config.nodes;
    let width = (n - 1).to_string().len();
    let labels: Vec<String> = (0..n).map(|i| format!("n{i:0width$}")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let mut edges = Vec::new();
    for layer in &config.layers {
        for i in 0..n {
            for j in i + 1..n {
                if unit(&mut rng) >= layer.edge_probability {
                    continue;
                }
                let (a, b) = (&labels[i], &labels[j]);
                if unit(&mut rng) < layer.mutuality {
                    edges.push((a.clone(), b.clone(), layer.name.clone()));
                    edges.push((b.clone(), a.clone(), layer.name.clone()));
                } else if rng.next_u64() & 1 == 0 {
                    edges.push((a.clone(), b.clone(), layer.name.clone()));
                } else {
                    edges.push((b.clone(), a.clone(), layer.name.clone()));
                }
            }
        }
    }

    let mut attribute_rows = Vec::new();
    let mut attributes = AttributeTable::new();
    if config.attributes {
        for label in &labels {
            let gender = pick(&mut rng, &["F", "M"]);
            let program = pick(&mut rng, &["cs", "ee", "math"]);
            let gpa = 60 + (rng.next_u64() % 41);
            let gpa_text = format!("{}.{}", gpa / 10, gpa % 10);
            attributes.insert(label.clone(), format!("gender:{gender}"));
            attributes.insert(label.clone(), format!("program:{program}"));
            attributes.insert(label.clone(), format!("gpa:{}", gpa_label(gpa as f64 / 10.0)));
            attribute_rows.push((label.clone(), "gender".into(), gender.into()));
            attribute_rows.push((label.clone(), "program".into(), program.into()));
            attribute_rows.push((label.clone(), "gpa".into(), gpa_text));
        }
    }

    let graph = build_graph(labels.iter().cloned(), &config.layer_specs(), &edges)?;
    Ok(SyntheticDataset { config: config.clone(), labels, edges, attribute_rows, graph, attributes })
}

impl SyntheticDataset {
    /// The manifest describing [`SyntheticDataset::write_to`] output.
    pub fn manifest(&self) -> DatasetManifest {
        let with_attributes = self.config.attributes;
        DatasetManifest {
            node_file: "nodes.txt".into(),
            edge_file: "edges.csv".into(),
            attribute_file: with_attributes.then(|| "attributes.csv".into()),
            layers: self.config.layer_specs(),
            pairs: Vec::new(),
            attribute_buckets: if with_attributes { gpa_buckets() } else { BucketRules::new() },
            delimiter: None,
        }
    }

    /// Writes `manifest.json`, `nodes.txt`, `edges.csv` and (when enabled)
    /// `attributes.csv` into `dir`.
    pub fn write_to(&self, dir: &Path) -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        let mut nodes = String::new();
        for l in &self.labels {
            nodes.push_str(l);
            nodes.push('\n');
        }
        fs::write(dir.join("nodes.txt"), nodes)?;

        let mut edges = String::from("source,target,layer\n");
        for (s, t, l) in &self.edges {
            edges.push_str(&format!("{s},{t},{l}\n"));
        }
        fs::write(dir.join("edges.csv"), edges)?;

        if self.config.attributes {
            let mut rows = String::from("node,key,value\n");
            for (n, k, v) in &self.attribute_rows {
                rows.push_str(&format!("{n},{k},{v}\n"));
            }
            fs::write(dir.join("attributes.csv"), rows)?;
        }
        fs::write(dir.join("manifest.json"), self.manifest().to_json())
    }
}
