//! Dataset ingestion, canonical export and synthetic generation.

mod dataset;
mod delimited;
pub mod export;
mod manifest;
mod records;
mod synthetic;

use std::path::PathBuf;

use thiserror::Error;

use crate::graph::GraphError;

pub use dataset::{load_dataset, load_manifest_file, read_manifest, Dataset, IngestionReport, LayerEdgeCount, SkippedRecord};
pub use delimited::{Delimiter, SkippedLine};
pub use export::{from_canonical_json, to_canonical_json, GraphExport};
pub use manifest::DatasetManifest;
pub use records::{
    parse_attributes, parse_edges, parse_nodes, validate_buckets, Bucket, BucketRules, EdgeRecord, ParsedAttributes,
    ParsedEdges, ParsedNodes,
};
pub use synthetic::{generate_synthetic, gpa_buckets, LayerParams, SyntheticConfig, SyntheticDataset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header row; expected `{expected}`")]
    MissingHeader { expected: String },
    #[error("line {line}: expected {expected} fields, found {found}")]
    MalformedLine { line: usize, expected: usize, found: usize },
    #[error("line {line}: empty {field} field")]
    EmptyField { line: usize, field: String },
    #[error("line {line}: node {label:?} listed twice")]
    DuplicateNode { line: usize, label: String },
    #[error("line {line}: value {value:?} of {key:?} falls in no bucket")]
    UnbucketedValue { line: usize, key: String, value: String },
    #[error("bucketing rule for {0:?} matches no attribute row")]
    UnknownBucketKey(String),
    #[error("invalid buckets for {key:?}: {reason}")]
    InvalidBucket { key: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ManifestError {
    #[error("manifest JSON: {0}")]
    Json(String),
    #[error("manifest declares no layers")]
    NoLayers,
    #[error("pair list references undeclared layer {0:?}")]
    UnknownPairLayer(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Buckets(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("{}: {source}", .path.display())]
    Manifest { path: PathBuf, source: ManifestError },
    #[error("{}: {message}", .path.display())]
    Io { path: PathBuf, message: String },
    #[error("{}: {source}", .path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{}{}: {source}", .path.display(), .line.map(|l| format!(":{l}")).unwrap_or_default())]
    Graph { path: PathBuf, line: Option<usize>, source: GraphError },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntheticError {
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("graph JSON: {0}")]
    Json(String),
    #[error("layer {0:?} edges do not match its declaration")]
    LayerMismatch(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
