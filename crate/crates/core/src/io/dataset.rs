use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::delimited::SkippedLine;
use super::manifest::DatasetManifest;
use super::records::{parse_attributes, parse_edges, parse_nodes};
use super::{LoadError, ManifestError};
use crate::exogenous::AttributeTable;
use crate::graph::{build_graph, GraphError, MultiplexGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayerEdgeCount {
    pub layer: String,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedRecord {
    pub file: String,
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestionReport {
    pub nodes: usize,
    pub edge_records: usize,
    pub layer_edges: Vec<LayerEdgeCount>,
    pub duplicates_collapsed: usize,
    pub attribute_rows: usize,
    pub attribute_duplicates: usize,
    pub skipped: Vec<SkippedRecord>,
}

#[derive(Debug, Clone)]
pub struct Dataset {
    pub manifest: DatasetManifest,
    pub graph: MultiplexGraph,
    pub attributes: Option<AttributeTable>,
    pub report: IngestionReport,
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|e| LoadError::Io { path: path.to_path_buf(), message: e.to_string() })
}

fn skipped(file: &Path, lines: Vec<SkippedLine>) -> impl Iterator<Item = SkippedRecord> + '_ {
    lines.into_iter().map(move |s| SkippedRecord { file: file.display().to_string(), line: s.line, reason: s.reason })
}

/// Reads and validates a manifest file.
pub fn read_manifest(path: &Path) -> Result<DatasetManifest, LoadError> {
    DatasetManifest::from_json(&read(path)?).map_err(|source| LoadError::Manifest { path: path.to_path_buf(), source })
}

/// Loads the manifest at `path` and everything it references.
pub fn load_manifest_file(path: &Path) -> Result<Dataset, LoadError> {
    let manifest = read_manifest(path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    load_dataset(manifest, &base)
}

/// Validates `manifest` before touching any file, then parses the node,
/// edge and optional attribute files and builds the graph.
pub fn load_dataset(manifest: DatasetManifest, base: &Path) -> Result<Dataset, LoadError> {
    manifest.validate()?;

    let node_path = manifest.resolve(base, &manifest.node_file);
    let nodes = parse_nodes(&read(&node_path)?).map_err(|source| LoadError::Parse { path: node_path.clone(), source })?;

    let edge_path = manifest.resolve(base, &manifest.edge_file);
    let edges = parse_edges(&read(&edge_path)?, manifest.delimiter)
        .map_err(|source| LoadError::Parse { path: edge_path.clone(), source })?;

    let graph = build_graph(nodes.labels.iter().cloned(), &manifest.layers, &edges.records).map_err(|source| {
        let record = match &source {
            GraphError::UnknownNode { record, .. } | GraphError::UnknownLayer { record, .. } => *record,
            GraphError::EdgeOnAggregate { record, .. } | GraphError::SelfTie { record, .. } => Some(*record),
            _ => None,
        };
        LoadError::Graph { path: edge_path.clone(), line: record.map(|r| edges.records[r].line), source }
    })?;

    let mut skipped_records: Vec<SkippedRecord> = skipped(&node_path, nodes.skipped).collect();
    skipped_records.extend(skipped(&edge_path, edges.skipped));

    let (attributes, attribute_rows, attribute_duplicates) = match &manifest.attribute_file {
        None => (None, 0, 0),
        Some(p) => {
            let path = manifest.resolve(base, p);
            let parsed = parse_attributes(&read(&path)?, &manifest.attribute_buckets, manifest.delimiter)
                .map_err(|source| LoadError::Parse { path: path.clone(), source })?;
            if let Some((line, label)) = parsed.rows.iter().find(|(_, l)| graph.node_id(l).is_none()) {
                return Err(LoadError::Graph {
                    path,
                    line: Some(*line),
                    source: GraphError::UnknownNode { label: label.clone(), record: None },
                });
            }
            skipped_records.extend(skipped(&path, parsed.skipped));
            (Some(parsed.table), parsed.rows.len(), parsed.duplicates)
        }
    };

    let report = IngestionReport {
        nodes: graph.node_count(),
        edge_records: edges.records.len(),
        layer_edges: graph
            .views()
            .map(|v| LayerEdgeCount { layer: v.name().to_owned(), edges: v.edge_count() })
            .collect(),
        duplicates_collapsed: graph.duplicates_collapsed(),
        attribute_rows,
        attribute_duplicates,
        skipped: skipped_records,
    };
    Ok(Dataset { manifest, graph, attributes, report })
}

impl From<ManifestError> for LoadError {
    fn from(source: ManifestError) -> Self {
        LoadError::Manifest { path: PathBuf::from("<manifest>"), source }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::LayerSpec;

    fn write(dir: &Path, name: &str, body: &str) {
        fs::write(dir.join(name), body).unwrap();
    }

    fn manifest(layers: Vec<LayerSpec>) -> DatasetManifest {
        DatasetManifest {
            node_file: "nodes.txt".into(),
            edge_file: "edges.csv".into(),
            attribute_file: None,
            layers,
            pairs: vec![],
            attribute_buckets: Default::default(),
            delimiter: None,
        }
    }

    #[test]
    fn nine_layer_dataset() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "nodes.txt", "a\nb\nc\n");
        write(dir.path(), "edges.csv", "source,target,layer\na,b,strong_off\nb,c,weak_on\na,b,strong_off\n\n");
        let ds = load_dataset(manifest(crate::survey_layer_specs()), dir.path()).unwrap();
        assert_eq!(ds.graph.layer_count(), 9);
        assert_eq!(ds.report.duplicates_collapsed, 1);
        assert_eq!(ds.report.skipped.len(), 1);
        assert_eq!(ds.report.layer_edges.last().unwrap(), &LayerEdgeCount { layer: "all".into(), edges: 2 });

        let again = load_dataset(manifest(crate::survey_layer_specs()), dir.path()).unwrap();
        assert_eq!(again.graph, ds.graph);
    }

    #[test]
    fn validation_precedes_file_access() {
        let dir = tempfile::tempdir().unwrap();
        let bad = manifest(vec![LayerSpec::basic("s"), LayerSpec::aggregate("all", ["s", "ghost"])]);
        // no files exist: the error must still be about the manifest
        assert!(matches!(load_dataset(bad, dir.path()), Err(LoadError::Manifest { .. })));
    }

    #[test]
    fn unknown_node_reports_line() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "nodes.txt", "a\nb\n");
        write(dir.path(), "edges.csv", "source,target,layer\na,b,s\n\nb,zed,s\n");
        let err = load_dataset(manifest(vec![LayerSpec::basic("s")]), dir.path()).unwrap_err();
        match err {
            LoadError::Graph { line, source: GraphError::UnknownNode { label, .. }, .. } => {
                assert_eq!(line, Some(4));
                assert_eq!(label, "zed");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn attribute_rows_must_name_known_nodes() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "nodes.txt", "a\nb\n");
        write(dir.path(), "edges.csv", "source,target,layer\n");
        write(dir.path(), "attrs.csv", "node,key,value\na,g,F\nq,g,M\n");
        let mut m = manifest(vec![LayerSpec::basic("s")]);
        m.attribute_file = Some("attrs.csv".into());
        assert!(matches!(load_dataset(m, dir.path()), Err(LoadError::Graph { line: Some(3), .. })));
    }
}
