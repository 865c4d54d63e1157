use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::delimited::Delimiter;
use super::records::{validate_buckets, BucketRules};
use super::ManifestError;
use crate::graph::{validate_layer_specs, LayerSpec};

/// Describes one dataset on disk. Relative paths are resolved against the
/// manifest's own directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetManifest {
    pub node_file: PathBuf,
    pub edge_file: PathBuf,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attribute_file: Option<PathBuf>,
    pub layers: Vec<LayerSpec>,
    /// Ordered layer pairs for cross-layer reports.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "BucketRules::is_empty")]
    pub attribute_buckets: BucketRules,
    /// Delimiter of the edge and attribute files; sniffed from each header
    /// when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delimiter: Option<Delimiter>,
}

impl DatasetManifest {
    /// Parses and validates a manifest document.
    pub fn from_json(text: &str) -> Result<Self, ManifestError> {
        let m: DatasetManifest = serde_json::from_str(text).map_err(|e| ManifestError::Json(e.to_string()))?;
        m.validate()?;
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }

    /// Structural checks that need no file access.
    pub fn validate(&self) -> Result<(), ManifestError> {
        if self.layers.is_empty() {
            return Err(ManifestError::NoLayers);
        }
        validate_layer_specs(&self.layers)?;
        for (a, b) in &self.pairs {
            for name in [a, b] {
                if !self.layers.iter().any(|l| &l.name == name) {
                    return Err(ManifestError::UnknownPairLayer(name.clone()));
                }
            }
        }
        validate_buckets(&self.attribute_buckets)?;
        Ok(())
    }

    pub fn resolve(&self, base: &Path, p: &Path) -> PathBuf {
        if p.is_absolute() {
            p.to_path_buf()
        } else {
            base.join(p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOOD: &str = r#"{
        "node_file": "nodes.txt",
        "edge_file": "edges.csv",
        "layers": [
            {"name": "s", "kind": "basic"},
            {"name": "w", "kind": "basic"},
            {"name": "all", "kind": "aggregate", "constituents": ["s", "w"]}
        ],
        "pairs": [["s", "w"], ["w", "s"]],
        "attribute_buckets": {"gpa": [{"label": "low", "min": 0, "max": 5}]}
    }"#;

    #[test]
    fn parses_and_validates() {
        let m = DatasetManifest::from_json(GOOD).unwrap();
        assert_eq!(m.layers.len(), 3);
        assert_eq!(m.pairs[1], ("w".to_owned(), "s".to_owned()));
        assert_eq!(DatasetManifest::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = GOOD.replacen("\"node_file\"", "\"colour\": 1, \"node_file\"", 1);
        assert!(matches!(DatasetManifest::from_json(&text), Err(ManifestError::Json(_))));
    }

    #[test]
    fn bad_references_rejected() {
        let text = GOOD.replace("[\"s\", \"w\"]}", "[\"s\", \"x\"]}");
        assert!(matches!(DatasetManifest::from_json(&text), Err(ManifestError::Graph(_))));
        let text = GOOD.replace("[[\"s\", \"w\"]", "[[\"s\", \"q\"]");
        assert_eq!(DatasetManifest::from_json(&text), Err(ManifestError::UnknownPairLayer("q".into())));
    }
}
