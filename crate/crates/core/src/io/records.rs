//! Edge, node and attribute file parsers.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::delimited::{parse_table, Delimiter, SkippedLine};
use super::ParseError;
use crate::exogenous::AttributeTable;
use crate::graph::EdgeTriple;

pub const EDGE_HEADER: [&str; 3] = ["source", "target", "layer"];
pub const ATTRIBUTE_HEADER: [&str; 3] = ["node", "key", "value"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub source: String,
    pub target: String,
    pub layer: String,
    /// 1-based line in the source text.
    pub line: usize,
}

impl EdgeTriple for EdgeRecord {
    fn parts(&self) -> (&str, &str, &str) {
        (&self.source, &self.target, &self.layer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedEdges {
    pub records: Vec<EdgeRecord>,
    pub skipped: Vec<SkippedLine>,
}

/// Parses a `source,target,layer` edge list. The delimiter is sniffed from
/// the header unless given.
pub fn parse_edges(input: &str, delimiter: Option<Delimiter>) -> Result<ParsedEdges, ParseError> {
    let table = parse_table(input, &EDGE_HEADER, delimiter)?;
    let records = table
        .rows
        .into_iter()
        .map(|row| {
            let [source, target, layer]: [String; 3] = row.fields.try_into().expect("width checked");
            EdgeRecord { source, target, layer, line: row.line }
        })
        .collect();
    Ok(ParsedEdges { records, skipped: table.skipped })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedNodes {
    pub labels: Vec<String>,
    pub skipped: Vec<SkippedLine>,
}

/// Parses a node file: one label per line, no header.
pub fn parse_nodes(input: &str) -> Result<ParsedNodes, ParseError> {
    let input = input.strip_prefix('\u{feff}').unwrap_or(input);
    let mut labels = Vec::new();
    let mut seen = HashSet::new();
    let mut skipped = Vec::new();
    for (k, text) in input.lines().enumerate() {
        let line = k + 1;
        let label = text.trim();
        if label.is_empty() {
            skipped.push(SkippedLine { line, reason: "blank".into() });
            continue;
        }
        if !seen.insert(label) {
            return Err(ParseError::DuplicateNode { line, label: label.to_owned() });
        }
        labels.push(label.to_owned());
    }
    Ok(ParsedNodes { labels, skipped })
}

/// One labeled numeric range. `min` is inclusive; `max` is exclusive unless
/// `include_max` is set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bucket {
    pub label: String,
    pub min: f64,
    pub max: f64,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub include_max: bool,
}

impl Bucket {
    pub fn new(label: &str, min: f64, max: f64) -> Self {
        Bucket { label: label.to_owned(), min, max, include_max: false }
    }

    pub fn closed(label: &str, min: f64, max: f64) -> Self {
        Bucket { include_max: true, ..Bucket::new(label, min, max) }
    }

    fn contains(&self, x: f64) -> bool {
        x >= self.min && (x < self.max || (self.include_max && x == self.max))
    }
}

/// Numeric attribute keys mapped to labeled ranges.
pub type BucketRules = BTreeMap<String, Vec<Bucket>>;

pub fn validate_buckets(rules: &BucketRules) -> Result<(), ParseError> {
    for (key, buckets) in rules {
        if buckets.is_empty() {
            return Err(ParseError::InvalidBucket { key: key.clone(), reason: "no buckets".into() });
        }
        for b in buckets {
            let ok = b.min.is_finite() && b.max.is_finite() && (b.min < b.max || (b.include_max && b.min == b.max));
            if !ok || b.label.trim().is_empty() {
                return Err(ParseError::InvalidBucket { key: key.clone(), reason: format!("bad range for {:?}", b.label) });
            }
        }
        let mut sorted: Vec<&Bucket> = buckets.iter().collect();
        sorted.sort_by(|a, b| a.min.total_cmp(&b.min));
        for w in sorted.windows(2) {
            let overlap = w[1].min < w[0].max || (w[0].include_max && w[1].min == w[0].max);
            if overlap {
                return Err(ParseError::InvalidBucket {
                    key: key.clone(),
                    reason: format!("{:?} overlaps {:?}", w[0].label, w[1].label),
                });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedAttributes {
    pub table: AttributeTable,
    /// `(line, node label)` for every data row, in file order.
    pub rows: Vec<(usize, String)>,
    pub duplicates: usize,
    pub skipped: Vec<SkippedLine>,
}

/// Parses `node,key,value` rows into `key:value` tokens, replacing values of
/// bucketed keys with their bucket label.
pub fn parse_attributes(
    input: &str,
    rules: &BucketRules,
    delimiter: Option<Delimiter>,
) -> Result<ParsedAttributes, ParseError> {
    validate_buckets(rules)?;
    let table = parse_table(input, &ATTRIBUTE_HEADER, delimiter)?;
    let mut out = AttributeTable::new();
    let mut rows = Vec::with_capacity(table.rows.len());
    let mut duplicates = 0;
    let mut used_keys = HashSet::new();
    for row in table.rows {
        let [node, key, value]: [String; 3] = row.fields.try_into().expect("width checked");
        let value = match rules.get(&key) {
            Some(buckets) => {
                used_keys.insert(key.clone());
                let bucket = value
                    .parse::<f64>()
                    .ok()
                    .and_then(|x| buckets.iter().find(|b| b.contains(x)))
                    .ok_or_else(|| ParseError::UnbucketedValue { line: row.line, key: key.clone(), value: value.clone() })?;
                bucket.label.clone()
            }
            None => value,
        };
        if !out.insert(node.clone(), format!("{key}:{value}")) {
            duplicates += 1;
        }
        rows.push((row.line, node));
    }
    if let Some(unused) = rules.keys().find(|k| !used_keys.contains(*k)) {
        return Err(ParseError::UnknownBucketKey(unused.clone()));
    }
    Ok(ParsedAttributes { table: out, rows, duplicates, skipped: table.skipped })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gpa_rules() -> BucketRules {
        [(
            "gpa".to_owned(),
            vec![Bucket::new("low", 6.0, 7.0), Bucket::new("mid", 7.0, 9.0), Bucket::closed("high", 9.0, 10.0)],
        )]
        .into_iter()
        .collect()
    }

    #[test]
    fn single_edge() {
        let p = parse_edges("source,target,layer\na,b,strong_off\n", None).unwrap();
        assert_eq!(
            p.records,
            vec![EdgeRecord { source: "a".into(), target: "b".into(), layer: "strong_off".into(), line: 2 }]
        );
    }

    #[test]
    fn malformed_line_number() {
        let text = "source,target,layer\na,b,x\na,c,x\nb,c,x\nc\n";
        assert_eq!(parse_edges(text, None), Err(ParseError::MalformedLine { line: 5, expected: 3, found: 1 }));
        let text = "source,target,layer\na,b,x\na,c,x\nb,c,x\nc,a\n";
        assert_eq!(parse_edges(text, None), Err(ParseError::MalformedLine { line: 5, expected: 3, found: 2 }));
    }

    #[test]
    fn empty_field() {
        assert_eq!(
            parse_edges("source,target,layer\na, ,x\n", None),
            Err(ParseError::EmptyField { line: 2, field: "target".into() })
        );
    }

    #[test]
    fn crlf_matches_lf() {
        let lf = "source,target,layer\na,b,x\nb,a,y\n";
        let crlf = lf.replace('\n', "\r\n");
        assert_eq!(parse_edges(lf, None).unwrap(), parse_edges(&crlf, None).unwrap());
    }

    #[test]
    fn missing_header() {
        assert!(matches!(parse_edges("a,b,x\n", None), Err(ParseError::MissingHeader { .. })));
    }

    #[test]
    fn nodes_file() {
        let p = parse_nodes("a\n b \n\nc\r\n").unwrap();
        assert_eq!(p.labels, vec!["a", "b", "c"]);
        assert_eq!(p.skipped.len(), 1);
        assert_eq!(parse_nodes("a\nb\na\n"), Err(ParseError::DuplicateNode { line: 3, label: "a".into() }));
    }

    #[test]
    fn attributes_and_buckets() {
        let text = "node,key,value\nn1,gender,F\nn1,gpa,8.7\nn1,gender,F\nn2,gpa,10\nn3,gpa,6\n";
        let p = parse_attributes(text, &gpa_rules(), None).unwrap();
        let n1: Vec<&str> = p.table.get("n1").iter().map(String::as_str).collect();
        assert_eq!(n1, vec!["gender:F", "gpa:mid"]);
        assert!(p.table.get("n2").contains("gpa:high"));
        assert!(p.table.get("n3").contains("gpa:low"));
        assert_eq!(p.duplicates, 1);
    }

    #[test]
    fn bucket_errors() {
        let out_of_range = "node,key,value\nn1,gpa,5.5\n";
        assert!(matches!(parse_attributes(out_of_range, &gpa_rules(), None), Err(ParseError::UnbucketedValue { line: 2, .. })));
        let not_numeric = "node,key,value\nn1,gpa,A\n";
        assert!(matches!(parse_attributes(not_numeric, &gpa_rules(), None), Err(ParseError::UnbucketedValue { .. })));
        let unused = "node,key,value\nn1,gender,F\n";
        assert_eq!(parse_attributes(unused, &gpa_rules(), None), Err(ParseError::UnknownBucketKey("gpa".into())));
        let mut overlapping = gpa_rules();
        overlapping.get_mut("gpa").unwrap().push(Bucket::new("odd", 8.0, 8.5));
        assert!(matches!(validate_buckets(&overlapping), Err(ParseError::InvalidBucket { .. })));
    }
}
