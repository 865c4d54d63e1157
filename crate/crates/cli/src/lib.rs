//! Report assembly and rendering for the `mplex` command.
//!
//! Every command produces a [`ReportBundle`]: a conventions block plus the
//! one table the command computes. Bundles render to JSON (full precision),
//! aligned text (4 decimals) or CSV.

use std::fmt::Write as _;

use mplex_core::endogenous::layer_metrics;
use mplex_core::exogenous::attribute_metrics;
use mplex_core::graph::GraphError;
use mplex_core::io::{Dataset, IngestionReport, LoadError};
use mplex_core::multiplex::{CrossLayerConfig, LayerPair, PairSide};
use mplex_core::structure::{
    layer_summary, layer_summary_verbose, structural_equivalence, wedge_closure, DegreeFilter, LayerSummary,
    StructureError, WedgeReport,
};
use serde::{Deserialize, Serialize};

pub const REPORT_FORMAT_VERSION: u32 = 1;
pub const TEXT_DECIMALS: usize = 4;

#[derive(Debug)]
pub enum CliError {
    /// Bad input files, flags or layer names.
    Input(String),
    /// Broken internal invariant.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<LoadError> for CliError {
    fn from(e: LoadError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<StructureError> for CliError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::InvalidTolerance(_) | StructureError::Graph(_) => CliError::Input(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

/// Computation conventions in force, echoed in every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Conventions {
    pub report_format: u32,
    pub tool_version: String,
    pub jaccard_both_empty: f64,
    pub tc_weight_layer: PairSide,
    pub tp_weight_layer: PairSide,
    pub averages_over: String,
    pub total_degree: String,
    pub assortativity: String,
    pub path_statistics: String,
    pub wedge_counting: String,
    pub equivalence_grouping: String,
    pub text_decimals: usize,
}

impl Default for Conventions {
    fn default() -> Self {
        let cross = CrossLayerConfig::default();
        Conventions {
            report_format: REPORT_FORMAT_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_owned(),
            jaccard_both_empty: 0.0,
            tc_weight_layer: cross.tc_weights,
            tp_weight_layer: cross.tp_weights,
            averages_over: "all_nodes".into(),
            total_degree: "edges_per_node".into(),
            assortativity: "undirected_projection_pearson".into(),
            path_statistics: "largest_scc_ordered_pairs".into(),
            wedge_counting: "center_unordered_pair_either_direction".into(),
            equivalence_grouping: "first_fit_pairwise_tolerance".into(),
            text_decimals: TEXT_DECIMALS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EndogenousRow {
    pub layer: String,
    pub r: f64,
    pub tc: f64,
    pub tp: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossRow {
    pub alpha: String,
    pub beta: String,
    pub r: f64,
    pub tc: f64,
    pub tp: f64,
    pub oi_out: f64,
    pub oi_in: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassRow {
    pub members: Vec<String>,
    pub r: f64,
    pub tc: f64,
    pub tp: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceListing {
    pub layer: String,
    pub tolerance: f64,
    pub filter: DegreeFilter,
    pub classes: Vec<ClassRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributeRow {
    pub node: String,
    pub layer: String,
    pub att_out: f64,
    pub att_in: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AttributeListing {
    pub layer: String,
    pub baseline: f64,
    pub rows: Vec<AttributeRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportBundle {
    pub command: String,
    pub conventions: Conventions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub layer_summaries: Option<Vec<LayerSummary>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endogenous_averages: Option<Vec<EndogenousRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_layer_table: Option<Vec<CrossRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceListing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedges: Option<WedgeReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attributes: Option<AttributeListing>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ingestion: Option<IngestionReport>,
}

impl ReportBundle {
    pub fn new(command: &str) -> Self {
        ReportBundle {
            command: command.to_owned(),
            conventions: Conventions::default(),
            layer_summaries: None,
            endogenous_averages: None,
            cross_layer_table: None,
            equivalence: None,
            wedges: None,
            attributes: None,
            ingestion: None,
        }
    }
}

/// One row per declared layer, in declaration order.
pub fn summary(ds: &Dataset, verbose: bool) -> ReportBundle {
    let rows = ds.graph.views().map(|v| if verbose { layer_summary_verbose(v) } else { layer_summary(v) }).collect();
    ReportBundle { layer_summaries: Some(rows), ..ReportBundle::new("summary") }
}

pub fn endogenous(ds: &Dataset) -> ReportBundle {
    let rows = ds
        .graph
        .views()
        .map(|v| {
            let a = layer_metrics(v).averages;
            EndogenousRow { layer: v.name().to_owned(), r: a.r, tc: a.tc, tp: a.tp }
        })
        .collect();
    ReportBundle { endogenous_averages: Some(rows), ..ReportBundle::new("endogenous") }
}

/// `pairs` followed by the reverse of each pair whose reverse is not
/// already listed; repeats are dropped.
pub fn with_reverses(pairs: &[(String, String)]) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    for p in pairs {
        if !out.contains(p) {
            out.push(p.clone());
        }
    }
    for (a, b) in pairs {
        let rev = (b.clone(), a.clone());
        if !out.contains(&rev) {
            out.push(rev);
        }
    }
    out
}

/// Pairs for the cross-layer table: the override, else the manifest's
/// list, else the survey pair list when its nine layers are declared.
pub fn resolve_pairs(ds: &Dataset, over: &[(String, String)]) -> Result<Vec<(String, String)>, CliError> {
    let base: Vec<(String, String)> = if !over.is_empty() {
        over.to_vec()
    } else if !ds.manifest.pairs.is_empty() {
        ds.manifest.pairs.clone()
    } else if mplex_core::declares_survey_layers(ds.graph.layer_names()) {
        return Ok(mplex_core::survey_pairs());
    } else {
        return Err(CliError::Input(
            "no layer pairs: list them in the manifest `pairs` field or pass --pair alpha:beta".into(),
        ));
    };
    for (a, b) in &base {
        for name in [a, b] {
            if !ds.graph.has_layer(name) {
                return Err(GraphError::UnknownLayer { name: name.clone(), record: None }.into());
            }
        }
    }
    Ok(with_reverses(&base))
}

pub fn cross(ds: &Dataset, over: &[(String, String)]) -> Result<ReportBundle, CliError> {
    let mut rows = Vec::new();
    for (a, b) in resolve_pairs(ds, over)? {
        let avg = LayerPair::new(&ds.graph, &a, &b)?.metrics().averages;
        rows.push(CrossRow { alpha: a, beta: b, r: avg.r, tc: avg.tc, tp: avg.tp, oi_out: avg.oi_out, oi_in: avg.oi_in });
    }
    Ok(ReportBundle { cross_layer_table: Some(rows), ..ReportBundle::new("cross") })
}

pub fn equiv(ds: &Dataset, layer: &str, tolerance: f64, filter: DegreeFilter) -> Result<ReportBundle, CliError> {
    let view = ds.graph.layer_view(layer)?;
    let active = (filter.d_out.is_some() || filter.d_in.is_some()).then_some(filter);
    let classes = structural_equivalence(view, tolerance, active)?
        .into_iter()
        .map(|c| ClassRow {
            members: c.members.iter().map(|&i| ds.graph.labels()[i.index()].clone()).collect(),
            r: c.r,
            tc: c.tc,
            tp: c.tp,
        })
        .collect();
    let listing = EquivalenceListing { layer: layer.to_owned(), tolerance, filter, classes };
    Ok(ReportBundle { equivalence: Some(listing), ..ReportBundle::new("equiv") })
}

pub fn wedges(ds: &Dataset, wedge_layer: &str, closing: &[String]) -> Result<ReportBundle, CliError> {
    if closing.is_empty() {
        return Err(CliError::Input("at least one --closing layer is required".into()));
    }
    let names: Vec<&str> = closing.iter().map(String::as_str).collect();
    let report = wedge_closure(&ds.graph, wedge_layer, &names)?;
    Ok(ReportBundle { wedges: Some(report), ..ReportBundle::new("wedges") })
}

pub fn attrs(ds: &Dataset, layer: &str) -> Result<ReportBundle, CliError> {
    let table = ds
        .attributes
        .as_ref()
        .ok_or_else(|| CliError::Input("MissingAttributes: the manifest declares no attribute_file".into()))?;
    let report = attribute_metrics(&ds.graph, layer, table)?;
    let rows = report
        .actors
        .iter()
        .map(|a| AttributeRow {
            node: ds.graph.labels()[a.node.index()].clone(),
            layer: a.layer.clone(),
            att_out: a.att_out,
            att_in: a.att_in,
        })
        .collect();
    let listing = AttributeListing { layer: report.layer, baseline: report.baseline, rows };
    Ok(ReportBundle { attributes: Some(listing), ..ReportBundle::new("attrs") })
}

pub fn validate(ds: &Dataset) -> ReportBundle {
    ReportBundle { ingestion: Some(ds.report.clone()), ..ReportBundle::new("validate") }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Real(f64),
    /// Undefined value: `NA` in text, empty in CSV.
    Missing,
}

impl Cell {
    fn real(x: Option<f64>) -> Cell {
        x.map_or(Cell::Missing, Cell::Real)
    }

    fn text(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(n) => n.to_string(),
            Cell::Real(x) => format!("{x:.prec$}", prec = TEXT_DECIMALS),
            Cell::Missing => "NA".into(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Text(s) => csv_field(s),
            Cell::Int(n) => n.to_string(),
            Cell::Real(x) => x.to_string(),
            Cell::Missing => String::new(),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// A titled rectangular table, the common shape behind text and CSV output.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub title: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

fn t(s: &str) -> Cell {
    Cell::Text(s.to_owned())
}

fn int(n: usize) -> Cell {
    Cell::Int(n as u64)
}

pub fn tables(b: &ReportBundle) -> Vec<Table> {
    let mut out = Vec::new();
    if let Some(rows) = &b.layer_summaries {
        let verbose = rows.iter().any(|r| r.directed_assortativity.is_some());
        let mut columns = vec!["layer", "nodes", "edges", "avg_total_degree", "assortativity", "scc_nodes", "scc_edges", "avg_path", "diameter"];
        if verbose {
            columns.extend(["assort_out_out", "assort_out_in", "assort_in_out", "assort_in_in"]);
        }
        let rows = rows
            .iter()
            .map(|r| {
                let mut row = vec![
                    t(&r.layer),
                    int(r.n_nodes),
                    int(r.n_edges),
                    Cell::Real(r.avg_total_degree),
                    Cell::real(r.assortativity),
                    int(r.scc_nodes),
                    int(r.scc_edges),
                    Cell::Real(r.avg_path),
                    int(r.diameter),
                ];
                if verbose {
                    let d = r.directed_assortativity.unwrap_or_default();
                    row.extend([d.out_out, d.out_in, d.in_out, d.in_in].map(Cell::real));
                }
                row
            })
            .collect();
        out.push(Table { title: "layer summary".into(), columns, rows });
    }
    if let Some(rows) = &b.endogenous_averages {
        out.push(Table {
            title: "endogenous averages".into(),
            columns: vec!["layer", "r", "tc", "tp"],
            rows: rows.iter().map(|r| vec![t(&r.layer), Cell::Real(r.r), Cell::Real(r.tc), Cell::Real(r.tp)]).collect(),
        });
    }
    if let Some(rows) = &b.cross_layer_table {
        out.push(Table {
            title: "cross-layer averages".into(),
            columns: vec!["alpha", "beta", "r", "tc", "tp", "oi_out", "oi_in"],
            rows: rows
                .iter()
                .map(|r| {
                    vec![
                        t(&r.alpha),
                        t(&r.beta),
                        Cell::Real(r.r),
                        Cell::Real(r.tc),
                        Cell::Real(r.tp),
                        Cell::Real(r.oi_out),
                        Cell::Real(r.oi_in),
                    ]
                })
                .collect(),
        });
    }
    if let Some(e) = &b.equivalence {
        out.push(Table {
            title: format!("equivalence classes on {} (tolerance {})", e.layer, e.tolerance),
            columns: vec!["class", "size", "r", "tc", "tp", "members"],
            rows: e
                .classes
                .iter()
                .enumerate()
                .map(|(k, c)| {
                    vec![
                        int(k + 1),
                        int(c.members.len()),
                        Cell::Real(c.r),
                        Cell::Real(c.tc),
                        Cell::Real(c.tp),
                        Cell::Text(c.members.join(" ")),
                    ]
                })
                .collect(),
        });
    }
    if let Some(w) = &b.wedges {
        let mut rows: Vec<Vec<Cell>> = w
            .closed_by
            .iter()
            .map(|s| vec![t(&s.layer), Cell::Int(s.closed), Cell::Int(w.total_wedges), Cell::Real(s.percent)])
            .collect();
        rows.push(vec![t("any"), Cell::Int(w.any.closed), Cell::Int(w.total_wedges), Cell::Real(w.any.percent)]);
        let empty = if w.empty { ", no wedges" } else { "" };
        out.push(Table {
            title: format!("wedge closure on {}{empty}", w.wedge_layer),
            columns: vec!["closing_layer", "closed", "wedges", "percent"],
            rows,
        });
    }
    if let Some(a) = &b.attributes {
        out.push(Table {
            title: "attribute similarity".into(),
            columns: vec!["node", "layer", "att_out", "att_in"],
            rows: a
                .rows
                .iter()
                .map(|r| vec![t(&r.node), t(&r.layer), Cell::Real(r.att_out), Cell::Real(r.att_in)])
                .collect(),
        });
        out.push(Table {
            title: "un-networked baseline".into(),
            columns: vec!["layer", "att"],
            rows: vec![vec![t(&a.layer), Cell::Real(a.baseline)]],
        });
    }
    if let Some(r) = &b.ingestion {
        out.push(Table {
            title: "ingestion".into(),
            columns: vec!["item", "count"],
            rows: vec![
                vec![t("nodes"), int(r.nodes)],
                vec![t("edge_records"), int(r.edge_records)],
                vec![t("duplicates_collapsed"), int(r.duplicates_collapsed)],
                vec![t("attribute_rows"), int(r.attribute_rows)],
                vec![t("attribute_duplicates"), int(r.attribute_duplicates)],
                vec![t("skipped_lines"), int(r.skipped.len())],
            ],
        });
        out.push(Table {
            title: "layer edges".into(),
            columns: vec!["layer", "edges"],
            rows: r.layer_edges.iter().map(|l| vec![t(&l.layer), int(l.edges)]).collect(),
        });
        if !r.skipped.is_empty() {
            out.push(Table {
                title: "skipped lines".into(),
                columns: vec!["file", "line", "reason"],
                rows: r.skipped.iter().map(|s| vec![t(&s.file), int(s.line), t(&s.reason)]).collect(),
            });
        }
    }
    out
}

pub fn render_json(b: &ReportBundle) -> String {
    let mut s = serde_json::to_string_pretty(b).expect("report serializes");
    s.push('\n');
    s
}

/// Aligned columns, numbers right-aligned; `bold` wraps titles in ANSI
/// bold.
pub fn render_text(b: &ReportBundle, bold: bool) -> String {
    let mut s = String::new();
    for (k, table) in tables(b).iter().enumerate() {
        if k > 0 {
            s.push('\n');
        }
        if bold {
            let _ = writeln!(s, "\x1b[1m{}\x1b[0m", table.title);
        } else {
            let _ = writeln!(s, "{}", table.title);
        }
        let cells: Vec<Vec<String>> = table.rows.iter().map(|r| r.iter().map(Cell::text).collect()).collect();
        let widths: Vec<usize> = (0..table.columns.len())
            .map(|c| cells.iter().map(|r| r[c].chars().count()).chain([table.columns[c].len()]).max().unwrap_or(0))
            .collect();
        let line = |vals: Vec<(String, bool)>| {
            let parts: Vec<String> = vals
                .iter()
                .zip(&widths)
                .map(|((v, right), w)| if *right { format!("{v:>w$}") } else { format!("{v:<w$}") })
                .collect();
            parts.join("  ").trim_end().to_owned()
        };
        let numeric: Vec<bool> = (0..table.columns.len())
            .map(|c| table.rows.iter().all(|r| !matches!(r[c], Cell::Text(_))) && !table.rows.is_empty())
            .collect();
        let header = table.columns.iter().zip(&numeric).map(|(h, &n)| (h.to_string(), n)).collect();
        let _ = writeln!(s, "{}", line(header));
        for row in cells {
            let _ = writeln!(s, "{}", line(row.into_iter().zip(numeric.iter().copied()).collect()));
        }
    }
    s
}

/// Each table as a CSV block preceded by a `# title` line; blocks are
/// separated by a blank line.
pub fn render_csv(b: &ReportBundle) -> String {
    let mut s = String::new();
    for (k, table) in tables(b).iter().enumerate() {
        if k > 0 {
            s.push('\n');
        }
        let _ = writeln!(s, "# {}", table.title);
        let _ = writeln!(s, "{}", table.columns.join(","));
        for row in &table.rows {
            let _ = writeln!(s, "{}", row.iter().map(Cell::csv).collect::<Vec<_>>().join(","));
        }
    }
    s
}

pub fn render(b: &ReportBundle, format: Format, bold: bool) -> String {
    match format {
        Format::Json => render_json(b),
        Format::Text => render_text(b, bold),
        Format::Csv => render_csv(b),
    }
}

/// Bold titles only for an interactive terminal with `NO_COLOR` unset or
/// empty.
pub fn use_color(no_color: Option<&std::ffi::OsStr>, is_terminal: bool) -> bool {
    is_terminal && no_color.is_none_or(|v| v.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundle() -> ReportBundle {
        ReportBundle {
            endogenous_averages: Some(vec![
                EndogenousRow { layer: "cycle".into(), r: 0.0, tc: 1.0, tp: 0.0 },
                EndogenousRow { layer: "x,y".into(), r: 1.0 / 3.0, tc: 0.5, tp: 2.0 / 3.0 },
            ]),
            ..ReportBundle::new("endogenous")
        }
    }

    #[test]
    fn text_rounds_to_four_places() {
        let text = render_text(&bundle(), false);
        assert!(text.contains("0.3333"));
        assert!(text.contains("0.6667"));
        assert!(!text.contains('\x1b'));
        assert!(render_text(&bundle(), true).starts_with("\x1b[1m"));
    }

    #[test]
    fn csv_keeps_full_precision_and_quotes() {
        let csv = render_csv(&bundle());
        assert!(csv.contains("\"x,y\",0.3333333333333333,0.5,0.6666666666666666"));
        assert!(csv.starts_with("# endogenous averages\nlayer,r,tc,tp\n"));
    }

    #[test]
    fn json_round_trips() {
        let b = bundle();
        let back: ReportBundle = serde_json::from_str(&render_json(&b)).unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn color_rules() {
        assert!(use_color(None, true));
        assert!(use_color(Some("".as_ref()), true));
        assert!(!use_color(Some("1".as_ref()), true));
        assert!(!use_color(None, false));
    }

    #[test]
    fn reverses_appended_once() {
        let p = |a: &str, b: &str| (a.to_owned(), b.to_owned());
        assert_eq!(
            with_reverses(&[p("a", "b"), p("b", "a"), p("c", "c"), p("a", "d")]),
            vec![p("a", "b"), p("b", "a"), p("c", "c"), p("a", "d"), p("d", "a")]
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Input(String::new()).exit_code(), 2);
        assert_eq!(CliError::Internal(String::new()).exit_code(), 3);
        let e: CliError = StructureError::InvalidTolerance(-1.0).into();
        assert_eq!(e.exit_code(), 2);
    }
}
