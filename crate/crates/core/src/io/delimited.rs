//! Line-oriented delimited text with a mandatory header row.
//!
//! No quoting: fields are split on the delimiter and whitespace-trimmed.
//! Blank lines are skipped and reported, never silently dropped.

use serde::{Deserialize, Serialize};

use super::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Delimiter {
    Comma,
    Tab,
}

impl Delimiter {
    pub fn as_char(self) -> char {
        match self {
            Delimiter::Comma => ',',
            Delimiter::Tab => '\t',
        }
    }

    /// Tab if the header line contains one, comma otherwise.
    pub fn sniff(header: &str) -> Self {
        if header.contains('\t') {
            Delimiter::Tab
        } else {
            Delimiter::Comma
        }
    }
}

/// A line that carried no record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedLine {
    pub line: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Row {
    pub line: usize,
    pub fields: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Table {
    pub rows: Vec<Row>,
    pub skipped: Vec<SkippedLine>,
}

/// Splits `input` into rows of exactly `header.len()` non-empty fields.
/// Line numbers are 1-based; `\r\n` and `\n` endings are equivalent.
pub(crate) fn parse_table(input: &str, header: &[&str], delimiter: Option<Delimiter>) -> Result<Table, ParseError> {
    let input = input.strip_prefix('\u{feff}').unwrap_or(input);
    let mut lines = input.lines().enumerate().map(|(k, l)| (k + 1, l));
    let mut skipped = Vec::new();

    let header_text = loop {
        match lines.next() {
            None => return Err(ParseError::MissingHeader { expected: header.join(",") }),
            Some((n, l)) if l.trim().is_empty() => skipped.push(SkippedLine { line: n, reason: "blank".into() }),
            Some((_, text)) => break text,
        }
    };
    let delim = delimiter.unwrap_or_else(|| Delimiter::sniff(header_text)).as_char();
    let got: Vec<&str> = header_text.split(delim).map(str::trim).collect();
    if got != header {
        return Err(ParseError::MissingHeader { expected: header.join(",") });
    }

    let mut rows = Vec::new();
    for (line, text) in lines {
        if text.trim().is_empty() {
            skipped.push(SkippedLine { line, reason: "blank".into() });
            continue;
        }
        let fields: Vec<String> = text.split(delim).map(|f| f.trim().to_owned()).collect();
        if fields.len() != header.len() {
            return Err(ParseError::MalformedLine { line, expected: header.len(), found: fields.len() });
        }
        if let Some(col) = fields.iter().position(String::is_empty) {
            return Err(ParseError::EmptyField { line, field: header[col].to_owned() });
        }
        rows.push(Row { line, fields });
    }
    Ok(Table { rows, skipped })
}
