//! Rendering command results as JSON, CSV, DOT or plain text.

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde_json::{Map, Value};

/// Version tag carried by enveloped JSON.
pub const SCHEMA: &str = "cambrian-pop/1";

/// Output format selected by `--format`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Compact JSON on one line.
    Json,
    /// Comma-separated rows with a header.
    Csv,
    /// Graphviz source.
    Dot,
    /// Aligned columns, or indented JSON when there is no table.
    Text,
}

/// Rows for CSV and text output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    /// Column names.
    pub header: Vec<String>,
    /// Cells, one vector per row.
    pub rows: Vec<Vec<String>>,
}

impl Table {
    /// A table with the given column names.
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    /// Appends a row.
    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// A command's result in every format it supports.
#[derive(Clone, Debug)]
pub struct Output {
    /// JSON payload; always present.
    pub json: Value,
    /// Tabular view, if the command has one.
    pub table: Option<Table>,
    /// Graphviz view, if the command has one.
    pub dot: Option<String>,
    /// A verification ran and failed.
    pub failed: bool,
}

impl Output {
    /// JSON-only output.
    pub fn json(json: Value) -> Self {
        Output { json, table: None, dot: None, failed: false }
    }

    /// Adds a table.
    pub fn with_table(mut self, t: Table) -> Self {
        self.table = Some(t);
        self
    }

    /// Adds DOT source.
    pub fn with_dot(mut self, d: String) -> Self {
        self.dot = Some(d);
        self
    }

    /// Renders in `format`; `envelope` adds the schema tag to JSON objects.
    pub fn render(&self, format: Format, envelope: bool, command: &str) -> Result<String> {
        match format {
            Format::Json => {
                let v = if envelope { with_schema(&self.json) } else { self.json.clone() };
                Ok(serde_json::to_string(&v)?)
            }
            Format::Text => match &self.table {
                Some(t) => Ok(text_table(t)),
                None => Ok(serde_json::to_string_pretty(&self.json)?),
            },
            Format::Csv => match &self.table {
                Some(t) => Ok(csv(t)),
                None => bail!("--format csv is not available for `{command}`"),
            },
            Format::Dot => match &self.dot {
                Some(d) => Ok(d.trim_end().to_string()),
                None => bail!("--format dot is not available for `{command}`"),
            },
        }
    }
}

fn with_schema(v: &Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), Value::String(SCHEMA.into()));
    match v {
        Value::Object(o) => m.extend(o.clone()),
        other => {
            m.insert("data".into(), other.clone());
        }
    }
    Value::Object(m)
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// RFC 4180 style CSV.
pub fn csv(t: &Table) -> String {
    std::iter::once(&t.header)
        .chain(&t.rows)
        .map(|r| r.iter().map(|c| csv_cell(c)).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("\n")
}

fn text_table(t: &Table) -> String {
    let mut width: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
    for r in &t.rows {
        for (i, c) in r.iter().enumerate() {
            width[i] = width[i].max(c.chars().count());
        }
    }
    std::iter::once(&t.header)
        .chain(&t.rows)
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(i, c)| format!("{c:<w$}", w = width[i]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn formats() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec!["1".into(), "x,y".into()]);
        let o = Output::json(json!({"result": "25314"})).with_table(t);
        assert_eq!(o.render(Format::Json, false, "pop").unwrap(), r#"{"result":"25314"}"#);
        assert_eq!(o.render(Format::Json, true, "pop").unwrap(), r#"{"schema":"cambrian-pop/1","result":"25314"}"#);
        assert_eq!(o.render(Format::Csv, false, "pop").unwrap(), "a,b\n1,\"x,y\"");
        assert_eq!(o.render(Format::Text, false, "pop").unwrap(), "a  b\n1  x,y");
        assert!(o.render(Format::Dot, false, "pop").is_err());
    }
}
