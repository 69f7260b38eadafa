use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const CSV_HEADER: &str = "n,h0_ideal,h1_ideal,h1_structure";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: i64,
    pub h0_ideal: i64,
    pub h1_ideal: i64,
    pub h1_structure: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    /// Class the table belongs to, e.g. `(1,2)`.
    pub label: String,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub tables: Vec<Table>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            tables: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), v.into());
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), v.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k} = {}", plain(v));
        }
        if !self.results.is_empty() {
            out.push_str("results:\n");
            for (k, v) in &self.results {
                let _ = writeln!(out, "  {k} = {}", plain(v));
            }
        }
        for t in &self.tables {
            let _ = writeln!(out, "table {}:", t.label);
            let _ = writeln!(
                out,
                "  {:>4} {:>10} {:>10} {:>13}",
                "n", "h0_ideal", "h1_ideal", "h1_structure"
            );
            for r in &t.rows {
                let _ = writeln!(
                    out,
                    "  {:>4} {:>10} {:>10} {:>13}",
                    r.n, r.h0_ideal, r.h1_ideal, r.h1_structure
                );
            }
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }

    /// Tables as CSV. A report with several tables gets a leading `class`
    /// column; a report without tables lists its results as `key,value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self.tables.as_slice() {
            [] => {
                out.push_str("key,value\n");
                for (k, v) in &self.results {
                    let _ = writeln!(out, "{k},{}", csv_field(&plain(v)));
                }
            }
            [t] => {
                let _ = writeln!(out, "{CSV_HEADER}");
                for r in &t.rows {
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        r.n, r.h0_ideal, r.h1_ideal, r.h1_structure
                    );
                }
            }
            many => {
                let _ = writeln!(out, "class,{CSV_HEADER}");
                for t in many {
                    for r in &t.rows {
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{}",
                            csv_field(&t.label),
                            r.n,
                            r.h0_ideal,
                            r.h1_ideal,
                            r.h1_structure
                        );
                    }
                }
            }
        }
        out
    }
}

/// A value without JSON quoting; arrays are space separated.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(plain).collect::<Vec<_>>().join(" "),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}:{}", plain(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
