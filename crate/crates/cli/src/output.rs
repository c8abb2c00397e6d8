use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// A table that renders either as CSV (header row, `\n` endings) or as a JSON
/// object `{"params": …, "rows": [ … ], …}` with one object per row.
pub struct Table {
    params: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
    extra: Vec<(&'static str, Value)>,
}

impl Table {
    pub fn new(params: impl Serialize, header: Vec<&'static str>) -> Self {
        Self {
            params: serde_json::to_value(params).expect("params serialize"),
            header,
            rows: Vec::new(),
            extra: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Adds a top-level JSON field after `rows` (ignored in CSV).
    pub fn field(&mut self, key: &'static str, value: impl Serialize) {
        self.extra.push((key, serde_json::to_value(value).expect("field serializes")));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    fn json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .header
                    .iter()
                    .zip(row)
                    .filter(|(_, v)| !v.is_null())
                    .map(|(h, v)| (h.to_string(), v.clone()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut top = Map::new();
        top.insert("params".into(), self.params.clone());
        top.insert("rows".into(), Value::Array(rows));
        for (k, v) in &self.extra {
            top.insert(k.to_string(), v.clone());
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("json renders");
        s.push('\n');
        s
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
