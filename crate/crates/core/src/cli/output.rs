//! Plain, CSV and JSON rendering of result tables.

use std::io::Write;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::RunConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    /// The primary value alone (scalar commands) or CSV without the config line.
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:?}"),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) => serde_json::Number::from_f64(*v).map(Value::Number).unwrap_or(Value::Null),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// Column names plus rows; `primary` is the column printed in plain mode for
/// single-row results.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub primary: Option<usize>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new(), primary: None }
    }

    pub fn scalar(header: Vec<&'static str>, row: Vec<Cell>, primary: usize) -> Self {
        Table { header, rows: vec![row], primary: Some(primary) }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

fn write_csv(out: &mut dyn Write, table: &Table) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::render))?;
    }
    w.flush()
}

pub fn write_table(out: &mut dyn Write, config: &RunConfig, table: &Table) -> std::io::Result<()> {
    match config.format {
        OutputFormat::Plain => match (table.primary, table.rows.as_slice()) {
            (Some(k), [row]) => writeln!(out, "{}", row[k].render()),
            _ => write_csv(out, table),
        },
        OutputFormat::Csv => {
            let cfg = serde_json::to_string(config).map_err(std::io::Error::other)?;
            writeln!(out, "# config: {cfg}")?;
            write_csv(out, table)
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> =
                        table.header.iter().zip(r).map(|(h, c)| (h.to_string(), c.to_json())).collect();
                    Value::Object(obj)
                })
                .collect();
            let mut doc = Map::new();
            doc.insert("config".into(), serde_json::to_value(config).map_err(std::io::Error::other)?);
            doc.insert("rows".into(), Value::Array(rows));
            writeln!(out, "{}", Value::Object(doc))
        }
    }
}
