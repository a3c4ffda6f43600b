//! The `a`-column table: `N_1, N_2, ...` laid out row-major, `a` per row.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sequence::{Index, SequenceEngine};

/// Serializes a big integer as its decimal string.
pub fn ser_decimal<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn ser_decimal_rows<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
    text.serialize(s)
}

/// `entries[i][j] = N_{a*i + j + 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NarayanaTable {
    pub a: Index,
    pub rows: Index,
    #[serde(serialize_with = "ser_decimal_rows")]
    pub entries: Vec<Vec<BigInt>>,
}

impl NarayanaTable {
    /// Entries of column `b` (1-based), top to bottom.
    pub fn column(&self, b: Index) -> Option<Vec<&BigInt>> {
        if !(1..=self.a).contains(&b) {
            return None;
        }
        Some(self.entries.iter().map(|row| &row[(b - 1) as usize]).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::arg(format!("unknown table format {other:?}"))),
        }
    }
}

pub fn build_table(engine: &mut SequenceEngine, a: Index, rows: Index) -> Result<NarayanaTable> {
    if a < 1 || rows < 1 {
        return Err(Error::arg(format!("table dimensions must be positive, got a = {a}, rows = {rows}")));
    }
    let last = a
        .checked_mul(rows)
        .ok_or_else(|| Error::arg("table dimensions overflow"))?;
    let flat = engine.narayana_range(1, last)?;
    let entries = flat.chunks(a as usize).map(<[BigInt]>::to_vec).collect();
    Ok(NarayanaTable { a, rows, entries })
}

pub fn render(table: &NarayanaTable, format: TableFormat) -> String {
    match format {
        TableFormat::Text => render_text(table),
        TableFormat::Csv => {
            let mut out = String::new();
            for row in &table.entries {
                let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        TableFormat::Json => serde_json::to_string(table).expect("table serializes"),
    }
}

fn render_text(table: &NarayanaTable) -> String {
    let cells: Vec<Vec<String>> =
        table.entries.iter().map(|r| r.iter().map(BigInt::to_string).collect()).collect();
    let widths: Vec<usize> = (0..table.a as usize)
        .map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &cells {
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{cell:>width$}", width = widths[j]);
        }
        out.push('\n');
    }
    out
}

/// Parses the CSV rendering back into rows of integers.
pub fn parse_csv(text: &str) -> Result<Vec<Vec<BigInt>>> {
    text.lines()
        .filter(|l| !l.is_empty())
        .map(|line| {
            line.split(',')
                .map(|cell| {
                    cell.trim()
                        .parse::<BigInt>()
                        .map_err(|e| Error::arg(format!("bad csv cell {cell:?}: {e}")))
                })
                .collect()
        })
        .collect()
}
