//! Plain-text, CSV and JSON rendering shared by the CLI and the examples.
//!
//! Rationals always render losslessly as `p/q` (or `p`). JSON objects are
//! emitted with sorted keys so output is byte-stable.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::Value;

use crate::bounds::BoundReport;
use crate::rational;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::InvalidArgument(format!(
                "unknown format `{other}` (expected table, json or csv)"
            ))),
        }
    }
}

/// A rectangular grid of already-rendered cells.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(Into::into).collect();
        assert_eq!(row.len(), self.headers.len(), "row width mismatch");
        self.rows.push(row);
    }

    /// Left-aligned columns separated by two spaces, widths counted in chars.
    pub fn to_text(&self) -> String {
        let width = |s: &str| s.chars().count();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| width(h)).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(width(cell));
            }
        }
        let mut out = String::new();
        let mut line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i + 1 == cells.len() {
                    s.push_str(cell);
                } else {
                    let _ = write!(s, "{cell}{}  ", " ".repeat(w - width(cell)));
                }
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&self.headers);
        for row in &self.rows {
            line(row);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in std::iter::once(&self.headers).chain(&self.rows) {
            let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Array of objects keyed by header.
    pub fn to_json_value(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    Value::Object(
                        self.headers
                            .iter()
                            .cloned()
                            .zip(row.iter().cloned().map(Value::String))
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => json(&self.to_json_value()),
        }
    }
}

fn csv_cell(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Pretty JSON with a trailing newline.
pub fn json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

/// One row per bound: name, parameters, result and integer corollary.
pub fn bound_table(reports: &[BoundReport]) -> Table {
    let mut t = Table::new(["bound", "params", "result", "integer"]);
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let integer = r
            .integer_bound
            .as_ref()
            .map(|i| i.to_string())
            .unwrap_or_else(|| "-".into());
        t.push([
            r.name.to_string(),
            params.join(" "),
            result_cell(r),
            integer,
        ]);
    }
    t
}

/// `M ≤ 16/5` or `n/a (reason)`.
pub fn result_cell(report: &BoundReport) -> String {
    match &report.value {
        Some(v) => format!("{} {}", report.kind.relation(), rational::render(v)),
        None => format!("n/a ({})", report.reason().unwrap_or("not applicable")),
    }
}

/// Integer-corollary grid: rows `n`, columns `d`, `n/a` where the hypothesis fails.
pub fn bound_grid(cells: &[(usize, usize, BoundReport)]) -> Table {
    let mut ds: Vec<usize> = cells.iter().map(|c| c.1).collect();
    ds.sort_unstable();
    ds.dedup();
    let mut ns: Vec<usize> = cells.iter().map(|c| c.0).collect();
    ns.sort_unstable();
    ns.dedup();
    let mut t =
        Table::new(std::iter::once("n\\d".to_string()).chain(ds.iter().map(|d| d.to_string())));
    for &n in &ns {
        let mut row = vec![n.to_string()];
        for &d in &ds {
            let cell = cells
                .iter()
                .find(|c| c.0 == n && c.1 == d)
                .map(|(_, _, r)| match &r.integer_bound {
                    Some(i) => i.to_string(),
                    None => "n/a".to_string(),
                })
                .unwrap_or_default();
            row.push(cell);
        }
        t.push(row);
    }
    t
}

/// Bound reports in the requested format.
pub fn emit_bounds(reports: &[BoundReport], format: Format) -> String {
    match format {
        Format::Json => json(&Value::Array(
            reports.iter().map(BoundReport::to_json_value).collect(),
        )),
        _ => bound_table(reports).render(format),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{plotkin_overweight, sphere_packing_overweight};
    use crate::rational::ratio;
    use crate::ring::FiniteRing;

    #[test]
    fn rationals_render_losslessly() {
        let mut t = Table::new(["x"]);
        t.push([rational::render(&ratio(3, 2))]);
        t.push([rational::render(&ratio(4, 2))]);
        assert_eq!(t.to_csv(), "x\n3/2\n2\n");
        assert_eq!(t.to_text(), "x\n3/2\n2\n");
    }

    #[test]
    fn text_alignment_counts_chars() {
        let mut t = Table::new(["a", "b"]);
        t.push(["η≤", "1"]);
        t.push(["xyz", "22"]);
        assert_eq!(t.to_text(), "a    b\nη≤   1\nxyz  22\n");
    }

    #[test]
    fn csv_quotes_when_needed() {
        let mut t = Table::new(["label"]);
        t.push(["(0,1)"]);
        assert_eq!(t.to_csv(), "label\n\"(0,1)\"\n");
    }

    #[test]
    fn failed_hypothesis_row() {
        let z4 = FiniteRing::parse("Z4").unwrap();
        let r = plotkin_overweight(&z4, 2, 2).unwrap();
        assert_eq!(result_cell(&r), "n/a (d ≤ nη)");
        let text = emit_bounds(&[r], Format::Table);
        assert!(text.contains("n/a (d ≤ nη)"));
    }

    #[test]
    fn grid_layout() {
        let z4 = FiniteRing::parse("Z4").unwrap();
        let cells: Vec<_> = (1..=2)
            .flat_map(|n| (1..=3).map(move |d| (n, d)))
            .map(|(n, d)| (n, d, plotkin_overweight(&z4, n, d).unwrap()))
            .collect();
        let g = bound_grid(&cells);
        assert_eq!(g.headers, ["n\\d", "1", "2", "3"]);
        assert_eq!(g.rows[0], ["1", "n/a", "2", "1"]);
        assert_eq!(g.rows[1], ["2", "n/a", "n/a", "3"]);
        let sp = sphere_packing_overweight(&z4, 2, 3).unwrap();
        assert!(emit_bounds(&[sp], Format::Json).contains("\"integer_bound\": \"3\""));
    }

    #[test]
    fn format_parses() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
