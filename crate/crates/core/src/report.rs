//! Tabular form of a sweep, plus its CSV encoding.
//!
//! The CSV layout is fixed: header `m,rms_abs,ratio_percent`, one
//! newline-terminated row per guard value, `.` as the decimal separator,
//! floats rendered with 12 significant digits in scientific notation.
//! Parsing an emitted file and re-emitting it reproduces the bytes.

use crate::error::{DhtError, Result};
use crate::metrics::SweepResult;

pub const CSV_HEADER: &str = "m,rms_abs,ratio_percent";

/// One row of the experiment table; ratios are percentages of the
/// zero-guard error, so the m = 0 row reads 100.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub guard: usize,
    pub rms_abs: f64,
    pub ratio_percent: f64,
}

/// A labeled sweep ready for CSV or plotting.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    /// Waveform (or input file) name, used in plot titles.
    pub label: String,
    /// Signal width N.
    pub width: usize,
    pub rows: Vec<TableRow>,
}

impl SweepTable {
    pub fn from_sweep(label: impl Into<String>, width: usize, sweep: &SweepResult) -> Self {
        let rows = sweep
            .rows()
            .iter()
            .map(|r| TableRow {
                guard: r.guard,
                rms_abs: r.rms_abs,
                ratio_percent: 100.0 * r.ratio_to_zero_guard,
            })
            .collect();
        Self {
            label: label.into(),
            width,
            rows,
        }
    }

    /// Zero-guard RMS error (the first row's absolute error).
    pub fn baseline_rms(&self) -> f64 {
        self.rows[0].rms_abs
    }

    pub fn row_at(&self, guard: usize) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.guard == guard)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(32 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{}\n",
                row.guard,
                format_sig12(row.rms_abs),
                format_sig12(row.ratio_percent)
            ));
        }
        out
    }
}

/// 12 significant digits, scientific notation, locale-independent.
pub fn format_sig12(x: f64) -> String {
    format!("{x:.11e}")
}

/// Parses rows back out of an emitted CSV. The label and width are not part
/// of the file, so only the rows are recovered.
pub fn parse_csv_rows(text: &str) -> Result<Vec<TableRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header == CSV_HEADER => {}
        other => {
            return Err(DhtError::InvalidInput(format!(
                "expected CSV header '{CSV_HEADER}', got {other:?}"
            )))
        }
    }
    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let (m, rms, ratio) = match (fields.next(), fields.next(), fields.next(), fields.next()) {
            (Some(m), Some(rms), Some(ratio), None) => (m, rms, ratio),
            _ => {
                return Err(DhtError::InvalidInput(format!(
                    "CSV line {}: expected 3 comma-separated fields",
                    lineno + 2
                )))
            }
        };
        let parse_err = |field: &str, what: &str| {
            DhtError::InvalidInput(format!("CSV line {}: bad {what} '{field}'", lineno + 2))
        };
        rows.push(TableRow {
            guard: m.parse().map_err(|_| parse_err(m, "guard"))?,
            rms_abs: rms.parse().map_err(|_| parse_err(rms, "rms_abs"))?,
            ratio_percent: ratio
                .parse()
                .map_err(|_| parse_err(ratio, "ratio_percent"))?,
        });
    }
    if rows.is_empty() {
        return Err(DhtError::InvalidInput("CSV has no data rows".into()));
    }
    Ok(rows)
}
