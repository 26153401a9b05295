//! Comparison tables and data series, with their text, JSON and CSV forms.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

/// Where a reference value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// Number quoted in the published analysis.
    Published,
    /// Independent arithmetic or numerical oracle.
    Derived,
    /// Exact identity between two code paths.
    Identity,
}

impl Basis {
    pub fn label(self) -> &'static str {
        match self {
            Basis::Published => "published",
            Basis::Derived => "derived",
            Basis::Identity => "identity",
        }
    }
}

/// Acceptance rule for a row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tolerance {
    Absolute { tol: f64 },
    Relative { tol: f64 },
    /// Computed value within `rel` of the closed interval [lo, hi].
    Interval { lo: f64, hi: f64, rel: f64 },
    /// Computed value strictly below `limit`.
    Below { limit: f64 },
    /// Computed value strictly above `limit`.
    Above { limit: f64 },
    /// Computed value at most `limit`.
    AtMost { limit: f64 },
    /// Reported, never judged.
    Informational,
}

impl Tolerance {
    pub fn accepts(&self, computed: f64, reference: Option<f64>) -> bool {
        if !computed.is_finite() {
            return false;
        }
        match (*self, reference) {
            (Tolerance::Absolute { tol }, Some(r)) => (computed - r).abs() <= tol,
            (Tolerance::Relative { tol }, Some(r)) => (computed - r).abs() <= tol * r.abs(),
            (Tolerance::Interval { lo, hi, rel }, _) => {
                computed >= lo - rel * lo.abs() && computed <= hi + rel * hi.abs()
            }
            (Tolerance::Below { limit }, _) => computed < limit,
            (Tolerance::Above { limit }, _) => computed > limit,
            (Tolerance::AtMost { limit }, _) => computed <= limit,
            (Tolerance::Informational, _) => true,
            (_, None) => false,
        }
    }

    fn describe(&self) -> String {
        match *self {
            Tolerance::Absolute { tol } => format!("±{}", sig(tol, 3)),
            Tolerance::Relative { tol } => format!("±{}%", sig(tol * 100.0, 3)),
            Tolerance::Interval { lo, hi, rel } => {
                format!("[{}, {}] ±{}%", sig(lo, 4), sig(hi, 4), sig(rel * 100.0, 3))
            }
            Tolerance::Below { limit } => format!("< {}", sig(limit, 4)),
            Tolerance::Above { limit } => format!("> {}", sig(limit, 4)),
            Tolerance::AtMost { limit } => format!("<= {}", sig(limit, 3)),
            Tolerance::Informational => "info".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub quantity: String,
    pub unit: &'static str,
    /// Reference value, when a published or derived one applies.
    pub reference: Option<f64>,
    pub computed: f64,
    /// |computed − reference| / |reference|.
    pub relative_deviation: Option<f64>,
    pub tolerance: Tolerance,
    pub basis: Option<Basis>,
    /// What the reference value stands for.
    pub anchor: Option<&'static str>,
    pub passed: bool,
}

impl ReportRow {
    /// A computed quantity with no reference attached.
    pub fn computed(quantity: impl Into<String>, unit: &'static str, computed: f64) -> Self {
        ReportRow {
            quantity: quantity.into(),
            unit,
            reference: None,
            computed,
            relative_deviation: None,
            tolerance: Tolerance::Informational,
            basis: None,
            anchor: None,
            passed: true,
        }
    }

    /// A checked quantity.
    pub fn checked(
        quantity: impl Into<String>,
        unit: &'static str,
        reference: Option<f64>,
        computed: f64,
        tolerance: Tolerance,
        basis: Basis,
        anchor: &'static str,
    ) -> Self {
        let relative_deviation = reference
            .filter(|r| *r != 0.0)
            .map(|r| (computed - r).abs() / r.abs());
        ReportRow {
            quantity: quantity.into(),
            unit,
            reference,
            computed,
            relative_deviation,
            tolerance,
            basis: Some(basis),
            anchor: Some(anchor),
            passed: tolerance.accepts(computed, reference),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ReportTable {
    pub title: String,
    pub rows: Vec<ReportRow>,
}

impl ReportTable {
    pub fn new(title: impl Into<String>) -> Self {
        ReportTable {
            title: title.into(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: ReportRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: ReportTable) {
        self.rows.extend(other.rows);
    }

    pub fn all_passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.passed)
    }

    pub fn find(&self, quantity: &str) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.quantity == quantity)
    }

    /// Plain-text table with 6 significant digits.
    pub fn to_text(&self) -> String {
        let header = ["quantity", "unit", "reference", "computed", "rel.dev", "tolerance", "basis", "status"];
        let cells: Vec<[String; 8]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.quantity.clone(),
                    r.unit.to_string(),
                    r.reference.map(|v| sig(v, 6)).unwrap_or_else(|| "-".into()),
                    sig(r.computed, 6),
                    r.relative_deviation.map(|v| sig(v, 3)).unwrap_or_else(|| "-".into()),
                    r.tolerance.describe(),
                    r.basis.map(|b| b.label().to_string()).unwrap_or_else(|| "-".into()),
                    match (r.passed, r.tolerance) {
                        (_, Tolerance::Informational) => "info".into(),
                        (true, _) => "PASS".into(),
                        (false, _) => "FAIL".into(),
                    },
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        if !self.title.is_empty() {
            let _ = writeln!(out, "{}", self.title);
        }
        let line = |out: &mut String, cols: &[String]| {
            let parts: Vec<String> = cols
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<width$}", width = w))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&mut out, &header.map(String::from));
        line(&mut out, &widths.map(|w| "-".repeat(w)));
        for row in &cells {
            line(&mut out, row);
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))
    }
}

/// Formats `x` with `digits` significant digits.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-3..6).contains(&exp) {
        format!("{:.*e}", digits.saturating_sub(1), x)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    }
}

/// A named table of columns, written as CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    /// Column names including units, e.g. `z_cm`.
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Series {
    pub fn new(name: impl Into<String>, columns: &[&str]) -> Self {
        Series {
            name: name.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// CSV text at full (round-trip) precision.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn from_csv(name: impl Into<String>, text: &str) -> Result<Self> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let columns: Vec<String> = r.headers()?.iter().map(String::from).collect();
        let mut rows = Vec::new();
        for (i, rec) in r.records().enumerate() {
            let rec = rec?;
            let row = rec
                .iter()
                .map(|s| {
                    s.parse::<f64>()
                        .map_err(|e| Error::Io(format!("row {}: '{s}': {e}", i + 2)))
                })
                .collect::<Result<Vec<f64>>>()?;
            rows.push(row);
        }
        Ok(Series {
            name: name.into(),
            columns,
            rows,
        })
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    pub fn write(&self, dir: &Path) -> Result<()> {
        fs::write(dir.join(format!("{}.csv", self.name)), self.to_csv()?)?;
        Ok(())
    }

    pub fn read(dir: &Path, name: &str) -> Result<Self> {
        let text = fs::read_to_string(dir.join(format!("{name}.csv")))?;
        Self::from_csv(name, &text)
    }
}

/// Report plus any series produced alongside it.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Output {
    pub table: ReportTable,
    pub series: Vec<Series>,
}

impl Output {
    /// Writes `report.json` and one CSV per series into `dir`.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("report.json"), self.table.to_json()?)?;
        for s in &self.series {
            s.write(dir)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig(1.5146947, 6), "1.51469");
        assert_eq!(sig(1006.954, 6), "1006.95");
        assert_eq!(sig(220808.37, 6), "220808");
        assert_eq!(sig(2208083.7, 6), "2.20808e6");
        assert_eq!(sig(0.00765625, 6), "0.00765625");
        assert_eq!(sig(1.016e-9, 6), "1.01600e-9");
        assert_eq!(sig(0.0, 6), "0");
    }

    #[test]
    fn tolerance_rules() {
        assert!(Tolerance::Absolute { tol: 0.01 }.accepts(1.2227, Some(1.22)));
        assert!(!Tolerance::Absolute { tol: 0.001 }.accepts(1.2227, Some(1.22)));
        assert!(Tolerance::Relative { tol: 0.05 }.accepts(4.558, Some(4.57)));
        assert!(Tolerance::Interval { lo: 4.55, hi: 4.57, rel: 0.02 }.accepts(4.50, None));
        assert!(!Tolerance::Interval { lo: 4.55, hi: 4.57, rel: 0.02 }.accepts(4.40, None));
        assert!(!Tolerance::Below { limit: 1.0 }.accepts(1.0, None));
        assert!(Tolerance::AtMost { limit: 0.0 }.accepts(0.0, None));
        assert!(!Tolerance::Relative { tol: 1.0 }.accepts(f64::NAN, Some(1.0)));
        assert!(!Tolerance::Absolute { tol: 1.0 }.accepts(1.0, None));
    }

    #[test]
    fn text_table_has_status() {
        let mut t = ReportTable::new("demo");
        t.push(ReportRow::checked("a", "cm", Some(1.0), 1.0, Tolerance::Absolute { tol: 0.1 }, Basis::Published, "x"));
        t.push(ReportRow::checked("b", "cm", Some(1.0), 2.0, Tolerance::Absolute { tol: 0.1 }, Basis::Derived, "y"));
        t.push(ReportRow::computed("c", "", 3.0));
        let text = t.to_text();
        assert!(text.contains("PASS") && text.contains("FAIL") && text.contains("info"));
        assert!(!t.all_passed());
        assert_eq!(t.failures().count(), 1);
    }

    proptest! {
        #[test]
        fn csv_round_trip(rows in prop::collection::vec(prop::collection::vec(-1e300f64..1e300, 3), 0..40)) {
            let mut s = Series::new("t", &["z_cm", "chi_rad", "lambda_cm"]);
            for r in &rows {
                s.push(r.clone());
            }
            let back = Series::from_csv("t", &s.to_csv().unwrap()).unwrap();
            prop_assert_eq!(back, s);
        }
    }
}
