//! Report types and canonical persistence: JSON with a fixed field order and
//! 12-significant-digit reals, plus a sibling CSV of rows for plotting.
//! Identical inputs produce byte-identical files.

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::{Path, PathBuf};

/// Rounds to 12 significant digits. Every real stored in a report passes
/// through this, which makes serialization deterministic and lossless on
/// re-parse.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("float round-trip")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportParams {
    pub epsilon: f64,
    pub constant: f64,
    pub workers: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub config_label: String,
    pub n: u64,
    pub k: u32,
    pub measured_distinct: u64,
    pub measured_unit_pairs: u64,
    pub bound_distinct: f64,
    pub bound_unit: f64,
    pub ratio_distinct: f64,
    pub ratio_unit: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub experiment: String,
    pub params: ReportParams,
    pub rows: Vec<ReportRow>,
    pub trend_ok: bool,
}

pub fn report_to_json(r: &BoundReport) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serialization");
    s.push('\n');
    s
}

pub fn report_from_json(text: &str) -> Result<BoundReport, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn report_rows_to_csv(r: &BoundReport) -> String {
    let mut out = String::from(
        "config_label,n,k,measured_distinct,measured_unit_pairs,bound_distinct,bound_unit,ratio_distinct,ratio_unit\n",
    );
    for row in &r.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row.config_label,
            row.n,
            row.k,
            row.measured_distinct,
            row.measured_unit_pairs,
            row.bound_distinct,
            row.bound_unit,
            row.ratio_distinct,
            row.ratio_unit
        ));
    }
    out
}

pub fn csv_sibling(path: &Path) -> PathBuf {
    path.with_extension("csv")
}

/// Writes the canonical JSON at `path` and the row CSV at the sibling path
/// with a `.csv` extension.
pub fn write_report(r: &BoundReport, path: &Path) -> Result<(), Error> {
    fs::write(path, report_to_json(r))?;
    fs::write(csv_sibling(path), report_rows_to_csv(r))?;
    Ok(())
}

pub fn read_report(path: &Path) -> Result<BoundReport, Error> {
    report_from_json(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> BoundReport {
        BoundReport {
            experiment: "bound_report".into(),
            params: ReportParams {
                epsilon: sig12(0.2),
                constant: sig12(1.0),
                workers: 1,
            },
            rows: vec![ReportRow {
                config_label: "grid4x2d".into(),
                n: 16,
                k: 2,
                measured_distinct: 9,
                measured_unit_pairs: 24,
                bound_distinct: sig12(6.504911165),
                bound_unit: sig12(6.504911165),
                ratio_distinct: sig12(9.0 / 6.504911165),
                ratio_unit: sig12(24.0 / 6.504911165),
            }],
            trend_ok: true,
        }
    }

    #[test]
    fn sig12_round_trips() {
        let x = 0.123456789012345_f64;
        let r = sig12(x);
        assert!((r - x).abs() < 1e-12);
        assert_eq!(sig12(r), r);
        assert_eq!(sig12(0.0), 0.0);
        assert_eq!(sig12(100.0), 100.0);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        assert_eq!(report_from_json(&report_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn writes_are_byte_identical() {
        let r = sample();
        let dir = tempfile::tempdir().unwrap();
        let p1 = dir.path().join("a.json");
        let p2 = dir.path().join("b.json");
        write_report(&r, &p1).unwrap();
        write_report(&r, &p2).unwrap();
        assert_eq!(fs::read(&p1).unwrap(), fs::read(&p2).unwrap());
        assert_eq!(
            fs::read(csv_sibling(&p1)).unwrap(),
            fs::read(csv_sibling(&p2)).unwrap()
        );
    }

    #[test]
    fn ratios_recompute_from_row_fields() {
        let r = sample();
        for row in &r.rows {
            let expect = row.measured_distinct as f64 / row.bound_distinct;
            assert!((row.ratio_distinct - expect).abs() / expect < 1e-9);
        }
    }
}
