use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Lemma,
    Theorem,
    Bound,
    Decompositions,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::Lemma => "lemma",
            Scope::Theorem => "theorem",
            Scope::Bound => "bound",
            Scope::Decompositions => "decompositions",
        }
    }
}

/// One parameter tuple. `params` is a JSON object; any boolean entry whose
/// key ends in `_ok` is an extra hard check that must hold for the row to pass.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub params: Value,
    pub formula: u64,
    pub builder_len: u64,
    pub builder_valid: bool,
    pub oracle: Option<u64>,
    pub equal: Option<bool>,
}

impl ReportRow {
    /// Hard checks only: a valid word of the claimed length, no oracle
    /// distance above it, and every `*_ok` flag set. Equality with the
    /// closed form is reported separately.
    pub fn passes(&self) -> bool {
        let flags_ok = match &self.params {
            Value::Object(map) => map
                .iter()
                .filter(|(k, _)| k.ends_with("_ok"))
                .all(|(_, v)| v.as_bool() == Some(true)),
            _ => true,
        };
        self.builder_valid
            && self.builder_len == self.formula
            && self.oracle.is_none_or(|d| d <= self.builder_len)
            && flags_ok
    }

    /// The oracle ran and found a shorter path than the closed form.
    pub fn is_discrepancy(&self) -> bool {
        self.equal == Some(false)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub oracle_skipped: usize,
    /// Rows where the oracle distance differs from the closed form.
    pub discrepancies: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub scope: Scope,
    pub n_range: [usize; 2],
    pub rows: Vec<ReportRow>,
    pub summary: Summary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

const CSV_COLUMNS: [&str; 7] = [
    "n",
    "params",
    "formula",
    "builder_len",
    "builder_valid",
    "oracle",
    "equal",
];

impl VerificationReport {
    pub fn new(scope: Scope, n_range: [usize; 2], rows: Vec<ReportRow>) -> Self {
        let mut summary = Summary::default();
        for row in &rows {
            if row.passes() {
                summary.pass += 1;
            } else {
                summary.fail += 1;
            }
            if row.oracle.is_none() {
                summary.oracle_skipped += 1;
            }
            if row.is_discrepancy() {
                summary.discrepancies += 1;
            }
        }
        VerificationReport {
            scope,
            n_range,
            rows,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.is_discrepancy())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_COLUMNS)?;
        for row in &self.rows {
            w.write_record([
                row.n.to_string(),
                row.params.to_string(),
                row.formula.to_string(),
                row.builder_len.to_string(),
                row.builder_valid.to_string(),
                row.oracle.map(|d| d.to_string()).unwrap_or_default(),
                row.equal.map(|e| e.to_string()).unwrap_or_default(),
            ])?;
        }
        w.flush().map_err(|e| Error::Csv(e.into()))?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)
            .expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv output is utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} n={}..={}: {} rows, {} pass, {} fail, {} without oracle, {} discrepancies",
            self.scope.name(),
            self.n_range[0],
            self.n_range[1],
            self.rows.len(),
            self.summary.pass,
            self.summary.fail,
            self.summary.oracle_skipped,
            self.summary.discrepancies
        );
        for row in self
            .rows
            .iter()
            .filter(|r| !r.passes() || r.is_discrepancy())
        {
            let tag = if row.passes() { "DISCREPANCY" } else { "FAIL" };
            let _ = writeln!(
                s,
                "  {tag} n={} {} formula={} builder={} valid={} oracle={}",
                row.n,
                row.params,
                row.formula,
                row.builder_len,
                row.builder_valid,
                row.oracle.map_or("-".to_string(), |d| d.to_string())
            );
        }
        s
    }
}

/// Writes the report to `path`, truncating any existing file.
pub fn write_report(report: &VerificationReport, format: ReportFormat, path: &Path) -> Result<()> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io)?;
    let mut out = BufWriter::new(file);
    match format {
        ReportFormat::Json => out.write_all(report.to_json().as_bytes()).map_err(io)?,
        ReportFormat::Csv => report.write_csv(&mut out)?,
    }
    out.flush().map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn row(valid: bool, len: u64, formula: u64, oracle: Option<u64>) -> ReportRow {
        ReportRow {
            n: 5,
            params: json!({"j": 2, "variant": "I"}),
            formula,
            builder_len: len,
            builder_valid: valid,
            oracle,
            equal: oracle.map(|d| d == formula),
        }
    }

    #[test]
    fn empty_report_is_valid_json() {
        let rep = VerificationReport::new(Scope::Lemma, [3, 3], vec![]);
        let text = rep.to_json();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 0);
        assert_eq!(v["summary"]["pass"], 0);
        assert_eq!(VerificationReport::from_json(&text).unwrap(), rep);
    }

    #[test]
    fn row_classification() {
        assert!(row(true, 5, 5, Some(5)).passes());
        assert!(row(true, 5, 5, None).passes());
        assert!(!row(false, 5, 5, None).passes());
        assert!(!row(true, 6, 5, None).passes());
        assert!(!row(true, 5, 5, Some(6)).passes());
        let shorter = row(true, 5, 5, Some(3));
        assert!(shorter.passes());
        assert!(shorter.is_discrepancy());
        let mut flagged = row(true, 5, 5, None);
        flagged.params = json!({"diameter_ok": false});
        assert!(!flagged.passes());

        let rep = VerificationReport::new(
            Scope::Theorem,
            [4, 5],
            vec![
                row(true, 5, 5, Some(5)),
                row(true, 5, 5, Some(3)),
                row(false, 1, 5, None),
            ],
        );
        assert_eq!(
            rep.summary,
            Summary {
                pass: 2,
                fail: 1,
                oracle_skipped: 1,
                discrepancies: 1
            }
        );
        assert!(!rep.passed());
        assert_eq!(rep.discrepancies().count(), 1);
        assert!(rep.to_text().contains("DISCREPANCY"));
        assert!(rep.to_text().contains("FAIL"));
    }

    #[test]
    fn json_field_order_is_stable() {
        let rep = VerificationReport::new(Scope::Bound, [4, 4], vec![row(true, 6, 6, Some(6))]);
        let text = rep.to_json();
        let positions: Vec<usize> = ["\"scope\"", "\"n_range\"", "\"rows\"", "\"summary\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let row_keys: Vec<usize> = CSV_COLUMNS
            .iter()
            .map(|k| text.find(&format!("\"{k}\"")).unwrap())
            .collect();
        assert!(row_keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(text, rep.clone().to_json());
    }

    #[test]
    fn csv_layout() {
        let rep = VerificationReport::new(
            Scope::Lemma,
            [5, 5],
            vec![row(true, 5, 5, Some(5)), row(true, 5, 5, None)],
        );
        let csv = rep.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_COLUMNS.join(","));
        assert_eq!(
            lines.next().unwrap(),
            r#"5,"{""j"":2,""variant"":""I""}",5,5,true,5,true"#
        );
        assert_eq!(
            lines.next().unwrap(),
            r#"5,"{""j"":2,""variant"":""I""}",5,5,true,,"#
        );
    }

    #[test]
    fn write_to_disk() {
        let dir = tempfile::tempdir().unwrap();
        let rep = VerificationReport::new(Scope::Lemma, [5, 5], vec![row(true, 5, 5, Some(5))]);
        let json_path = dir.path().join("r.json");
        write_report(&rep, ReportFormat::Json, &json_path).unwrap();
        let back =
            VerificationReport::from_json(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
        assert_eq!(back, rep);
        let csv_path = dir.path().join("r.csv");
        write_report(&rep, ReportFormat::Csv, &csv_path).unwrap();
        assert_eq!(std::fs::read_to_string(&csv_path).unwrap(), rep.to_csv());
        let err = write_report(
            &rep,
            ReportFormat::Json,
            &dir.path().join("no/such/dir.json"),
        )
        .unwrap_err();
        assert!(err.to_string().contains("no/such/dir.json"));
    }
}
