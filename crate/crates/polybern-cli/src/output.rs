//! Output records and their three renderings (plain, TSV, JSONL).
//!
//! Every subcommand produces a flat list of records of a single kind; the
//! renderer never reorders them, so output is deterministic for fixed
//! arguments. All numbers are carried as decimal strings — rationals as
//! `num/den` in lowest terms — and only the plain renderer collapses an
//! integral `x/1` down to `x`.

use std::collections::BTreeMap;
use std::io::{self, Write};

use num::rational::BigRational;
use polybern::CongruenceReport;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Human-oriented lines; integral rationals lose their `/1`.
    Plain,
    /// Tab-separated with a header row.
    Tsv,
    /// One JSON object per line, stable key order.
    Jsonl,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "record", rename_all = "kebab-case")]
pub enum OutputRecord {
    Value {
        kind: &'static str,
        k: String,
        n: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        r#mod: Option<String>,
        value: String,
    },
    TableCell {
        kind: &'static str,
        k: String,
        n: String,
        value: String,
    },
    Report {
        theorem_id: &'static str,
        parameters: BTreeMap<&'static str, u64>,
        expected: String,
        observed: u64,
        pass: bool,
    },
}

impl OutputRecord {
    pub fn from_report(report: CongruenceReport) -> Self {
        OutputRecord::Report {
            theorem_id: report.theorem.as_str(),
            parameters: report.parameters,
            expected: report.expected,
            observed: report.observed,
            pass: report.pass,
        }
    }

    pub fn is_failing_report(&self) -> bool {
        matches!(self, OutputRecord::Report { pass: false, .. })
    }
}

/// Canonical `num/den` form, always carrying the denominator.
pub fn rational_string(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Collapse `x/1` to `x`; other strings pass through.
fn plain_value(value: &str) -> &str {
    value.strip_suffix("/1").unwrap_or(value)
}

fn parameter_list(parameters: &BTreeMap<&'static str, u64>) -> String {
    parameters
        .iter()
        .map(|(name, value)| format!("{name}={value}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn plain_line(record: &OutputRecord) -> String {
    match record {
        OutputRecord::Value { value, .. } => plain_value(value).to_string(),
        OutputRecord::TableCell { kind, k, n, value } => {
            format!("{kind}({k}, {n}) = {}", plain_value(value))
        }
        OutputRecord::Report {
            theorem_id,
            parameters,
            expected,
            observed,
            pass,
        } => {
            let verdict = if *pass { "PASS" } else { "FAIL" };
            format!(
                "{theorem_id} {verdict} [{}] expected {expected}, observed {observed}",
                parameter_list(parameters).replace(';', " "),
            )
        }
    }
}

fn tsv_header(record: &OutputRecord) -> &'static str {
    match record {
        OutputRecord::Value { .. } => "record\tkind\tk\tn\tmod\tvalue",
        OutputRecord::TableCell { .. } => "record\tkind\tk\tn\tvalue",
        OutputRecord::Report { .. } => "record\ttheorem_id\tparameters\texpected\tobserved\tpass",
    }
}

fn tsv_row(record: &OutputRecord) -> String {
    match record {
        OutputRecord::Value {
            kind,
            k,
            n,
            r#mod,
            value,
        } => format!(
            "value\t{kind}\t{k}\t{n}\t{}\t{value}",
            r#mod.as_deref().unwrap_or("")
        ),
        OutputRecord::TableCell { kind, k, n, value } => {
            format!("table-cell\t{kind}\t{k}\t{n}\t{value}")
        }
        OutputRecord::Report {
            theorem_id,
            parameters,
            expected,
            observed,
            pass,
        } => format!(
            "report\t{theorem_id}\t{}\t{expected}\t{observed}\t{pass}",
            parameter_list(parameters)
        ),
    }
}

/// Render all records to stdout in the requested format.
pub fn emit(records: &[OutputRecord], format: Format) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match format {
        Format::Plain => {
            for record in records {
                writeln!(out, "{}", plain_line(record))?;
            }
        }
        Format::Tsv => {
            if let Some(first) = records.first() {
                writeln!(out, "{}", tsv_header(first))?;
                for record in records {
                    writeln!(out, "{}", tsv_row(record))?;
                }
            }
        }
        Format::Jsonl => {
            for record in records {
                let line = serde_json::to_string(record).expect("records serialize");
                writeln!(out, "{line}")?;
            }
        }
    }
    out.flush()
}
