use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::bench::BenchmarkResult;
use super::instance_file::{read_text, write_text};
use crate::chain::ChainReport;
use crate::error::{Error, Result};
use crate::quantum::CostProfile;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

pub const TSV_HEADER: [&str; 4] = ["algorithm", "distance_metric", "log2_cost_terms", "regime"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Tsv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(ExportFormat::Json),
            "tsv" => Ok(ExportFormat::Tsv),
            _ => Err(Error::InvalidArgument(format!(
                "unknown format {s:?} (json or tsv)"
            ))),
        }
    }
}

/// Envelope of every JSON export.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument<T> {
    pub schema_version: u32,
    pub kind: String,
    pub items: Vec<T>,
}

/// Something that can be exported as a report item.
pub trait Reportable: Serialize + DeserializeOwned {
    const KIND: &'static str;

    /// Tabular rendering, where one is defined.
    fn tsv(_items: &[Self]) -> Option<String> {
        None
    }
}

impl Reportable for BenchmarkResult {
    const KIND: &'static str = "benchmark_results";
}

impl Reportable for ChainReport {
    const KIND: &'static str = "chain_reports";
}

impl Reportable for CostProfile {
    const KIND: &'static str = "cost_profiles";

    fn tsv(items: &[Self]) -> Option<String> {
        Some(cost_tsv(items))
    }
}

/// Pretty JSON with a trailing newline. Key order follows field order, so
/// equal inputs give identical bytes.
pub fn report_json<T: Reportable>(items: &[T]) -> String {
    #[derive(Serialize)]
    struct Borrowed<'a, T> {
        schema_version: u32,
        kind: &'a str,
        items: &'a [T],
    }
    let doc = Borrowed {
        schema_version: REPORT_SCHEMA_VERSION,
        kind: T::KIND,
        items,
    };
    serde_json::to_string_pretty(&doc).expect("report items always serialize") + "\n"
}

pub fn parse_report<T: Reportable>(text: &str) -> Result<Vec<T>> {
    let doc: ReportDocument<T> =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.schema_version != REPORT_SCHEMA_VERSION {
        return Err(Error::Parse(format!(
            "unsupported report schema_version {}",
            doc.schema_version
        )));
    }
    if doc.kind != T::KIND {
        return Err(Error::Parse(format!(
            "expected a {} report, found {}",
            T::KIND,
            doc.kind
        )));
    }
    Ok(doc.items)
}

/// One row per profile: the runtime expression followed by its `log₂`
/// terms, and the optimality tag.
pub fn cost_tsv(profiles: &[CostProfile]) -> String {
    let mut out = TSV_HEADER.join("\t");
    out.push('\n');
    for p in profiles {
        let terms = p
            .terms
            .iter()
            .map(|t| format!("{}={:.6}", t.name, t.log2))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(
            out,
            "{}\t{}\t{} [{}]\t{}",
            clean(&p.algorithm),
            p.metric.name(),
            clean(&p.runtime),
            clean(&terms),
            clean(&p.optimality)
        );
    }
    out
}

fn clean(field: &str) -> String {
    field.replace(['\t', '\n'], " ")
}

/// Renders `items` in `format`.
pub fn render_report<T: Reportable>(items: &[T], format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Json => Ok(report_json(items)),
        ExportFormat::Tsv => T::tsv(items)
            .ok_or_else(|| Error::InvalidArgument(format!("{} have no TSV form", T::KIND))),
    }
}

pub fn export_report<T: Reportable>(items: &[T], format: ExportFormat, path: &Path) -> Result<()> {
    write_text(path, &render_report(items, format)?)
}

pub fn read_report<T: Reportable>(path: &Path) -> Result<Vec<T>> {
    parse_report(&read_text(path)?)
}
