use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cssp::CsspInstance;
use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Rational, Scalar};
use crate::strings::{Alphabet, CostScheme, CspInstance, Metric, Seq};

pub const INSTANCE_SCHEMA_VERSION: u32 = 1;

/// Metric tag of an instance file. Weighted tables hold `"num/den"` entries
/// over the instance alphabet plus a trailing gap row and column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MetricSpec {
    Hamming,
    Levenshtein,
    Weighted { table: Vec<Vec<String>> },
}

impl MetricSpec {
    pub fn name(&self) -> &'static str {
        match self {
            MetricSpec::Hamming => "hamming",
            MetricSpec::Levenshtein => "levenshtein",
            MetricSpec::Weighted { .. } => "weighted",
        }
    }

    pub fn from_metric(metric: &Metric<Rational>) -> Self {
        match metric {
            Metric::Hamming => MetricSpec::Hamming,
            Metric::Levenshtein => MetricSpec::Levenshtein,
            Metric::Weighted(scheme) => MetricSpec::Weighted {
                table: render_table(scheme),
            },
        }
    }

    pub fn to_metric(&self, alphabet: &Arc<Alphabet>) -> Result<Metric<Rational>> {
        Ok(match self {
            MetricSpec::Hamming => Metric::Hamming,
            MetricSpec::Levenshtein => Metric::Levenshtein,
            MetricSpec::Weighted { table } => Metric::Weighted(parse_table(alphabet, table)?),
        })
    }
}

fn render_table(scheme: &CostScheme<Rational>) -> Vec<Vec<String>> {
    scheme
        .rows()
        .iter()
        .map(|row| row.iter().map(Scalar::render).collect())
        .collect()
}

fn parse_table(alphabet: &Arc<Alphabet>, table: &[Vec<String>]) -> Result<CostScheme<Rational>> {
    let rows = table
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| parse_rational(v))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let scheme = CostScheme::new(Arc::clone(alphabet), rows)?;
    if !scheme.is_metric() {
        return Err(Error::NonMetric);
    }
    Ok(scheme)
}

/// On-disk CSP / CSSP instance. `L` is present exactly for substring
/// instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub schema_version: u32,
    pub alphabet: String,
    pub sequences: Vec<String>,
    pub d: usize,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    pub metric: MetricSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<BTreeMap<String, String>>,
}

impl InstanceFile {
    pub fn from_csp(
        inst: &CspInstance<Rational>,
        provenance: Option<BTreeMap<String, String>>,
    ) -> Self {
        InstanceFile {
            schema_version: INSTANCE_SCHEMA_VERSION,
            alphabet: inst.alphabet().to_string(),
            sequences: inst.strings().iter().map(Seq::to_string).collect(),
            d: inst.d(),
            l: None,
            metric: MetricSpec::from_metric(inst.metric()),
            provenance,
        }
    }

    pub fn from_cssp(inst: &CsspInstance, provenance: Option<BTreeMap<String, String>>) -> Self {
        InstanceFile {
            schema_version: INSTANCE_SCHEMA_VERSION,
            alphabet: inst.alphabet().to_string(),
            sequences: inst.strings().iter().map(Seq::to_string).collect(),
            d: inst.d(),
            l: Some(inst.l()),
            metric: MetricSpec::Hamming,
            provenance,
        }
    }

    fn check_version(&self) -> Result<()> {
        if self.schema_version != INSTANCE_SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported instance schema_version {} (expected {INSTANCE_SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Result<Arc<Alphabet>> {
        Ok(Arc::new(Alphabet::parse(&self.alphabet)?))
    }

    /// Parses every sequence; a bad symbol is reported with the sequence
    /// index as record name.
    pub fn seqs(&self) -> Result<Vec<Seq>> {
        let alphabet = self.alphabet()?;
        self.sequences
            .iter()
            .enumerate()
            .map(|(i, text)| {
                Seq::parse(&alphabet, text).map_err(|e| match e {
                    Error::InvalidSymbol { symbol, position } => Error::InvalidRecord {
                        record: format!("sequences[{i}]"),
                        position,
                        symbol,
                    },
                    other => other,
                })
            })
            .collect()
    }

    pub fn is_substring_instance(&self) -> bool {
        self.l.is_some()
    }

    /// The closest-string view. `L`, if present, is ignored.
    pub fn to_csp(&self) -> Result<CspInstance<Rational>> {
        self.check_version()?;
        let alphabet = self.alphabet()?;
        let metric = self.metric.to_metric(&alphabet)?;
        CspInstance::new(self.seqs()?, self.d, metric)
    }

    pub fn to_cssp(&self) -> Result<CsspInstance> {
        self.check_version()?;
        let l = self
            .l
            .ok_or_else(|| Error::InvalidInstance("substring instance needs \"L\"".into()))?;
        if self.metric != MetricSpec::Hamming {
            return Err(Error::UnsupportedMetric {
                operation: "closest substring",
                metric: self.metric.name(),
            });
        }
        CsspInstance::new(self.seqs()?, self.d, l)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance files always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: InstanceFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        file.check_version()?;
        Ok(file)
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&read_text(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        write_text(path, &(self.to_json() + "\n"))
    }
}

/// Stand-alone weighted cost table, as referenced by `weighted:<file>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostTableFile {
    pub schema_version: u32,
    pub alphabet: String,
    pub table: Vec<Vec<String>>,
}

impl CostTableFile {
    pub fn from_scheme(scheme: &CostScheme<Rational>) -> Self {
        CostTableFile {
            schema_version: INSTANCE_SCHEMA_VERSION,
            alphabet: scheme.alphabet().to_string(),
            table: render_table(scheme),
        }
    }

    /// Builds the scheme. The table's alphabet must equal `alphabet`.
    pub fn to_scheme(&self, alphabet: &Arc<Alphabet>) -> Result<CostScheme<Rational>> {
        if self.alphabet != alphabet.to_string() {
            return Err(Error::AlphabetMismatch);
        }
        parse_table(alphabet, &self.table)
    }

    pub fn read(path: &Path) -> Result<Self> {
        serde_json::from_str(&read_text(path)?)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("cost tables always serialize");
        write_text(path, &(text + "\n"))
    }
}

pub(crate) fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

pub(crate) fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| io_error(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna() -> Arc<Alphabet> {
        Arc::new(Alphabet::dna())
    }

    #[test]
    fn csp_round_trip() {
        let inst =
            CspInstance::<Rational>::from_strs(&dna(), &["ACGT", "AGGT"], 1, Metric::Hamming)
                .unwrap();
        let mut prov = BTreeMap::new();
        prov.insert("generator".to_string(), "planted".to_string());
        let file = InstanceFile::from_csp(&inst, Some(prov));
        let back = InstanceFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.to_csp().unwrap(), inst);
        assert!(file.to_json().contains("\"metric\": \"hamming\""));
        assert!(!file.to_json().contains("\"L\""));
    }

    #[test]
    fn weighted_round_trip() {
        let a = dna();
        let scheme =
            CostScheme::uniform(a.clone(), Rational::ratio(3, 2), Rational::ratio(1, 1)).unwrap();
        let inst =
            CspInstance::from_strs(&a, &["AC", "AG"], 1, Metric::Weighted(scheme.clone())).unwrap();
        let file = InstanceFile::from_csp(&inst, None);
        assert!(file.to_json().contains("\"3/2\""));
        assert_eq!(
            InstanceFile::from_json(&file.to_json())
                .unwrap()
                .to_csp()
                .unwrap(),
            inst
        );

        let table = CostTableFile::from_scheme(&scheme);
        assert_eq!(table.to_scheme(&a).unwrap(), scheme);
        assert_eq!(
            table
                .to_scheme(&Arc::new(Alphabet::parse("ACGU").unwrap()))
                .unwrap_err(),
            Error::AlphabetMismatch
        );
    }

    #[test]
    fn cssp_round_trip() {
        let inst = CsspInstance::from_strs(&dna(), &["ACGTAC", "TTACGA"], 1, 3).unwrap();
        let file = InstanceFile::from_cssp(&inst, None);
        assert!(file.to_json().contains("\"L\": 3"));
        assert_eq!(
            InstanceFile::from_json(&file.to_json())
                .unwrap()
                .to_cssp()
                .unwrap(),
            inst
        );
        assert!(file.is_substring_instance());
    }

    #[test]
    fn rejects_bad_files() {
        let bad_symbol = r#"{"schema_version":1,"alphabet":"ACGT","sequences":["ACGT","ACXT"],"d":1,"metric":"hamming"}"#;
        assert_eq!(
            InstanceFile::from_json(bad_symbol)
                .unwrap()
                .to_csp()
                .unwrap_err(),
            Error::InvalidRecord {
                record: "sequences[1]".into(),
                position: 2,
                symbol: 'X'
            }
        );
        let no_version = r#"{"alphabet":"ACGT","sequences":["A"],"d":1,"metric":"hamming"}"#;
        assert!(InstanceFile::from_json(no_version).is_err());
        let future =
            r#"{"schema_version":9,"alphabet":"ACGT","sequences":["A"],"d":1,"metric":"hamming"}"#;
        assert!(InstanceFile::from_json(future).is_err());
        let no_l =
            r#"{"schema_version":1,"alphabet":"ACGT","sequences":["A"],"d":1,"metric":"hamming"}"#;
        assert!(InstanceFile::from_json(no_l).unwrap().to_cssp().is_err());
    }

    #[test]
    fn missing_file_names_path() {
        let err = InstanceFile::read(Path::new("/nonexistent/instance.json")).unwrap_err();
        assert!(matches!(err, Error::Io { ref path, .. } if path.contains("instance.json")));
    }
}
