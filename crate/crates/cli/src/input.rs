use std::fs;
use std::io::{BufReader, Write};
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use closest_core::cssp::CsspInstance;
use closest_core::harness::{parse_fasta, CostTableFile, InstanceFile};
use closest_core::{Alphabet, Budget, CspInstance, Metric, Rational, Seq};

use crate::InputArgs;

enum Loaded {
    File(InstanceFile),
    Fasta(Vec<Seq>),
}

fn looks_like_json(path: &Path) -> Result<bool> {
    if path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
    {
        return Ok(true);
    }
    let text = fs::read_to_string(path).map_err(|e| closest_core::Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(text.trim_start().starts_with('{'))
}

fn read_input(args: &InputArgs) -> Result<Loaded> {
    if looks_like_json(&args.input)? {
        return Ok(Loaded::File(InstanceFile::read(&args.input)?));
    }
    let alphabet = Arc::new(Alphabet::parse(&args.alphabet)?);
    let file = fs::File::open(&args.input).map_err(|e| closest_core::Error::Io {
        path: args.input.display().to_string(),
        message: e.to_string(),
    })?;
    let parsed = parse_fasta(BufReader::new(file), &alphabet, args.skip_invalid)
        .with_context(|| format!("reading {}", args.input.display()))?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    if parsed.records.is_empty() {
        bail!("no usable records in {}", args.input.display());
    }
    Ok(Loaded::Fasta(
        parsed.records.into_iter().map(|r| r.seq).collect(),
    ))
}

/// `hamming`, `levenshtein` or `weighted:<cost-table.json>`.
pub fn parse_metric(spec: &str, alphabet: &Arc<Alphabet>) -> Result<Metric<Rational>> {
    match spec.split_once(':') {
        Some(("weighted", path)) => {
            let table = CostTableFile::read(Path::new(path))?;
            Ok(Metric::Weighted(table.to_scheme(alphabet)?))
        }
        None if spec.eq_ignore_ascii_case("hamming") => Ok(Metric::Hamming),
        None if spec.eq_ignore_ascii_case("levenshtein") => Ok(Metric::Levenshtein),
        _ => bail!("unknown metric {spec:?} (hamming, levenshtein or weighted:<file>)"),
    }
}

pub fn load_csp(args: &InputArgs) -> Result<CspInstance<Rational>> {
    match read_input(args)? {
        Loaded::File(file) => {
            let inst = file.to_csp()?;
            if args.metric.is_none() && args.d.is_none() {
                return Ok(inst);
            }
            let metric = match &args.metric {
                Some(spec) => parse_metric(spec, inst.alphabet())?,
                None => inst.metric().clone(),
            };
            Ok(CspInstance::new(
                inst.strings().to_vec(),
                args.d.unwrap_or(inst.d()),
                metric,
            )?)
        }
        Loaded::Fasta(seqs) => {
            let Some(d) = args.d else {
                bail!("--d is required for FASTA input");
            };
            let metric = parse_metric(
                args.metric.as_deref().unwrap_or("hamming"),
                seqs[0].alphabet(),
            )?;
            Ok(CspInstance::new(seqs, d, metric)?)
        }
    }
}

pub fn load_cssp(args: &InputArgs, l: Option<usize>) -> Result<CsspInstance> {
    if let Some(spec) = &args.metric {
        if !spec.eq_ignore_ascii_case("hamming") {
            bail!("closest substring is only defined here for the hamming metric");
        }
    }
    match read_input(args)? {
        Loaded::File(mut file) => {
            if let Some(d) = args.d {
                file.d = d;
            }
            if l.is_some() {
                file.l = l;
            }
            Ok(file.to_cssp()?)
        }
        Loaded::Fasta(seqs) => {
            let (Some(d), Some(l)) = (args.d, l) else {
                bail!("--d and --L are required for FASTA input");
            };
            Ok(CsspInstance::new(seqs, d, l)?)
        }
    }
}

pub fn search_budget(limit: Option<u128>) -> Budget {
    match limit {
        Some(n) => Budget::default().with_search_limit(n),
        None => Budget::default(),
    }
}

/// Writes `text` to `output`, or to stdout.
pub fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| {
            closest_core::Error::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            }
            .into()
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
