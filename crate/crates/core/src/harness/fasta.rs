use std::io::{BufRead, Write};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::strings::{Alphabet, Seq};

#[derive(Debug, Clone, PartialEq)]
pub struct FastaRecord {
    pub header: String,
    pub seq: Seq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FastaParse {
    pub records: Vec<FastaRecord>,
    /// One line per record dropped under `skip_invalid`.
    pub warnings: Vec<String>,
}

struct Pending {
    header: String,
    text: String,
}

/// Reads FASTA: `>` header lines, each followed by sequence lines that are
/// joined and upper-cased. A symbol outside `alphabet` is an error naming
/// the record and 0-based position, or, with `skip_invalid`, drops the
/// record with a warning.
pub fn parse_fasta<R: BufRead>(
    reader: R,
    alphabet: &Arc<Alphabet>,
    skip_invalid: bool,
) -> Result<FastaParse> {
    let mut out = FastaParse {
        records: Vec::new(),
        warnings: Vec::new(),
    };
    let mut pending: Option<Pending> = None;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with(';') {
            continue;
        }
        if let Some(header) = line.strip_prefix('>') {
            if let Some(p) = pending.take() {
                finish(p, alphabet, skip_invalid, &mut out)?;
            }
            pending = Some(Pending {
                header: header.trim().to_string(),
                text: String::new(),
            });
        } else {
            let p = pending.as_mut().ok_or_else(|| {
                Error::Parse(format!(
                    "line {}: sequence data before the first header",
                    lineno + 1
                ))
            })?;
            p.text.extend(line.chars().filter(|c| !c.is_whitespace()));
        }
    }
    match pending {
        Some(p) => finish(p, alphabet, skip_invalid, &mut out)?,
        None => return Err(Error::Parse("no FASTA records in input".into())),
    }
    Ok(out)
}

pub fn parse_fasta_str(
    text: &str,
    alphabet: &Arc<Alphabet>,
    skip_invalid: bool,
) -> Result<FastaParse> {
    parse_fasta(text.as_bytes(), alphabet, skip_invalid)
}

fn finish(
    p: Pending,
    alphabet: &Arc<Alphabet>,
    skip_invalid: bool,
    out: &mut FastaParse,
) -> Result<()> {
    let upper = p.text.to_uppercase();
    match Seq::parse(alphabet, &upper) {
        Ok(seq) => {
            out.records.push(FastaRecord {
                header: p.header,
                seq,
            });
            Ok(())
        }
        Err(Error::InvalidSymbol { symbol, position }) => {
            let err = Error::InvalidRecord {
                record: p.header,
                position,
                symbol,
            };
            if skip_invalid {
                out.warnings.push(format!("skipped {err}"));
                Ok(())
            } else {
                Err(err)
            }
        }
        Err(e) => Err(e),
    }
}

/// Writes records with sequence lines wrapped at `width` (0: no wrapping).
pub fn write_fasta<W: Write>(
    mut w: W,
    records: &[FastaRecord],
    width: usize,
) -> std::io::Result<()> {
    for r in records {
        writeln!(w, ">{}", r.header)?;
        let text = r.seq.to_string();
        if width == 0 || text.is_empty() {
            writeln!(w, "{text}")?;
            continue;
        }
        let chars: Vec<char> = text.chars().collect();
        for chunk in chars.chunks(width) {
            writeln!(w, "{}", chunk.iter().collect::<String>())?;
        }
    }
    Ok(())
}

pub fn fasta_to_string(records: &[FastaRecord], width: usize) -> String {
    let mut buf = Vec::new();
    write_fasta(&mut buf, records, width).expect("writing to memory");
    String::from_utf8(buf).expect("sequences are valid UTF-8")
}
