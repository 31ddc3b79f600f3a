use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::EdgeList;
use crate::error::{Error, Result};

/// Token separator of an edge-list file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeListFormat {
    #[default]
    Whitespace,
    Csv,
}

impl FromStr for EdgeListFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "whitespace" | "ws" | "txt" | "tsv" => Ok(EdgeListFormat::Whitespace),
            "csv" => Ok(EdgeListFormat::Csv),
            other => Err(Error::Config(format!("unknown edge list format '{other}'"))),
        }
    }
}

/// Reads and simplifies an edge list from `path`.
pub fn ingest_edge_list(path: impl AsRef<Path>, format: EdgeListFormat) -> Result<EdgeList> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(BufReader::new(file), format).map_err(|err| match err {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

/// Parses an edge list: one edge per line, two integer node ids. Lines
/// starting with `#` or `%` and blank lines are skipped; columns after the
/// first two (weights, timestamps) are ignored.
pub fn parse_edge_list<R: BufRead>(reader: R, format: EdgeListFormat) -> Result<EdgeList> {
    let mut pairs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io("<input>", e))?;
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens: Box<dyn Iterator<Item = &str>> = match format {
            EdgeListFormat::Whitespace => Box::new(trimmed.split_whitespace()),
            EdgeListFormat::Csv => Box::new(trimmed.split(',').map(str::trim)),
        };
        let mut next_id = || -> Result<u64> {
            let token = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected two node ids".into(),
            })?;
            token.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("'{token}' is not a non-negative integer node id"),
            })
        };
        let a = next_id()?;
        let b = next_id()?;
        pairs.push((a, b));
    }
    Ok(EdgeList::simplify(pairs))
}

/// Writes `pairs` one per line, separated by a space (or a comma for CSV).
pub fn write_edge_list<W: Write>(
    mut out: W,
    pairs: impl IntoIterator<Item = (u64, u64)>,
    format: EdgeListFormat,
) -> std::io::Result<()> {
    let sep = match format {
        EdgeListFormat::Whitespace => ' ',
        EdgeListFormat::Csv => ',',
    };
    for (a, b) in pairs {
        writeln!(out, "{a}{sep}{b}")?;
    }
    out.flush()
}
