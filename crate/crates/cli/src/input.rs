//! Reading pattern and text documents.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

/// How a document's bytes become a symbol sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// Every byte is a symbol; trailing line breaks are dropped.
    Plain,
    /// `>` header lines are skipped, whitespace removed, records joined.
    Fasta,
    /// FASTA if the file extension says so or the first non-blank byte is `>`.
    Auto,
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(InputFormat::Plain),
            "fasta" => Ok(InputFormat::Fasta),
            "auto" => Ok(InputFormat::Auto),
            other => Err(format!("unknown format `{other}` (expected plain, fasta or auto)")),
        }
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputFormat::Plain => "plain",
            InputFormat::Fasta => "fasta",
            InputFormat::Auto => "auto",
        })
    }
}

const FASTA_EXTENSIONS: [&str; 7] = ["fa", "fasta", "fas", "fna", "ffn", "faa", "frn"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

/// A loaded document. Reported offsets refer to `sequence`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    /// Path, or `-` for standard input.
    pub source: String,
    /// The format actually applied (never `Auto`).
    pub format: InputFormat,
    pub sequence: Vec<u8>,
}

impl InputDocument {
    /// Normalizes `raw`. `source` is used for extension sniffing and messages.
    pub fn parse(
        source: &str,
        raw: &[u8],
        format: InputFormat,
        fold_case: bool,
    ) -> Result<InputDocument, InputError> {
        let format = match format {
            InputFormat::Auto => detect(source, raw),
            f => f,
        };
        let mut sequence = match format {
            InputFormat::Fasta => parse_fasta(source, raw)?,
            _ => normalize_plain(raw),
        };
        if fold_case {
            sequence.make_ascii_lowercase();
        }
        Ok(InputDocument {
            source: source.to_string(),
            format,
            sequence,
        })
    }
}

fn detect(source: &str, raw: &[u8]) -> InputFormat {
    let by_ext = Path::new(source)
        .extension()
        .and_then(|e| e.to_str())
        .is_some_and(|e| FASTA_EXTENSIONS.contains(&e.to_ascii_lowercase().as_str()));
    let by_content = raw.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'>');
    if by_ext || by_content {
        InputFormat::Fasta
    } else {
        InputFormat::Plain
    }
}

/// Drops trailing `\r` and `\n`; everything else is kept.
pub fn normalize_plain(raw: &[u8]) -> Vec<u8> {
    let end = raw
        .iter()
        .rposition(|&b| b != b'\n' && b != b'\r')
        .map_or(0, |p| p + 1);
    raw[..end].to_vec()
}

fn parse_fasta(source: &str, raw: &[u8]) -> Result<Vec<u8>, InputError> {
    let mut seq = Vec::with_capacity(raw.len());
    let mut seen_header = false;
    for (n, line) in raw.split(|&b| b == b'\n').enumerate() {
        let line = line.trim_ascii();
        if line.is_empty() {
            continue;
        }
        if line[0] == b'>' {
            seen_header = true;
            continue;
        }
        if !seen_header {
            return Err(InputError(format!(
                "{source}: malformed FASTA: sequence data on line {} before the first `>` header",
                n + 1
            )));
        }
        seq.extend(line.iter().filter(|b| !b.is_ascii_whitespace()));
    }
    if !seen_header {
        return Err(InputError(format!("{source}: malformed FASTA: no `>` header")));
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(source: &str, raw: &str, format: InputFormat) -> Result<Vec<u8>, InputError> {
        InputDocument::parse(source, raw.as_bytes(), format, false).map(|d| d.sequence)
    }

    #[test]
    fn plain_strips_line_end_only() {
        assert_eq!(parse("t", "ab ba\r\n\n", InputFormat::Plain).unwrap(), b"ab ba");
        assert_eq!(parse("t", "", InputFormat::Plain).unwrap(), b"");
    }

    #[test]
    fn fasta_joins_records() {
        let raw = ">r1 first\nACGT\n  AC GT \n>r2\nTT\n";
        assert_eq!(parse("-", raw, InputFormat::Auto).unwrap(), b"ACGTACGTTT");
        let doc = InputDocument::parse("-", raw.as_bytes(), InputFormat::Auto, true).unwrap();
        assert_eq!(doc.format, InputFormat::Fasta);
        assert_eq!(doc.sequence, b"acgtacgttt");
    }

    #[test]
    fn detection() {
        assert_eq!(detect("x.FASTA", b"acgt"), InputFormat::Fasta);
        assert_eq!(detect("x.txt", b"\n >h\nac"), InputFormat::Fasta);
        assert_eq!(detect("x.txt", b"acgt"), InputFormat::Plain);
    }

    #[test]
    fn malformed_fasta() {
        assert!(parse("f.fa", "acgt\n>h\nac", InputFormat::Auto).is_err());
        assert!(parse("f", "acgt", InputFormat::Fasta).is_err());
    }

    #[test]
    fn normalization_is_idempotent() {
        for raw in ["ab\n", ">h\nAC\nGT\n", "x\r\n\r\n"] {
            let once = InputDocument::parse("-", raw.as_bytes(), InputFormat::Auto, true).unwrap();
            let twice = InputDocument::parse("-", &once.sequence, InputFormat::Plain, true).unwrap();
            assert_eq!(once.sequence, twice.sequence);
        }
    }
}
