use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// A non-empty search pattern.
///
/// Positions are 1-based in the algorithms (`x[1..m]`); [`Pattern::at`] takes
/// such a position while [`Pattern::as_bytes`] exposes the usual 0-based slice.
#[derive(Clone, PartialEq, Eq)]
pub struct Pattern {
    bytes: Vec<u8>,
    alphabet: Alphabet,
}

impl Pattern {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Result<Self> {
        let bytes = bytes.into();
        if bytes.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let alphabet = Alphabet::from_bytes(&bytes);
        Ok(Pattern { bytes, alphabet })
    }

    /// Pattern length `m`.
    #[inline]
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Symbol at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        self.bytes[i - 1]
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Symbols occurring in the pattern.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Largest number of translocations any alignment of the pattern can use.
    pub fn max_translocations(&self) -> usize {
        self.len() / 2
    }
}

impl std::fmt::Debug for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Pattern({:?})", String::from_utf8_lossy(&self.bytes))
    }
}

impl TryFrom<&str> for Pattern {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        Pattern::new(s.as_bytes())
    }
}

impl TryFrom<&[u8]> for Pattern {
    type Error = Error;

    fn try_from(s: &[u8]) -> Result<Self> {
        Pattern::new(s)
    }
}
