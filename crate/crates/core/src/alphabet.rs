/// An ordered set of byte-sized symbols.
///
/// Ranks are dense in `0..size()` and follow byte order, so tables indexed by
/// rank stay compact even when the symbols are arbitrary bytes.
#[derive(Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<u8>,
    rank: Box<[u16; 256]>,
}

const ABSENT: u16 = u16::MAX;

impl Alphabet {
    /// Collects the distinct bytes of `bytes`.
    pub fn from_bytes(bytes: &[u8]) -> Self {
        let mut seen = [false; 256];
        for &b in bytes {
            seen[b as usize] = true;
        }
        let symbols: Vec<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        let mut rank = Box::new([ABSENT; 256]);
        for (r, &b) in symbols.iter().enumerate() {
            rank[b as usize] = r as u16;
        }
        Alphabet { symbols, rank }
    }

    /// Number of symbols, usually written σ.
    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    #[inline]
    pub fn rank(&self, symbol: u8) -> Option<usize> {
        match self.rank[symbol as usize] {
            ABSENT => None,
            r => Some(r as usize),
        }
    }

    pub fn contains(&self, symbol: u8) -> bool {
        self.rank(symbol).is_some()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }
}

impl std::fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set()
            .entries(self.symbols.iter().map(|&b| b as char))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_follow_byte_order() {
        let a = Alphabet::from_bytes(b"gattaca");
        assert_eq!(a.size(), 4);
        assert_eq!(a.symbols(), b"acgt");
        assert_eq!(a.rank(b'a'), Some(0));
        assert_eq!(a.rank(b't'), Some(3));
        assert_eq!(a.rank(b'x'), None);
    }

    #[test]
    fn empty_input_gives_empty_alphabet() {
        let a = Alphabet::from_bytes(b"");
        assert!(a.is_empty());
        assert!(!a.contains(0));
    }
}
