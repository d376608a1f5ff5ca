use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Which question a search answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Number of occurrences with any number of translocations.
    A,
    /// Number of occurrences using at most δ translocations.
    B,
    /// Start positions of the occurrences using at most δ translocations.
    C,
    /// For each start position, the distinct translocation counts `t ≤ δ`
    /// that align the pattern with the window.
    D,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::A, Variant::B, Variant::C, Variant::D];
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "a",
            Variant::B => "b",
            Variant::C => "c",
            Variant::D => "d",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(Variant::A),
            "b" => Ok(Variant::B),
            "c" => Ok(Variant::C),
            "d" => Ok(Variant::D),
            other => Err(format!("unknown variant `{other}` (expected a, b, c or d)")),
        }
    }
}

/// Search engine selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    /// Window-by-window brute force over all decompositions.
    Oracle,
    /// Dynamic programming over the factor and cost matrices.
    Dp,
    /// Suffix-automaton driven search.
    Dawg,
    /// Per-window translocation-attempt alignment.
    Align,
}

impl EngineKind {
    pub const ALL: [EngineKind; 4] = [
        EngineKind::Oracle,
        EngineKind::Dp,
        EngineKind::Dawg,
        EngineKind::Align,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Oracle => "oracle",
            EngineKind::Dp => "dp",
            EngineKind::Dawg => "dawg",
            EngineKind::Align => "align",
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EngineKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EngineKind::ALL
            .into_iter()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown engine `{s}` (expected oracle, dp, dawg or align)"))
    }
}

/// Bound, variant and engine for one search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub delta: usize,
    pub variant: Variant,
    pub engine: EngineKind,
}

impl SearchConfig {
    pub fn new(delta: usize, variant: Variant, engine: EngineKind) -> Self {
        SearchConfig {
            delta,
            variant,
            engine,
        }
    }

    pub fn with_engine(self, engine: EngineKind) -> Self {
        SearchConfig { engine, ..self }
    }

    pub fn with_variant(self, variant: Variant) -> Self {
        SearchConfig { variant, ..self }
    }

    /// The bound actually used for a pattern of length `m`.
    ///
    /// Every translocation consumes at least two pattern positions, so no
    /// alignment uses more than `⌊m/2⌋` of them. Variant (a) is unbounded and
    /// therefore runs with exactly that bound; the other variants clamp to it.
    pub fn effective_delta(&self, m: usize) -> usize {
        match self.variant {
            Variant::A => m / 2,
            _ => self.delta.min(m / 2),
        }
    }

    /// True when `delta` exceeds what a pattern of length `m` can use.
    pub fn is_clamped(&self, m: usize) -> bool {
        self.variant != Variant::A && self.delta > m / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_a_ignores_delta() {
        let cfg = SearchConfig::new(0, Variant::A, EngineKind::Dp);
        assert_eq!(cfg.effective_delta(7), 3);
        assert!(!cfg.is_clamped(7));
    }

    #[test]
    fn bounded_variants_clamp() {
        let cfg = SearchConfig::new(9, Variant::C, EngineKind::Dp);
        assert_eq!(cfg.effective_delta(7), 3);
        assert!(cfg.is_clamped(7));
        assert_eq!(cfg.with_variant(Variant::B).effective_delta(12), 6);
        assert_eq!(SearchConfig::new(1, Variant::D, EngineKind::Dawg).effective_delta(12), 1);
    }

    #[test]
    fn parse_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.to_string().parse::<Variant>().unwrap(), v);
        }
        for e in EngineKind::ALL {
            assert_eq!(e.to_string().parse::<EngineKind>().unwrap(), e);
        }
        assert!("e".parse::<Variant>().is_err());
        assert!("kmp".parse::<EngineKind>().is_err());
    }
}
