//! Pattern matching under non-overlapping unbalanced translocations.
//!
//! A window of the text matches the pattern `x` when `x` can be turned into it
//! by swapping adjacent factors `uv → vu` (of any, possibly different, lengths),
//! no symbol taking part in more than one swap. Each swap costs one.
//!
//! Four engines answer the same questions ([`Variant`]):
//!
//! * [`oracle`]: brute force per window, the reference;
//! * [`dp`]: dynamic programming, `O(n·m³)`;
//! * [`dawg`]: driven by the suffix automaton of the pattern, same worst case
//!   but far less work on random text;
//! * [`align`]: per-window translocation attempts, `O(m³)` per window.
//!
//! ```
//! use transloc::{search, EngineKind, Pattern, SearchConfig, SearchReport, Variant};
//!
//! let x = Pattern::try_from("ab")?;
//! let cfg = SearchConfig::new(1, Variant::C, EngineKind::Dawg);
//! assert_eq!(search(&x, b"abba", &cfg)?, SearchReport::C { positions: vec![0, 2] });
//! # Ok::<(), transloc::Error>(())
//! ```

pub mod align;
pub mod alphabet;
pub mod bench;
pub mod config;
pub mod costs;
pub mod dawg;
pub mod dp;
pub mod error;
pub mod oracle;
pub mod pattern;
pub mod report;

pub use alphabet::Alphabet;
pub use config::{EngineKind, SearchConfig, Variant};
pub use costs::CostSet;
pub use error::{Error, Result};
pub use pattern::Pattern;
pub use report::{SearchReport, WindowCosts};

/// Searches `y` for `x` with the engine named in `cfg`.
pub fn search(x: &Pattern, y: &[u8], cfg: &SearchConfig) -> Result<SearchReport> {
    bench::run_counted(x, y, cfg, &mut bench::WorkCounters::default())
}
