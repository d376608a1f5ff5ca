//! Suffix automaton (DAWG) of the pattern and the automaton-driven engine.
//!
//! States are end-position equivalence classes of the pattern's factors. They
//! are numbered so that the root is `0`, state `i` (for `1 ≤ i ≤ m`) is the
//! class of the prefix `x[1..i]`, and the states created by cloning come after.
//! End positions are 1-based, like the prefixes they end.

mod endpos;
mod search;

use std::fmt::Write as _;

pub use endpos::EndPosRepr;
pub use search::{dawg_search, dawg_search_counted, dawg_search_observed, PrefixSet, ScanStep};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::pattern::Pattern;
use endpos::EndPosStore;

pub type StateId = u32;

const NONE: u32 = u32::MAX;

/// State of the automaton after reading a text prefix `y[1..j]`.
///
/// `len` is the length of the longest suffix of `y[1..j]` that is a factor of
/// the pattern, and `state` is that factor's class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct YConfiguration {
    pub state: StateId,
    pub len: usize,
}

impl YConfiguration {
    pub const START: YConfiguration = YConfiguration { state: 0, len: 0 };
}

#[derive(Debug, Clone)]
pub struct Dawg {
    alphabet: Alphabet,
    m: usize,
    /// `next[q * σ + rank(c)]`
    next: Vec<u32>,
    link: Vec<u32>,
    len: Vec<u32>,
    end_pos: EndPosStore,
}

/// Builds the automaton with the default end-position representation.
pub fn build_dawg(x: &Pattern) -> Dawg {
    Dawg::build(x)
}

impl Dawg {
    pub fn build(x: &Pattern) -> Dawg {
        Dawg::build_with(x, EndPosRepr::default())
    }

    pub fn build_with(x: &Pattern, repr: EndPosRepr) -> Dawg {
        let alphabet = x.alphabet().clone();
        let sigma = alphabet.size();
        let m = x.len();

        // Online construction; ids are renumbered afterwards.
        let mut next = vec![NONE; sigma];
        let mut link = vec![NONE];
        let mut len = vec![0u32];
        let mut prefix = Vec::with_capacity(m);
        let mut last = 0usize;
        for &c in x.as_bytes() {
            let r = alphabet.rank(c).expect("pattern symbol in its own alphabet");
            let cur = len.len();
            len.push(len[last] + 1);
            link.push(NONE);
            next.extend(std::iter::repeat_n(NONE, sigma));
            prefix.push(cur);

            let mut p = last as u32;
            while p != NONE && next[p as usize * sigma + r] == NONE {
                next[p as usize * sigma + r] = cur as u32;
                p = link[p as usize];
            }
            if p == NONE {
                link[cur] = 0;
            } else {
                let q = next[p as usize * sigma + r];
                if len[p as usize] + 1 == len[q as usize] {
                    link[cur] = q;
                } else {
                    let clone = len.len() as u32;
                    len.push(len[p as usize] + 1);
                    link.push(link[q as usize]);
                    next.extend_from_within(q as usize * sigma..(q as usize + 1) * sigma);
                    while p != NONE && next[p as usize * sigma + r] == q {
                        next[p as usize * sigma + r] = clone;
                        p = link[p as usize];
                    }
                    link[q as usize] = clone;
                    link[cur] = clone;
                }
            }
            last = cur;
        }

        // Renumber: root, then prefix classes in order, then clones.
        let n_states = len.len();
        let mut new_id = vec![NONE; n_states];
        new_id[0] = 0;
        for (i, &old) in prefix.iter().enumerate() {
            new_id[old] = i as u32 + 1;
        }
        let mut fresh = m as u32 + 1;
        for id in new_id.iter_mut() {
            if *id == NONE {
                *id = fresh;
                fresh += 1;
            }
        }
        let mut r_next = vec![NONE; n_states * sigma];
        let mut r_link = vec![NONE; n_states];
        let mut r_len = vec![0u32; n_states];
        for old in 0..n_states {
            let q = new_id[old] as usize;
            r_len[q] = len[old];
            r_link[q] = match link[old] {
                NONE => NONE,
                l => new_id[l as usize],
            };
            for r in 0..sigma {
                let t = next[old * sigma + r];
                if t != NONE {
                    r_next[q * sigma + r] = new_id[t as usize];
                }
            }
        }

        // end-pos(q) collects every prefix whose suffix path passes through q.
        let mut lists = vec![Vec::new(); n_states];
        for i in 1..=m {
            let mut q = i as u32;
            while q != 0 {
                lists[q as usize].push(i as u32);
                q = r_link[q as usize];
            }
        }

        Dawg {
            alphabet,
            m,
            next: r_next,
            link: r_link,
            len: r_len,
            end_pos: EndPosStore::from_lists(lists, m, repr),
        }
    }

    pub fn root(&self) -> StateId {
        0
    }

    /// Length of the pattern the automaton was built from.
    pub fn pattern_len(&self) -> usize {
        self.m
    }

    pub fn state_count(&self) -> usize {
        self.len.len()
    }

    pub fn transition_count(&self) -> usize {
        self.next.iter().filter(|&&t| t != NONE).count()
    }

    pub fn end_pos_repr(&self) -> EndPosRepr {
        self.end_pos.repr()
    }

    /// Length of the longest string in the class of `q`.
    pub fn len(&self, q: StateId) -> usize {
        self.len[q as usize] as usize
    }

    /// The suffix link of `q`; `None` for the root.
    pub fn suffix_link(&self, q: StateId) -> Option<StateId> {
        match self.link[q as usize] {
            NONE => None,
            l => Some(l),
        }
    }

    #[inline]
    pub fn transition(&self, q: StateId, c: u8) -> Option<StateId> {
        let r = self.alphabet.rank(c)?;
        match self.next[q as usize * self.alphabet.size() + r] {
            NONE => None,
            t => Some(t),
        }
    }

    /// The class of `x[1..i]`, for `1 ≤ i ≤ m`.
    pub fn prefix_state(&self, i: usize) -> StateId {
        assert!((1..=self.m).contains(&i), "prefix length {i} out of range");
        i as StateId
    }

    /// Sorted 1-based end positions of the strings in class `q`.
    /// Empty for the root.
    pub fn end_pos(&self, q: StateId) -> Vec<usize> {
        self.end_pos.positions(q as usize)
    }

    #[inline]
    pub fn end_pos_contains(&self, q: StateId, pos: usize) -> bool {
        self.end_pos.contains(q as usize, pos)
    }

    /// The state reached by reading `w` from the root, if any.
    pub fn state_of(&self, w: &[u8]) -> Option<StateId> {
        w.iter()
            .try_fold(self.root(), |q, &c| self.transition(q, c))
    }

    /// Whether `w` is a factor of the pattern. Every state is final.
    pub fn accepts(&self, w: &[u8]) -> bool {
        self.state_of(w).is_some()
    }

    /// Extends a configuration by one text symbol.
    ///
    /// Follows suffix links from `cfg.state` to the first state with a
    /// transition on `c`; falls back to the start configuration.
    pub fn dawg_delta(&self, cfg: YConfiguration, c: u8) -> YConfiguration {
        self.delta_counted(cfg, c, &mut 0)
    }

    #[inline]
    pub(crate) fn delta_counted(&self, cfg: YConfiguration, c: u8, hops: &mut u64) -> YConfiguration {
        let Some(r) = self.alphabet.rank(c) else {
            return YConfiguration::START;
        };
        let sigma = self.alphabet.size();
        let t = self.next[cfg.state as usize * sigma + r];
        if t != NONE {
            return YConfiguration {
                state: t,
                len: cfg.len + 1,
            };
        }
        let mut p = self.link[cfg.state as usize];
        while p != NONE {
            *hops += 1;
            let t = self.next[p as usize * sigma + r];
            if t != NONE {
                return YConfiguration {
                    state: t,
                    len: self.len[p as usize] as usize + 1,
                };
            }
            p = self.link[p as usize];
        }
        YConfiguration::START
    }

    /// The class of the length-`k` suffix of the longest string of `q`.
    pub fn phi(&self, q: StateId, k: usize) -> Result<StateId> {
        let max = self.len(q);
        if k == 0 || k > max {
            return Err(Error::SuffixLengthOutOfRange { state: q, k, max });
        }
        let mut q = q;
        while let Some(l) = self.suffix_link(q) {
            if self.len(l) < k {
                break;
            }
            q = l;
        }
        Ok(q)
    }

    /// Configurations after each symbol of `y`, for `j = 1..=|y|`.
    pub fn scan<'a>(&'a self, y: &'a [u8]) -> impl Iterator<Item = YConfiguration> + 'a {
        y.iter().scan(YConfiguration::START, move |cfg, &c| {
            *cfg = self.dawg_delta(*cfg, c);
            Some(*cfg)
        })
    }

    /// Plain-text listing, one state per line:
    /// `id<TAB>len<TAB>link<TAB>transitions<TAB>end-pos`.
    pub fn dump(&self) -> String {
        let sigma = self.alphabet.size();
        let mut out = String::from("# state\tlen\tlink\ttransitions\tend-pos\n");
        for q in 0..self.state_count() {
            let link = self
                .suffix_link(q as StateId)
                .map_or_else(|| "-".to_string(), |l| l.to_string());
            let trans: Vec<String> = (0..sigma)
                .filter_map(|r| {
                    let t = self.next[q * sigma + r];
                    (t != NONE).then(|| {
                        format!("{}:{}", self.alphabet.symbols()[r].escape_ascii(), t)
                    })
                })
                .collect();
            let ends: Vec<String> = self
                .end_pos(q as StateId)
                .iter()
                .map(|p| p.to_string())
                .collect();
            let _ = writeln!(
                out,
                "{q}\t{}\t{link}\t{}\t{}",
                self.len[q],
                or_dash(trans.join(",")),
                or_dash(ends.join(",")),
            );
        }
        out
    }
}

fn or_dash(s: String) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        s
    }
}
