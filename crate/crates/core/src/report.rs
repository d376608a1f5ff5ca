use serde::Serialize;

use crate::config::Variant;
use crate::costs::CostSet;

/// Translocation counts achievable at one window start.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowCosts {
    /// 0-based start of the window in the text.
    pub position: usize,
    pub costs: CostSet,
}

impl WindowCosts {
    pub fn count(&self) -> usize {
        self.costs.len()
    }
}

/// Result of a search, shaped by the variant that was asked for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
pub enum SearchReport {
    /// Variant (a): occurrences with any number of translocations.
    A { count: usize },
    /// Variant (b): occurrences within the bound.
    B { count: usize },
    /// Variant (c): strictly increasing window starts.
    C { positions: Vec<usize> },
    /// Variant (d): only windows with at least one alignment are listed.
    D { windows: Vec<WindowCosts> },
}

impl SearchReport {
    pub fn variant(&self) -> Variant {
        match self {
            SearchReport::A { .. } => Variant::A,
            SearchReport::B { .. } => Variant::B,
            SearchReport::C { .. } => Variant::C,
            SearchReport::D { .. } => Variant::D,
        }
    }

    /// Number of matching windows, whatever the variant.
    pub fn occurrences(&self) -> usize {
        match self {
            SearchReport::A { count } | SearchReport::B { count } => *count,
            SearchReport::C { positions } => positions.len(),
            SearchReport::D { windows } => windows.len(),
        }
    }

    /// Matching window starts, when the variant records them.
    pub fn positions(&self) -> Option<Vec<usize>> {
        match self {
            SearchReport::C { positions } => Some(positions.clone()),
            SearchReport::D { windows } => Some(windows.iter().map(|w| w.position).collect()),
            _ => None,
        }
    }

    /// `(position, least cost)` pairs for variant (d).
    pub fn min_costs(&self) -> Option<Vec<(usize, usize)>> {
        match self {
            SearchReport::D { windows } => Some(
                windows
                    .iter()
                    .filter_map(|w| w.costs.min().map(|t| (w.position, t)))
                    .collect(),
            ),
            _ => None,
        }
    }
}

/// Accumulates per-window hits into a [`SearchReport`].
///
/// Hits must arrive in increasing window order.
pub(crate) struct ReportBuilder {
    variant: Variant,
    count: usize,
    positions: Vec<usize>,
    windows: Vec<WindowCosts>,
}

impl ReportBuilder {
    pub(crate) fn new(variant: Variant) -> Self {
        ReportBuilder {
            variant,
            count: 0,
            positions: Vec::new(),
            windows: Vec::new(),
        }
    }

    /// Records a matching window. `costs` is only consulted for variant (d).
    pub(crate) fn record(&mut self, position: usize, costs: impl FnOnce() -> CostSet) {
        debug_assert!(self.positions.last().is_none_or(|&p| p < position));
        debug_assert!(self.windows.last().is_none_or(|w| w.position < position));
        self.count += 1;
        match self.variant {
            Variant::A | Variant::B => {}
            Variant::C => self.positions.push(position),
            Variant::D => {
                let costs = costs();
                debug_assert!(!costs.is_empty());
                self.windows.push(WindowCosts { position, costs });
            }
        }
    }

    pub(crate) fn finish(self) -> SearchReport {
        match self.variant {
            Variant::A => SearchReport::A { count: self.count },
            Variant::B => SearchReport::B { count: self.count },
            Variant::C => SearchReport::C {
                positions: self.positions,
            },
            Variant::D => SearchReport::D {
                windows: self.windows,
            },
        }
    }
}
