//! Exact minimum size of connected `[s,t]`-graphs of small order.

use std::fmt;

use serde::Serialize;

use crate::enumerate::{enumerate_connected_filtered, StFilter};
use crate::error::{Error, Result};
use crate::graph6::to_graph6;
use crate::predicates::STParams;

pub const MAX_MINSIZE_ORDER: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinSizeResult {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    /// `⌈t·n(n-1) / (s(s-1))⌉`.
    pub lower_bound: usize,
    /// `None` when no connected `[s,t]`-graph of order `n` exists.
    pub minimum: Option<usize>,
    /// graph6 of the first minimiser in generation order.
    pub witness: Option<String>,
}

impl fmt::Display for MinSizeResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} s={} t={} lower_bound={}", self.n, self.s, self.t, self.lower_bound)?;
        match (&self.minimum, &self.witness) {
            (Some(m), Some(w)) => write!(f, " minimum={m} witness={w}"),
            _ => write!(f, " minimum=none"),
        }
    }
}

pub fn edge_lower_bound(n: usize, s: usize, t: usize) -> usize {
    (t * n * n.saturating_sub(1)).div_ceil(s * (s - 1))
}

/// Scans every connected graph of order `n` whose induced subgraphs are all
/// `[s,t]` (the property is hereditary, so this is every connected
/// `[s,t]`-graph) and returns the fewest edges found.
pub fn min_size_search(n: usize, s: usize, t: usize) -> Result<MinSizeResult> {
    if s < 2 || t < 1 {
        return Err(Error::InvalidParams(format!("need s >= 2 and t >= 1, got s={s} t={t}")));
    }
    if !(1..=MAX_MINSIZE_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { n, min: 1, max: MAX_MINSIZE_ORDER });
    }
    let p = STParams::new(s, t)?;
    let best = enumerate_connected_filtered(n, StFilter(p))?.fold(None, |best: Option<(usize, _)>, g| match best {
        Some((e, _)) if e <= g.size() => best,
        _ => Some((g.size(), g)),
    });
    Ok(MinSizeResult {
        n,
        s,
        t,
        lower_bound: edge_lower_bound(n, s, t),
        minimum: best.as_ref().map(|(e, _)| *e),
        witness: best.map(|(_, g)| to_graph6(&g).expect("order at most 9")),
    })
}
