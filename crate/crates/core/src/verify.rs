//! Exhaustive verification scans over connected graphs of small order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{scan_connected, HereditaryFilter, NoFilter, StFilter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};
use crate::predicates::{
    exception_witness, independence_number, is_hamiltonian, is_hamiltonian_connected, is_petersen, is_st_graph,
    join_witness, min_induced_edges, vertex_connectivity, STParams,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// k-connected `[k+1,2]` implies hamiltonian-connected unless `kK1 ∨ G_k`.
    Main,
    /// κ ≥ k and α ≤ k-1 implies hamiltonian-connected.
    ChvatalErdos,
    /// k-connected `[k+2,2]` implies hamiltonian unless Petersen or
    /// `(k+1)K1 ∨ G_k`.
    WangMou,
    /// `s(s-1)·e(G) ≥ t·n(n-1)` for every `[s,t]`-graph.
    EdgeBound,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Main => "main",
            TheoremId::ChvatalErdos => "chvatal-erdos",
            TheoremId::WangMou => "wang-mou",
            TheoremId::EdgeBound => "edge-bound",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "main" => Ok(TheoremId::Main),
            "ce" | "chvatal-erdos" => Ok(TheoremId::ChvatalErdos),
            "wangmou" | "wang-mou" => Ok(TheoremId::WangMou),
            "bound" | "edge-bound" => Ok(TheoremId::EdgeBound),
            other => Err(Error::InvalidParams(format!("unknown theorem `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessKind {
    Petersen,
    /// `aK1 ∨ H` with `|H| = rest`.
    Join { independent: usize, rest: usize },
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessKind::Petersen => f.write_str("petersen"),
            WitnessKind::Join { independent, rest } => write!(f, "join({independent},{rest})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExceptionRecord {
    pub graph6: String,
    pub witness: WitnessKind,
}

impl ExceptionRecord {
    /// Decodes the graph and re-runs the witness predicate.
    pub fn revalidate(&self) -> bool {
        let Ok(g) = from_graph6(&self.graph6) else { return false };
        match self.witness {
            WitnessKind::Petersen => is_petersen(&g),
            WitnessKind::Join { independent, rest } => {
                join_witness(&g, independent, rest).is_some_and(|w| w.is_valid_for(&g))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub n_range: (usize, usize),
    pub k: Option<usize>,
    pub scanned: u64,
    pub hypothesis_hits: u64,
    pub exceptions: Vec<ExceptionRecord>,
    pub counterexamples: Vec<String>,
}

impl TheoremReport {
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theorem {} n={}..={}", self.theorem, self.n_range.0, self.n_range.1)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        writeln!(f)?;
        writeln!(f, "  scanned          {}", self.scanned)?;
        writeln!(f, "  hypothesis hits  {}", self.hypothesis_hits)?;
        writeln!(f, "  exceptions       {}", self.exceptions.len())?;
        for e in &self.exceptions {
            writeln!(f, "    {} {}", e.graph6, e.witness)?;
        }
        writeln!(f, "  counterexamples  {}", self.counterexamples.len())?;
        for c in &self.counterexamples {
            writeln!(f, "    {c}")?;
        }
        write!(f, "  verdict          {}", if self.verified() { "verified" } else { "FAILED" })
    }
}

/// Where the scanned graphs come from.
#[derive(Clone, Debug, Default)]
pub enum Source {
    /// Built-in generator. With `prune`, the theorem's hereditary hypothesis
    /// is applied during generation.
    #[default]
    Generated,
    GeneratedUnpruned,
    /// An explicit list, e.g. parsed from a graph6 stream. Graphs of order
    /// above `n_max` are skipped.
    Graphs(Vec<Graph>),
}

#[derive(Default)]
struct Tally {
    scanned: u64,
    hits: u64,
    exceptions: Vec<ExceptionRecord>,
    counterexamples: Vec<String>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.scanned += other.scanned;
        self.hits += other.hits;
        self.exceptions.extend(other.exceptions);
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

fn g6(g: &Graph) -> String {
    to_graph6(g).expect("scanned graphs have order at most 10")
}

const MAX_SCAN_ORDER: usize = 10;

fn run<F, V>(theorem: TheoremId, k: Option<usize>, n_max: usize, source: Source, filter: F, visit: V) -> Result<TheoremReport>
where
    F: HereditaryFilter,
    V: Fn(&Graph, &mut Tally) + Sync,
{
    let one = |g: &Graph| {
        let mut t = Tally { scanned: 1, ..Tally::default() };
        visit(g, &mut t);
        t
    };
    let tally = match source {
        Source::Generated => scan_connected(n_max, &filter, one, Tally::merge)?,
        Source::GeneratedUnpruned => scan_connected(n_max, &NoFilter, one, Tally::merge)?,
        Source::Graphs(gs) => {
            use rayon::prelude::*;
            gs.par_iter().filter(|g| g.order() <= n_max).map(one).reduce(Tally::default, Tally::merge)
        }
    };
    let mut exceptions = tally.exceptions;
    exceptions.sort();
    exceptions.dedup();
    let mut counterexamples = tally.counterexamples;
    counterexamples.sort();
    counterexamples.dedup();
    Ok(TheoremReport {
        theorem,
        n_range: (1, n_max),
        k,
        scanned: tally.scanned,
        hypothesis_hits: tally.hits,
        exceptions,
        counterexamples,
    })
}

fn check_args(k: usize, k_min: usize, n_max: usize, n_cap: usize) -> Result<()> {
    if k < k_min {
        return Err(Error::InvalidParams(format!("k must be at least {k_min}, got {k}")));
    }
    if !(1..=n_cap).contains(&n_max) {
        return Err(Error::OrderOutOfRange { n: n_max, min: 1, max: n_cap });
    }
    Ok(())
}

fn st(s: usize, t: usize) -> STParams {
    STParams::new(s, t).expect("s is positive")
}

/// Every k-connected `[k+1,2]`-graph of order at most `n_max` is
/// hamiltonian-connected or (exclusively) a `kK1 ∨ G_k`.
pub fn verify_main_theorem(n_max: usize, k: usize, source: Source) -> Result<TheoremReport> {
    check_args(k, 2, n_max, MAX_SCAN_ORDER)?;
    let p = st(k + 1, 2);
    let trusted = matches!(source, Source::Generated);
    run(TheoremId::Main, Some(k), n_max, source, StFilter(p), |g, t| {
        if g.order() < k + 1 || !(trusted || is_st_graph(g, p)) || vertex_connectivity(g) < k {
            return;
        }
        t.hits += 1;
        let hc = is_hamiltonian_connected(g);
        match (hc, exception_witness(g, k)) {
            (true, None) => {}
            (false, Some(_)) => {
                t.exceptions.push(ExceptionRecord { graph6: g6(g), witness: WitnessKind::Join { independent: k, rest: k } })
            }
            _ => t.counterexamples.push(g6(g)),
        }
    })
}

/// Every graph with κ ≥ k and α ≤ k-1 is hamiltonian-connected.
pub fn verify_chvatal_erdos(n_max: usize, k: usize, source: Source) -> Result<TheoremReport> {
    check_args(k, 2, n_max, MAX_SCAN_ORDER)?;
    // α ≤ k-1 is the [k,1] property
    let p = st(k, 1);
    let trusted = matches!(source, Source::Generated);
    run(TheoremId::ChvatalErdos, Some(k), n_max, source, StFilter(p), |g, t| {
        if g.order() < k + 1 || !(trusted || independence_number(g) < k) || vertex_connectivity(g) < k {
            return;
        }
        t.hits += 1;
        if !is_hamiltonian_connected(g) {
            t.counterexamples.push(g6(g));
        }
    })
}

/// Every k-connected `[k+2,2]`-graph on at least 3 vertices is hamiltonian
/// or (exclusively) the Petersen graph or a `(k+1)K1 ∨ G_k`.
pub fn verify_wang_mou(n_max: usize, k: usize, source: Source) -> Result<TheoremReport> {
    check_args(k, 1, n_max, MAX_SCAN_ORDER)?;
    let p = st(k + 2, 2);
    let trusted = matches!(source, Source::Generated);
    run(TheoremId::WangMou, Some(k), n_max, source, StFilter(p), |g, t| {
        if g.order() < (k + 1).max(3) || !(trusted || is_st_graph(g, p)) || vertex_connectivity(g) < k {
            return;
        }
        t.hits += 1;
        let ham = is_hamiltonian(g).expect("order at least 3");
        let witness = if is_petersen(g) {
            Some(WitnessKind::Petersen)
        } else {
            join_witness(g, k + 1, k).map(|_| WitnessKind::Join { independent: k + 1, rest: k })
        };
        match (ham, witness) {
            (true, None) => {}
            (false, Some(w)) => t.exceptions.push(ExceptionRecord { graph6: g6(g), witness: w }),
            _ => t.counterexamples.push(g6(g)),
        }
    })
}

/// `s(s-1)·e(G) ≥ t*·n(n-1)` with `t*` the sparsest induced `s`-subgraph,
/// for every connected `G` with `n ≤ n_max` and every `2 ≤ s ≤ n`.
pub fn verify_edge_bound(n_max: usize, source: Source) -> Result<TheoremReport> {
    check_args(0, 0, n_max, 9)?;
    let source = match source {
        Source::Generated => Source::GeneratedUnpruned,
        other => other,
    };
    run(TheoremId::EdgeBound, None, n_max, source, NoFilter, |g, t| {
        let n = g.order();
        let e = g.size();
        for s in 2..=n {
            let tstar = min_induced_edges(g, s).expect("s <= n");
            t.hits += 1;
            if s * (s - 1) * e < tstar * n * (n - 1) {
                t.counterexamples.push(format!("{} s={s}", g6(g)));
            }
        }
    })
}

pub fn verify(theorem: TheoremId, n_max: usize, k: usize, source: Source) -> Result<TheoremReport> {
    match theorem {
        TheoremId::Main => verify_main_theorem(n_max, k, source),
        TheoremId::ChvatalErdos => verify_chvatal_erdos(n_max, k, source),
        TheoremId::WangMou => verify_wang_mou(n_max, k, source),
        TheoremId::EdgeBound => verify_edge_bound(n_max, source),
    }
}
