//! Longest-path improvement between two fixed endpoints.
//!
//! [`improve`] grows a `(u, v)`-path with the rewiring rules in [`rules`]
//! until it spans the graph or no rule fires. In the second case it looks
//! for a reason the graph falls outside the hamiltonian-connected regime: a
//! join witness `kK1 ∨ G_k`, or a `(k+1)`-set inducing at most one edge.

pub mod rules;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::path::{anchor, anchor_at, UVPath};
use crate::predicates::{exception_witness, hamilton_uv_path, sparsest_subset, vertex_connectivity, JoinWitness};
pub use rules::{apply_rule, RuleId, RuleKind, CATALOG};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// `k+1` vertices inducing at most one edge, with `k` the connectivity.
    SparseSet(VertexSet),
    JoinWitness(JoinWitness),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    HamiltonPath(UVPath),
    Stalled { path: UVPath, certificate: Certificate },
}

/// One accepted move. ρ is recorded only while exactly one vertex is off the
/// path and the path has at least two anchors; otherwise it prints as `na`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub rule: RuleId,
    pub len_before: usize,
    pub len_after: usize,
    pub rho_before: Option<usize>,
    pub rho_after: Option<usize>,
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |r: Option<usize>| r.map_or_else(|| "na".to_string(), |x| x.to_string());
        write!(
            f,
            "rule={} len={}->{} rho={}->{}",
            self.rule,
            self.len_before,
            self.len_after,
            show(self.rho_before),
            show(self.rho_after)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EngineResult {
    pub outcome: Outcome,
    pub trace: Vec<TraceRecord>,
}

impl EngineResult {
    pub fn hamilton_path(&self) -> Option<&UVPath> {
        match &self.outcome {
            Outcome::HamiltonPath(p) => Some(p),
            Outcome::Stalled { .. } => None,
        }
    }
}

fn check_endpoints(g: &Graph, u: usize, v: usize) -> Result<()> {
    for x in [u, v] {
        if x >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: x, order: g.order() });
        }
    }
    if u == v {
        return Err(Error::InvalidParams(format!("endpoints must differ, got {u} twice")));
    }
    Ok(())
}

/// Greedy seed: from the current end, step to the unvisited neighbour of
/// highest degree from which `v` stays reachable through unvisited vertices.
/// When no such neighbour exists the current end is adjacent to `v`.
fn seed(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let mut path = vec![u];
    let mut unvisited = g.vertices().difference(VertexSet::singleton(u));
    let mut cur = u;
    loop {
        let next = g
            .neighbors(cur)
            .intersection(unvisited)
            .iter()
            .filter(|&w| w != v && g.reach_within(w, unvisited).contains(v))
            .max_by_key(|&w| (g.degree(w), std::cmp::Reverse(w)));
        match next {
            Some(w) => {
                path.push(w);
                unvisited.remove(w);
                cur = w;
            }
            None => {
                debug_assert!(g.adjacent(cur, v));
                path.push(v);
                return path;
            }
        }
    }
}

fn current_rho(g: &Graph, p: &UVPath) -> Option<usize> {
    anchor(g, p).and_then(|ap| ap.rho())
}

/// Runs the rule loop from a greedy seed path.
///
/// Every accepted move strictly increases `(length, ρ)` lexicographically,
/// so the loop ends after at most `n²` moves.
pub fn improve(g: &Graph, u: usize, v: usize) -> Result<EngineResult> {
    check_endpoints(g, u, v)?;
    if !g.reach_within(u, g.vertices()).contains(v) {
        return Err(Error::NoPath { u, v });
    }
    let n = g.order();
    let mut path = UVPath::new(seed(g, u, v));
    let mut trace = Vec::new();
    loop {
        if path.len() == n {
            return Ok(EngineResult { outcome: Outcome::HamiltonPath(path), trace });
        }
        let outside = g.vertices().difference(path.vertex_set());
        let mut accepted = None;
        'rules: for rule in CATALOG {
            if rule == RuleId::R1 && outside.len() != 1 {
                continue;
            }
            for y in outside {
                if let Some(next) = apply_rule(g, &anchor_at(g, &path, y), rule)? {
                    accepted = Some((rule, next));
                    break 'rules;
                }
            }
        }
        let Some((rule, next)) = accepted else {
            let certificate = certificate(g, &path);
            return Ok(EngineResult { outcome: Outcome::Stalled { path, certificate }, trace });
        };
        trace.push(TraceRecord {
            rule,
            len_before: path.len(),
            len_after: next.len(),
            rho_before: current_rho(g, &path),
            rho_after: current_rho(g, &next),
        });
        path = next;
    }
}

/// Certificate search on a stalled path: a join witness at `k = κ(G)`, else
/// a sparsest `(k+1)`-subset inside the candidate sets the rules reason about.
fn certificate(g: &Graph, path: &UVPath) -> Certificate {
    let k = vertex_connectivity(g).max(1);
    if let Some(w) = exception_witness(g, k) {
        return Certificate::JoinWitness(w);
    }
    let all = g.vertices();
    let outside = all.difference(path.vertex_set());
    let mut pools: Vec<VertexSet> = Vec::new();
    for y in outside {
        let ap = anchor_at(g, path, y);
        let me = VertexSet::singleton(y);
        for side in [ap.successor_set(), ap.predecessor_set()] {
            let base = me.union(side);
            pools.push(base);
            pools.extend(all.difference(base).iter().map(|x| base.union(VertexSet::singleton(x))));
        }
        // successors of the attachment points of y's outside component
        let comp = g.reach_within(y, outside);
        let p = path.vertices();
        let plus: VertexSet = (0..p.len() - 1)
            .filter(|&i| !g.neighbors(p[i]).intersection(comp).is_empty())
            .map(|i| p[i + 1])
            .collect();
        for y2 in outside.difference(comp) {
            pools.push(plus.union(me).union(VertexSet::singleton(y2)));
        }
    }
    for pool in pools {
        if pool.len() <= k {
            continue;
        }
        if let Some((edges, set)) = sparsest_subset(g, VertexSet::EMPTY, pool, k + 1) {
            if edges <= 1 {
                return Certificate::SparseSet(set);
            }
        }
    }
    Certificate::None
}

/// Hamilton `(u, v)`-path from the rule engine, or from exact search when
/// the engine stalls. `Ok(None)` iff no Hamilton `(u, v)`-path exists.
pub fn engine_with_fallback(g: &Graph, u: usize, v: usize) -> Result<Option<UVPath>> {
    match improve(g, u, v) {
        Ok(EngineResult { outcome: Outcome::HamiltonPath(p), .. }) => Ok(Some(p)),
        Ok(_) => Ok(hamilton_uv_path(g, u, v)),
        Err(Error::NoPath { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}
