//! Path rewiring rules.
//!
//! Every rule reads an anchored path `P = v0 .. vl` with outside vertex `y`
//! and anchor indices `A = { i : v_i ~ y }`, looks for a pattern of chords
//! around the anchors, and splices segments of `P` into a new `(v0, vl)`-path.
//! Segment notation below: `fwd(a,b) = v_a v_{a+1} .. v_b` and
//! `bwd(b,a) = v_b v_{b-1} .. v_a`.
//!
//! Each rule is tried on the path as given and on its reversal; the output
//! is always re-validated before it is returned.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::path::{anchor_at, validate_path, AnchoredPath, UVPath};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    /// Insert the outside vertex (or a path through its component) between
    /// two consecutive path vertices that both see it.
    E1,
    /// Two outside vertices inserted by reversing the segment between two
    /// anchors.
    E2,
    /// Crossing chords `v_{a+1} ~ v_{t+1}`, `v_t ~ v_{b+1}`.
    H1,
    /// Left hook: `v_{a-1} ~ v_{s-1}` with `v_s ~ v_{b+1}`.
    H2,
    /// Right hook: `v_{a-1} ~ w^-` with `w ~ v_{b-1}` beyond `v_b`.
    H3,
    /// `v_{a-1}` adjacent to two consecutive path vertices; detours that
    /// relocate it and insert `y`.
    E3,
    /// Completions around anchors at distance two.
    H4,
    /// Completions for the long-gap configuration, including the two short
    /// endgames and the six three-anchor rewirings.
    H5,
    /// Equal-length reroutings that swap `y` for `v_{q-1}` and raise ρ.
    R1,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::E1 => "E1",
            RuleId::E2 => "E2",
            RuleId::H1 => "H1",
            RuleId::H2 => "H2",
            RuleId::H3 => "H3",
            RuleId::E3 => "E3",
            RuleId::H4 => "H4",
            RuleId::H5 => "H5",
            RuleId::R1 => "R1",
        }
    }

    pub fn kind(self) -> RuleKind {
        match self {
            RuleId::E1 | RuleId::E2 | RuleId::E3 => RuleKind::ExtendsPath,
            RuleId::H1 | RuleId::H2 | RuleId::H3 | RuleId::H4 | RuleId::H5 => RuleKind::CompletesHamilton,
            RuleId::R1 => RuleKind::RaisesRho,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RuleKind {
    /// Output is strictly longer than the input.
    ExtendsPath,
    /// Output is the input plus `y`; spanning whenever `y` is the only
    /// vertex off the path.
    CompletesHamilton,
    /// Output has the same length, leaves out a different vertex, and has
    /// strictly larger ρ.
    RaisesRho,
}

/// Rules in the order the engine tries them: completions, then extensions,
/// then ρ-raising reroutings.
pub const CATALOG: [RuleId; 9] = [
    RuleId::H1,
    RuleId::H2,
    RuleId::H3,
    RuleId::H4,
    RuleId::H5,
    RuleId::E1,
    RuleId::E2,
    RuleId::E3,
    RuleId::R1,
];

/// Applies one rule. `Ok(None)` when its pattern does not occur; an error
/// only if a produced sequence fails validation, which indicates a bug in
/// the rule itself.
pub fn apply_rule(g: &Graph, ap: &AnchoredPath, rule: RuleId) -> Result<Option<UVPath>> {
    let p = ap.path.vertices();
    if p.len() < 2 {
        return Ok(None);
    }
    let (u, v) = (p[0], p[p.len() - 1]);
    let mirrored = ap.mirrored();
    let check = |seq: Vec<usize>| -> Result<UVPath> {
        let out = UVPath::new(seq);
        let ok = validate_path(g, &out, u, v)
            && match rule.kind() {
                RuleKind::ExtendsPath => out.len() > p.len(),
                RuleKind::CompletesHamilton => {
                    out.len() == p.len() + 1 && out.vertex_set() == ap.path.vertex_set().union(VertexSet::singleton(ap.outside))
                }
                RuleKind::RaisesRho => out.len() == p.len() && out.vertex_set().contains(ap.outside),
            };
        if ok {
            Ok(out)
        } else {
            Err(Error::RuleTranscription { rule: rule.name(), path: out.into_vertices() })
        }
    };

    if rule == RuleId::R1 {
        let mut best: Option<(usize, UVPath)> = None;
        let current = ap.rho().unwrap_or(0);
        for (side, reversed) in [(ap, false), (&mirrored, true)] {
            for seq in rho_rotations(&Ctx::new(g, side)) {
                let seq = if reversed { seq.into_iter().rev().collect() } else { seq };
                let out = check(seq)?;
                let dropped = ap.path.vertex_set().difference(out.vertex_set()).first().expect("one vertex dropped");
                let new_rho = anchor_at(g, &out, dropped).rho().unwrap_or(0);
                if new_rho > current && best.as_ref().is_none_or(|(r, _)| new_rho > *r) {
                    best = Some((new_rho, out));
                }
            }
        }
        return Ok(best.map(|(_, out)| out));
    }

    for (side, reversed) in [(ap, false), (&mirrored, true)] {
        let ctx = Ctx::new(g, side);
        let found = match rule {
            RuleId::E1 => consecutive_insert(&ctx),
            RuleId::E2 => two_outside_insert(&ctx),
            RuleId::H1 => crossing(&ctx),
            RuleId::H2 => left_hook(&ctx),
            RuleId::H3 => right_hook(&ctx),
            RuleId::E3 => chord_detour(&ctx),
            RuleId::H4 => gap_one(&ctx),
            RuleId::H5 => case_two(&ctx),
            RuleId::R1 => unreachable!(),
        };
        if let Some(seq) = found {
            let seq = if reversed { seq.into_iter().rev().collect() } else { seq };
            return check(seq).map(Some);
        }
    }
    Ok(None)
}

struct Ctx<'a> {
    g: &'a Graph,
    p: &'a [usize],
    y: usize,
    anchors: &'a [usize],
    l: usize,
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Graph, ap: &'a AnchoredPath) -> Self {
        let p = ap.path.vertices();
        Ctx { g, p, y: ap.outside, anchors: &ap.anchors, l: p.len() - 1 }
    }

    /// Adjacency between path positions.
    fn adj(&self, i: usize, j: usize) -> bool {
        self.g.adjacent(self.p[i], self.p[j])
    }

    fn sees_y(&self, i: usize) -> bool {
        self.g.adjacent(self.p[i], self.y)
    }

    fn splice(&self) -> Splice<'a> {
        Splice { p: self.p, out: Vec::with_capacity(self.p.len() + 2) }
    }

    /// Consecutive anchor pairs `(i_j, i_{j+1})`.
    fn gaps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.anchors.windows(2).map(|w| (w[0], w[1]))
    }

    fn outside(&self) -> VertexSet {
        self.g.vertices().difference(self.p.iter().copied().collect())
    }
}

struct Splice<'a> {
    p: &'a [usize],
    out: Vec<usize>,
}

impl Splice<'_> {
    fn fwd(mut self, a: usize, b: usize) -> Self {
        self.out.extend((a..=b).map(|i| self.p[i]));
        self
    }

    fn bwd(mut self, b: usize, a: usize) -> Self {
        self.out.extend((a..=b).rev().map(|i| self.p[i]));
        self
    }

    fn at(mut self, i: usize) -> Self {
        self.out.push(self.p[i]);
        self
    }

    fn vertex(mut self, v: usize) -> Self {
        self.out.push(v);
        self
    }

    fn vertices(mut self, vs: &[usize]) -> Self {
        self.out.extend_from_slice(vs);
        self
    }

    fn done(self) -> Vec<usize> {
        self.out
    }
}

/// E1. `v_i, v_{i+1}` both adjacent to `y`: insert `y`. When `y` lies in a
/// larger component H of G - V(P), any `v_i, v_{i+1}` with neighbours in H
/// take a shortest path through H.
fn consecutive_insert(c: &Ctx) -> Option<Vec<usize>> {
    for (a, b) in c.gaps().collect::<Vec<_>>().into_iter().rev() {
        if b == a + 1 {
            return Some(c.splice().fwd(0, a).vertex(c.y).fwd(b, c.l).done());
        }
    }
    let outside = c.outside();
    let h = c.g.reach_within(c.y, outside);
    if h.len() < 2 {
        return None;
    }
    for i in 0..c.l {
        let from = c.g.neighbors(c.p[i]).intersection(h);
        let to = c.g.neighbors(c.p[i + 1]).intersection(h);
        if !from.is_empty() && !to.is_empty() {
            let detour = path_within(c.g, h, from, to);
            return Some(c.splice().fwd(0, i).vertices(&detour).fwd(i + 1, c.l).done());
        }
    }
    None
}

/// Shortest path inside `within` from some vertex of `from` to some vertex
/// of `to`. Both sets are nonempty subsets of one component of `within`.
fn path_within(g: &Graph, within: VertexSet, from: VertexSet, to: VertexSet) -> Vec<usize> {
    let mut prev = [usize::MAX; 64];
    let mut queue: VecDeque<usize> = from.iter().collect();
    for s in from {
        prev[s] = s;
    }
    while let Some(x) = queue.pop_front() {
        if to.contains(x) {
            let mut out = vec![x];
            let mut cur = x;
            while prev[cur] != cur {
                cur = prev[cur];
                out.push(cur);
            }
            out.reverse();
            return out;
        }
        for z in g.neighbors(x).intersection(within) {
            if prev[z] == usize::MAX {
                prev[z] = x;
                queue.push_back(z);
            }
        }
    }
    unreachable!("from and to lie in one component")
}

/// E2. Anchors `a < b`, a second outside vertex `y'` adjacent to `v_{a+1}`
/// and `v_{b+1}`:
/// `fwd(0,a) y bwd(b,a+1) y' fwd(b+1,l)`.
fn two_outside_insert(c: &Ctx) -> Option<Vec<usize>> {
    let others = c.outside().difference(VertexSet::singleton(c.y));
    for (ai, &a) in c.anchors.iter().enumerate() {
        for &b in &c.anchors[ai + 1..] {
            if b < a + 2 || b >= c.l {
                continue;
            }
            for y2 in others {
                if c.g.adjacent(y2, c.p[a + 1]) && c.g.adjacent(y2, c.p[b + 1]) {
                    return Some(c.splice().fwd(0, a).vertex(c.y).bwd(b, a + 1).vertex(y2).fwd(b + 1, c.l).done());
                }
            }
        }
    }
    None
}

fn anchor_pairs<'c>(c: &'c Ctx) -> impl Iterator<Item = (usize, usize)> + 'c {
    c.anchors.iter().enumerate().flat_map(move |(ai, &a)| c.anchors[ai + 1..].iter().map(move |&b| (a, b)))
}

/// H1. Anchors `a < b`, `a < t < b`, `v_{t+1} ~ v_{a+1}` and
/// `v_t ~ v_{b+1}`:
/// `fwd(0,a) y bwd(b,t+1) fwd(a+1,t) fwd(b+1,l)`.
/// With `t = a+1` this is the independence of anchor successors.
fn crossing(c: &Ctx) -> Option<Vec<usize>> {
    for (a, b) in anchor_pairs(c) {
        if b < a + 2 || b >= c.l {
            continue;
        }
        for t in a + 1..b {
            if c.adj(t + 1, a + 1) && c.adj(t, b + 1) {
                return Some(c.splice().fwd(0, a).vertex(c.y).bwd(b, t + 1).fwd(a + 1, t).fwd(b + 1, c.l).done());
            }
        }
    }
    None
}

/// H2. Anchors `1 <= a < b < l`, `a < s <= b`, `v_{s-1} ~ v_{a-1}` and
/// `v_s ~ v_{b+1}`:
/// `fwd(0,a-1) bwd(s-1,a) y bwd(b,s) fwd(b+1,l)`.
fn left_hook(c: &Ctx) -> Option<Vec<usize>> {
    for (a, b) in anchor_pairs(c) {
        if a == 0 || b >= c.l {
            continue;
        }
        for s in a + 1..=b {
            if c.adj(s - 1, a - 1) && c.adj(s, b + 1) {
                return Some(c.splice().fwd(0, a - 1).bwd(s - 1, a).vertex(c.y).bwd(b, s).fwd(b + 1, c.l).done());
            }
        }
    }
    None
}

/// H3. Anchors `1 <= a < b`, `b < m <= l`, `v_{m-1} ~ v_{a-1}` and
/// `v_m ~ v_{b-1}`:
/// `fwd(0,a-1) bwd(m-1,b) y fwd(a,b-1) fwd(m,l)`.
fn right_hook(c: &Ctx) -> Option<Vec<usize>> {
    for (a, b) in anchor_pairs(c) {
        if a == 0 {
            continue;
        }
        for m in b + 1..=c.l {
            if c.adj(m - 1, a - 1) && c.adj(m, b - 1) {
                return Some(c.splice().fwd(0, a - 1).bwd(m - 1, b).vertex(c.y).fwd(a, b - 1).fwd(m, c.l).done());
            }
        }
    }
    None
}

/// E3. Anchor `a >= 2` whose predecessor `v_{a-1}` sees both `v_m` and
/// `v_{m+1}` elsewhere on the path. `v_{a-1}` is moved between them and `y`
/// is inserted, either directly after `v_{a-2}` or through a second anchor
/// `b` with `v_{a-2} ~ v_{b-1}`.
fn chord_detour(c: &Ctx) -> Option<Vec<usize>> {
    let l = c.l;
    for &a in c.anchors {
        if a < 2 {
            continue;
        }
        let left = if a >= 3 { 0..a - 2 } else { 0..0 };
        for m in left.chain(a..l) {
            if !(c.adj(a - 1, m) && c.adj(a - 1, m + 1)) {
                continue;
            }
            let right = m >= a;
            if c.sees_y(a - 2) {
                let out = if right {
                    c.splice().fwd(0, a - 2).vertex(c.y).fwd(a, m).at(a - 1).fwd(m + 1, l)
                } else {
                    c.splice().fwd(0, m).at(a - 1).fwd(m + 1, a - 2).vertex(c.y).fwd(a, l)
                };
                return Some(out.done());
            }
            for &b in c.anchors {
                if b == a || b == 0 || !c.adj(a - 2, b - 1) {
                    continue;
                }
                let out = if right {
                    if b <= a - 2 {
                        c.splice().fwd(0, b - 1).bwd(a - 2, b).vertex(c.y).fwd(a, m).at(a - 1).fwd(m + 1, l)
                    } else if a < b && b <= m {
                        c.splice().fwd(0, a - 2).bwd(b - 1, a).vertex(c.y).fwd(b, m).at(a - 1).fwd(m + 1, l)
                    } else if b >= m + 2 {
                        c.splice().fwd(0, a - 2).bwd(b - 1, m + 1).at(a - 1).bwd(m, a).vertex(c.y).fwd(b, l)
                    } else {
                        continue;
                    }
                } else if b <= m {
                    c.splice().fwd(0, b - 1).bwd(a - 2, m + 1).at(a - 1).bwd(m, b).vertex(c.y).fwd(a, l)
                } else if m + 2 <= b && b <= a - 2 {
                    c.splice().fwd(0, m).at(a - 1).fwd(m + 1, b - 1).bwd(a - 2, b).vertex(c.y).fwd(a, l)
                } else if b > a {
                    c.splice().fwd(0, m).at(a - 1).fwd(m + 1, a - 2).bwd(b - 1, a).vertex(c.y).fwd(b, l)
                } else {
                    continue;
                };
                return Some(out.done());
            }
        }
    }
    None
}

/// H4. Completions built around an anchor `A` and the vertex `v_{A+1}`
/// after it, mostly when the next anchor is `A+2`.
fn gap_one(c: &Ctx) -> Option<Vec<usize>> {
    let l = c.l;
    // v_{A+1} ~ x = v_m beyond another anchor T, x^+ ~ v_{T+1}:
    // fwd(0,A) y bwd(T,A+1) bwd(m,T+1) fwd(m+1,l)
    for (a, t) in anchor_pairs(c) {
        for m in t + 1..l {
            if c.adj(a + 1, m) && c.adj(m + 1, t + 1) {
                return Some(c.splice().fwd(0, a).vertex(c.y).bwd(t, a + 1).bwd(m, t + 1).fwd(m + 1, l).done());
            }
        }
    }
    let gaps: Vec<(usize, usize)> = c.gaps().collect();
    for (gi, &(a, a2)) in gaps.iter().enumerate() {
        if a2 != a + 2 {
            continue;
        }
        // x = v_m beyond v_{A+2}, anchor T at or before A:
        // fwd(0,T) y fwd(A+2,m) bwd(A+1,T+1) fwd(m+1,l)
        for &t in c.anchors.iter().filter(|&&t| t <= a) {
            for m in a2..l {
                if c.adj(a + 1, m) && c.adj(m + 1, t + 1) {
                    return Some(c.splice().fwd(0, t).vertex(c.y).fwd(a2, m).bwd(a + 1, t + 1).fwd(m + 1, l).done());
                }
            }
        }
        // next anchor A3, earlier anchor T with v_T ~ v_{A+1}, v_{T+1} ~ v_{A3-1}:
        // fwd(0,T) bwd(A+1,T+1) bwd(A3-1,A+2) y fwd(A3,l)
        if let Some(&(_, a3)) = gaps.get(gi + 1) {
            for &t in c.anchors.iter().filter(|&&t| t < a) {
                if c.adj(a + 1, t) && c.adj(a3 - 1, t + 1) {
                    return Some(c.splice().fwd(0, t).bwd(a + 1, t + 1).bwd(a3 - 1, a2).vertex(c.y).fwd(a3, l).done());
                }
            }
        }
    }
    // anchors A < C, later anchor T >= C with v_T ~ v_{A+1}, v_{C-1} ~ v_{T+1}:
    // fwd(0,A) y fwd(C,T) fwd(A+1,C-1) fwd(T+1,l)
    for (a, cc) in anchor_pairs(c) {
        if cc < a + 2 {
            continue;
        }
        for &t in c.anchors.iter().filter(|&&t| t >= cc && t < l) {
            if c.adj(t, a + 1) && c.adj(cc - 1, t + 1) {
                return Some(c.splice().fwd(0, a).vertex(c.y).fwd(cc, t).fwd(a + 1, cc - 1).fwd(t + 1, l).done());
            }
        }
    }
    None
}

/// H5. Consecutive anchors `Q < Q1` (and a third anchor where needed).
fn case_two(c: &Ctx) -> Option<Vec<usize>> {
    let l = c.l;
    let gaps: Vec<(usize, usize)> = c.gaps().collect();

    // v_{Q-1} ~ v_{Q1}, and v_{Q1-1} ~ w where w = v_m follows another anchor
    for &(q, q1) in &gaps {
        if q == 0 || !c.adj(q - 1, q1) {
            continue;
        }
        for &w in c.anchors {
            let m = w + 1;
            if w == q || m > l || !c.adj(q1 - 1, m) {
                continue;
            }
            if m < q {
                return Some(c.splice().fwd(0, m - 1).vertex(c.y).fwd(q, q1 - 1).fwd(m, q - 1).fwd(q1, l).done());
            }
            if m > q1 {
                return Some(c.splice().fwd(0, q - 1).fwd(q1, m - 1).vertex(c.y).fwd(q, q1 - 1).fwd(m, l).done());
            }
        }
    }

    // three consecutive anchors two apart in both gaps
    for w in gaps.windows(2) {
        let (i1, i2, i3) = (w[0].0, w[0].1, w[1].1);
        if i2 != i1 + 3 || i3 != i2 + 3 {
            continue;
        }
        if c.adj(i1, i3 - 2) && c.adj(i3 - 1, i2 - 2) {
            let mid = [c.p[i3 - 2], c.p[i3 - 1], c.p[i2 - 2], c.p[i2 - 1], c.p[i2]];
            return Some(c.splice().fwd(0, i1).vertices(&mid).vertex(c.y).fwd(i3, l).done());
        }
        if c.adj(i1, i2 - 1) && c.adj(i2 - 2, i3 - 1) {
            let mid = [c.p[i2 - 1], c.p[i2 - 2], c.p[i3 - 1], c.p[i3 - 2], c.p[i2]];
            return Some(c.splice().fwd(0, i1).vertices(&mid).vertex(c.y).fwd(i3, l).done());
        }
    }

    // anchors P and A around the gap (Q, Q1), with the chord pattern
    // v_{Q-1} ~ v_{P-2}, v_{P-1} ~ v_{Q1-2}, v_{A-1} ~ v_{Q1-3}
    for &(q, q1) in &gaps {
        if q == 0 || q1 < q + 3 {
            continue;
        }
        for &pp in c.anchors {
            for &a in c.anchors {
                if a == 0 || a == pp || a == q || pp == q || pp == q1 {
                    continue;
                }
                let out = if pp < q {
                    if a < pp {
                        (pp + 3 <= q1 && c.adj(a - 1, q1 - 3) && c.adj(pp - 1, q1 - 2))
                            .then(|| c.splice().fwd(0, a - 1).bwd(q1 - 3, pp).vertex(c.y).fwd(a, pp - 1).fwd(q1 - 2, l))
                    } else if pp >= 2 && c.adj(pp - 2, q - 1) && c.adj(pp - 1, q1 - 2) && c.adj(a - 1, q1 - 3) {
                        if a < q {
                            Some(
                                c.splice()
                                    .fwd(0, pp - 2)
                                    .bwd(q - 1, a)
                                    .vertex(c.y)
                                    .fwd(q, q1 - 3)
                                    .bwd(a - 1, pp - 1)
                                    .fwd(q1 - 2, l),
                            )
                        } else if a >= q1 {
                            Some(
                                c.splice()
                                    .fwd(0, pp - 2)
                                    .bwd(q - 1, pp - 1)
                                    .fwd(q1 - 2, a - 1)
                                    .bwd(q1 - 3, q)
                                    .vertex(c.y)
                                    .fwd(a, l),
                            )
                        } else {
                            None
                        }
                    } else {
                        None
                    }
                } else if pp > q1 && c.adj(q - 1, pp - 2) && c.adj(q1 - 2, pp - 1) && c.adj(a - 1, q1 - 3) {
                    if a < q {
                        Some(
                            c.splice()
                                .fwd(0, a - 1)
                                .bwd(q1 - 3, q)
                                .vertex(c.y)
                                .fwd(a, q - 1)
                                .bwd(pp - 2, q1 - 2)
                                .fwd(pp - 1, l),
                        )
                    } else if q1 <= a && a + 2 <= pp {
                        Some(
                            c.splice()
                                .fwd(0, q - 1)
                                .bwd(pp - 2, a)
                                .vertex(c.y)
                                .fwd(q, q1 - 3)
                                .bwd(a - 1, q1 - 2)
                                .fwd(pp - 1, l),
                        )
                    } else if a > pp {
                        Some(
                            c.splice()
                                .fwd(0, q - 1)
                                .bwd(pp - 2, q1 - 2)
                                .fwd(pp - 1, a - 1)
                                .bwd(q1 - 3, q)
                                .vertex(c.y)
                                .fwd(a, l),
                        )
                    } else {
                        None
                    }
                } else {
                    None
                };
                if let Some(out) = out {
                    return Some(out.done());
                }
            }
        }
    }
    None
}

/// R1 candidates. Each leaves out `v_{Q-1}` for an anchor `Q >= 2` and
/// takes `y` in, keeping the length.
fn rho_rotations(c: &Ctx) -> Vec<Vec<usize>> {
    let l = c.l;
    let mut out = Vec::new();
    let next_anchor = |q: usize| c.anchors.iter().copied().find(|&x| x > q);
    for &q in c.anchors.iter().filter(|&&q| q >= 2) {
        for &a in c.anchors {
            // v_{A-1} ~ v_{Q-2}: fwd(0,A-1) bwd(Q-2,A) y fwd(Q,l)
            if a >= 1 && a + 2 <= q && c.adj(a - 1, q - 2) {
                out.push(c.splice().fwd(0, a - 1).bwd(q - 2, a).vertex(c.y).fwd(q, l).done());
            }
            // v_{Q-2} ~ v_{B-1}: fwd(0,Q-2) bwd(B-1,Q) y fwd(B,l)
            if a > q && c.adj(q - 2, a - 1) {
                out.push(c.splice().fwd(0, q - 2).bwd(a - 1, q).vertex(c.y).fwd(a, l).done());
            }
        }
        let Some(q1) = next_anchor(q) else { continue };
        if q1 < q + 2 || !c.adj(q - 2, q1 - 1) {
            continue;
        }
        for &pp in c.anchors {
            // fwd(0,P-1) bwd(Q1-2,Q) y fwd(P,Q-2) fwd(Q1-1,l)
            if pp >= 1 && pp + 2 <= q && c.adj(pp - 1, q1 - 2) {
                out.push(c.splice().fwd(0, pp - 1).bwd(q1 - 2, q).vertex(c.y).fwd(pp, q - 2).fwd(q1 - 1, l).done());
            }
            // fwd(0,Q-2) fwd(Q1-1,P-1) bwd(Q1-2,Q) y fwd(P,l)
            if pp > q1 && c.adj(pp - 1, q1 - 2) {
                out.push(c.splice().fwd(0, q - 2).fwd(q1 - 1, pp - 1).bwd(q1 - 2, q).vertex(c.y).fwd(pp, l).done());
            }
        }
    }
    out
}
