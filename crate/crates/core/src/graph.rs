//! Simple undirected graphs on at most 64 vertices, stored as one bit row per
//! vertex.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest supported order. Every adjacency row fits in one `u64`.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices `0..64` packed into a machine word. Serialized as the
/// ascending list of its members.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(vs: Vec<usize>) -> Self {
        vs.into_iter().filter(|&v| v < MAX_ORDER).collect()
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// A simple graph on vertices `0..n`.
///
/// Row `v` holds the neighbourhood of `v`. The rows are kept symmetric and
/// loop-free by every constructor, so the derived equality is equality of
/// labelled graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: SmallVec<[u64; 12]>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    ///
    /// Panics if `n > 64`; use [`Graph::try_new`] for untrusted orders.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("graph order exceeds 64")
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { n, rows: SmallVec::from_elem(0, n) })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph from raw rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: &[u64]) -> Self {
        let g = Graph { n: rows.len(), rows: SmallVec::from_slice(rows) };
        debug_assert!(g.is_well_formed());
        g
    }

    /// Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range for order {}", self.n);
        assert_ne!(u, v, "loops are not allowed");
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
    }

    /// n(G).
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// e(G).
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in VertexSet(self.rows[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// e(S): number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.rows[v] & s.0).count_ones() as usize).sum::<usize>() / 2
    }

    /// e(X, Y) for disjoint `x` and `y`.
    pub fn edges_between(&self, x: VertexSet, y: VertexSet) -> usize {
        x.iter().map(|v| (self.rows[v] & y.0).count_ones() as usize).sum()
    }

    /// Symmetric, irreflexive and confined to `0..n`.
    pub fn is_well_formed(&self) -> bool {
        let all = low_bits(self.n);
        (0..self.n).all(|v| {
            let r = self.rows[v];
            r & !all == 0 && r & bit(v) == 0 && VertexSet(r).iter().all(|u| self.rows[u] & bit(v) != 0)
        })
    }

    pub fn complement(&self) -> Graph {
        let all = low_bits(self.n);
        let rows: SmallVec<[u64; 12]> = (0..self.n).map(|v| !self.rows[v] & all & !bit(v)).collect();
        Graph { n: self.n, rows }
    }

    /// G[S], relabelled `0..|S|` in ascending order of the original labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if !s.is_subset(self.vertices()) {
            let bad = s.difference(self.vertices()).first().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex: bad, order: self.n });
        }
        let members = s.to_vec();
        let mut h = Graph::new(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    /// G - v, with vertices above `v` shifted down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let lo = low_bits(v);
        let rows: SmallVec<[u64; 12]> = (0..self.n)
            .filter(|&u| u != v)
            .map(|u| {
                let r = self.rows[u];
                (r & lo) | ((r >> 1) & !lo)
            })
            .collect();
        Graph { n: self.n - 1, rows }
    }

    /// Appends a vertex adjacent to `nbrs`. Panics if the order would exceed 64.
    pub fn with_new_vertex(&self, nbrs: VertexSet) -> Graph {
        assert!(self.n < MAX_ORDER);
        debug_assert!(nbrs.is_subset(self.vertices()));
        let v = self.n;
        let mut rows = self.rows.clone();
        for u in nbrs {
            rows[u] |= bit(v);
        }
        rows.push(nbrs.0);
        Graph { n: v + 1, rows }
    }

    /// The graph whose vertex `perm[v]` plays the role of `v`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut h = Graph::new(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = bit(start);
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.rows[v];
            }
            next &= within.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Components of G[S], labelled as in G, ordered by smallest member.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach_within(v, s);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, self.vertices()).len() == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Families accepted by [`make_named`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Empty,
    Complete,
    Path,
    Cycle,
    Petersen,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "empty" => Family::Empty,
            "complete" => Family::Complete,
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "petersen" => Family::Petersen,
            other => return Err(Error::InvalidParams(format!("unknown family `{other}`"))),
        })
    }
}

pub fn make_named(family: Family, params: &[usize]) -> Result<Graph> {
    let order = |params: &[usize]| -> Result<usize> {
        match params {
            [n] if *n <= MAX_ORDER => Ok(*n),
            [n] => Err(Error::OrderTooLarge(*n)),
            _ => Err(Error::InvalidParams(format!("{family:?} takes exactly one order, got {params:?}"))),
        }
    };
    match family {
        Family::Empty => Ok(Graph::new(order(params)?)),
        Family::Complete => Ok(complete(order(params)?)),
        Family::Path => Ok(path(order(params)?)),
        Family::Cycle => {
            let n = order(params)?;
            if n < 3 {
                return Err(Error::InvalidParams(format!("cycle needs at least 3 vertices, got {n}")));
            }
            Ok(cycle(n))
        }
        Family::Petersen => {
            if !params.is_empty() {
                return Err(Error::InvalidParams("petersen takes no parameters".into()));
            }
            Ok(petersen())
        }
    }
}

/// K_n.
pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

/// P_n, the path 0-1-..-(n-1).
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// C_n with cyclic order 0-1-..-(n-1)-0. Needs n >= 3.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
pub fn petersen() -> Graph {
    let pairs: Vec<u8> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (1u8 << a) | (1u8 << b))).collect();
    let mut g = Graph::new(pairs.len());
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if pairs[i] & pairs[j] == 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// G ∨ H. Vertices of `g` keep their labels; those of `h` are shifted by n(G).
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.order(), h.order());
    if a + b > MAX_ORDER {
        return Err(Error::OrderTooLarge(a + b));
    }
    let mut out = Graph::new(a + b);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(a + u, a + v);
    }
    for u in 0..a {
        for v in 0..b {
            out.add_edge(u, a + v);
        }
    }
    Ok(out)
}

/// Disjoint union G + H.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.order(), h.order());
    if a + b > MAX_ORDER {
        return Err(Error::OrderTooLarge(a + b));
    }
    let mut out = Graph::new(a + b);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(a + u, a + v);
    }
    Ok(out)
}
