//! Paths with fixed endpoints and their anchoring to an outside vertex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};

/// An ordered sequence of vertices `v0 v1 .. vl`; the endpoints are the first
/// and last entries. Validity against a host graph is checked separately by
/// [`validate_path`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UVPath(Vec<usize>);

impl UVPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        UVPath(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    /// Number of vertices (one more than the number of edges).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn end(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    pub fn reversed(&self) -> UVPath {
        UVPath(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Debug for UVPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join("-"))
    }
}

/// True iff `p` runs from `u` to `v` through distinct, consecutively
/// adjacent vertices of `g`.
pub fn validate_path(g: &Graph, p: &UVPath, u: usize, v: usize) -> bool {
    let vs = p.vertices();
    if vs.first() != Some(&u) || vs.last() != Some(&v) {
        return false;
    }
    let mut seen = 0u64;
    for &x in vs {
        if x >= g.order() || seen & bit(x) != 0 {
            return false;
        }
        seen |= bit(x);
    }
    vs.windows(2).all(|w| g.adjacent(w[0], w[1]))
}

/// A path together with one vertex `outside` it and the complete, ascending
/// list of path indices whose vertices are adjacent to `outside`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchoredPath {
    pub path: UVPath,
    pub outside: usize,
    pub anchors: Vec<usize>,
    rho: Option<usize>,
}

impl AnchoredPath {
    /// ρ: the largest number of path vertices strictly between two
    /// consecutive anchors; `None` with fewer than two anchors.
    pub fn rho(&self) -> Option<usize> {
        self.rho
    }

    /// Successors of anchors (excluding the last path vertex's successor).
    pub fn successor_set(&self) -> VertexSet {
        let p = self.path.vertices();
        self.anchors.iter().filter(|&&i| i + 1 < p.len()).map(|&i| p[i + 1]).collect()
    }

    /// Predecessors of anchors (excluding the first path vertex's).
    pub fn predecessor_set(&self) -> VertexSet {
        let p = self.path.vertices();
        self.anchors.iter().filter(|&&i| i > 0).map(|&i| p[i - 1]).collect()
    }

    /// The same configuration read from the other end.
    pub fn mirrored(&self) -> AnchoredPath {
        let l = self.path.len() - 1;
        AnchoredPath {
            path: self.path.reversed(),
            outside: self.outside,
            anchors: self.anchors.iter().rev().map(|&i| l - i).collect(),
            rho: self.rho,
        }
    }

    /// Checks every stored field against `g`.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        let p = self.path.vertices();
        let expected: Vec<usize> = (0..p.len()).filter(|&i| g.adjacent(p[i], self.outside)).collect();
        !self.path.vertex_set().contains(self.outside) && self.anchors == expected && self.rho == gap_max(&self.anchors)
    }
}

fn gap_max(anchors: &[usize]) -> Option<usize> {
    anchors.windows(2).map(|w| w[1] - w[0] - 1).max()
}

/// ρ over an explicit anchor list.
pub fn rho(anchors: &[usize]) -> Result<usize> {
    gap_max(anchors).ok_or_else(|| Error::InvalidParams("rho needs at least two anchors".into()))
}

/// Anchors `p` at `y`, which must not lie on `p`.
pub fn anchor_at(g: &Graph, p: &UVPath, y: usize) -> AnchoredPath {
    debug_assert!(!p.vertex_set().contains(y));
    let vs = p.vertices();
    let anchors: Vec<usize> = (0..vs.len()).filter(|&i| g.adjacent(vs[i], y)).collect();
    let rho = gap_max(&anchors);
    AnchoredPath { path: p.clone(), outside: y, anchors, rho }
}

/// Anchors `p` at its unique outside vertex; `None` unless exactly one
/// vertex of `g` is missing from `p`.
pub fn anchor(g: &Graph, p: &UVPath) -> Option<AnchoredPath> {
    let outside = g.vertices().difference(p.vertex_set());
    (outside.len() == 1).then(|| anchor_at(g, p, outside.first().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn validation() {
        let k4 = complete(4);
        assert!(validate_path(&k4, &UVPath::new(vec![0, 2, 1, 3]), 0, 3));
        assert!(!validate_path(&cycle(4), &UVPath::new(vec![0, 2]), 0, 2));
        assert!(!validate_path(&k4, &UVPath::new(vec![0, 1, 0, 3]), 0, 3));
        assert!(!validate_path(&k4, &UVPath::new(vec![0, 1, 3]), 0, 2));
        assert!(!validate_path(&k4, &UVPath::new(vec![]), 0, 2));
        assert!(!validate_path(&k4, &UVPath::new(vec![0, 9]), 0, 9));
    }

    #[test]
    fn anchoring() {
        let ap = anchor(&complete(4), &UVPath::new(vec![0, 1, 2])).unwrap();
        assert_eq!((ap.outside, ap.anchors.clone(), ap.rho()), (3, vec![0, 1, 2], Some(0)));

        let c5 = cycle(5);
        let ap = anchor(&c5, &UVPath::new(vec![0, 1, 2, 3])).unwrap();
        assert_eq!((ap.outside, ap.anchors.clone(), ap.rho()), (4, vec![0, 3], Some(2)));
        assert!(ap.is_consistent(&c5));
        assert_eq!(ap.successor_set(), VertexSet::singleton(1));
        assert_eq!(ap.predecessor_set(), VertexSet::singleton(2));

        let m = ap.mirrored();
        assert_eq!(m.path.vertices(), &[3, 2, 1, 0]);
        assert_eq!(m.anchors, vec![0, 3]);
        assert!(m.is_consistent(&c5));

        assert!(anchor(&c5, &UVPath::new(vec![0, 1, 2, 3, 4])).is_none());
        assert!(anchor(&c5, &UVPath::new(vec![0, 1, 2])).is_none());
    }

    #[test]
    fn rho_arithmetic() {
        assert_eq!(rho(&[0, 2, 4]), Ok(1));
        assert_eq!(rho(&[0, 3, 6]), Ok(2));
        assert_eq!(rho(&[0, 1]), Ok(0));
        assert!(rho(&[3]).is_err());
    }
}
