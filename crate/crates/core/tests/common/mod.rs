//! Constructed rule instances shared by the rule tests and the acceptance
//! runner. Path vertices are `0..=l`, the outside vertex is `y = l+1`, and
//! any further outside vertices follow.

#![allow(dead_code)]

use stgraph::{anchor_at, AnchoredPath, Graph, RuleId, UVPath};

pub struct Instance {
    pub rule: RuleId,
    pub graph: Graph,
    pub anchored: AnchoredPath,
}

/// Path `0..=l` plus `y = l+1` adjacent to `anchors`, chords between path
/// vertices, and extra outside vertices `l+2, ..` with the given path
/// neighbours.
pub fn build(rule: RuleId, l: usize, anchors: &[usize], chords: &[(usize, usize)], extra: &[&[usize]]) -> Instance {
    let y = l + 1;
    let mut g = Graph::new(l + 2 + extra.len());
    for i in 0..l {
        g.add_edge(i, i + 1);
    }
    for &a in anchors {
        g.add_edge(a, y);
    }
    for &(a, b) in chords {
        g.add_edge(a, b);
    }
    for (j, nbrs) in extra.iter().enumerate() {
        for &w in nbrs.iter() {
            g.add_edge(y + 1 + j, w);
        }
    }
    let path = UVPath::new((0..=l).collect());
    let anchored = anchor_at(&g, &path, y);
    Instance { rule, graph: g, anchored }
}

/// One instance per rule on which it fires.
pub fn positives() -> Vec<Instance> {
    let mut k4 = Graph::new(4);
    for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)] {
        k4.add_edge(a, b);
    }
    let p = UVPath::new(vec![0, 1, 3]);
    vec![
        Instance { rule: RuleId::E1, anchored: anchor_at(&k4, &p, 2), graph: k4 },
        build(RuleId::E2, 5, &[0, 3], &[], &[&[1, 4]]),
        build(RuleId::H1, 5, &[0, 3], &[(1, 3), (2, 4)], &[]),
        build(RuleId::H2, 5, &[1, 3], &[(2, 4)], &[]),
        build(RuleId::H3, 5, &[1, 3], &[(0, 3), (2, 4)], &[]),
        build(RuleId::E3, 5, &[0, 2], &[(1, 3), (1, 4)], &[]),
        build(RuleId::H4, 6, &[0, 2], &[(1, 3)], &[]),
        build(RuleId::H5, 6, &[0, 3, 5], &[(2, 5), (1, 4)], &[]),
        build(RuleId::R1, 5, &[1, 2, 4], &[(0, 2)], &[]),
    ]
}

/// The same shapes with a chord (or outside adjacency) removed, so that
/// the rule's pattern no longer occurs in either direction.
pub fn negatives() -> Vec<Instance> {
    vec![
        build(RuleId::E1, 3, &[0, 2], &[], &[]),
        build(RuleId::E2, 5, &[0, 3], &[], &[&[1]]),
        build(RuleId::H1, 5, &[0, 3], &[(1, 3)], &[]),
        build(RuleId::H2, 5, &[1, 3], &[], &[]),
        build(RuleId::H3, 5, &[1, 3], &[(0, 3)], &[]),
        build(RuleId::E3, 5, &[0, 2], &[(1, 4)], &[]),
        build(RuleId::H4, 6, &[0, 2], &[], &[]),
        build(RuleId::H5, 6, &[0, 3, 5], &[(2, 5)], &[]),
        build(RuleId::R1, 5, &[1, 2, 4], &[], &[]),
    ]
}
