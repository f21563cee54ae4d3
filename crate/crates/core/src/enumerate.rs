//! Isomorph-free generation of small graphs by canonical vertex augmentation.
//!
//! Graphs of order `n+1` are produced from canonical graphs `P` of order `n`
//! by adding a vertex `x` adjacent to some set `S`. The result `G` is kept
//! only when `x` could be the canonically chosen deletion vertex of `G`:
//! among the minimum-degree vertices with the largest neighbour-degree sum,
//! the one placed last by the canonical labelling. Concretely, either `x` is
//! that vertex, or deleting that vertex yields a graph isomorphic to `P`.
//! Since each graph has exactly one parent class, isomorphic copies can only
//! arise among the children of one parent; they are removed there.
//!
//! A hereditary filter (a property closed under induced subgraphs) can be
//! applied during generation: the canonical parent is an induced subgraph,
//! so rejected graphs never have accepted descendants.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_label, CanonicalLabel};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::predicates::{min_induced_edges_containing, STParams};

pub const MAX_ENUM_ORDER: usize = 10;
pub const MAX_BRUTE_ORDER: usize = 7;

/// A property closed under taking induced subgraphs.
pub trait HereditaryFilter: Sync {
    /// Decides `g`, whose last vertex was just added, given that `g` minus
    /// that vertex already passed.
    fn accepts(&self, g: &Graph) -> bool;
}

pub struct NoFilter;

impl HereditaryFilter for NoFilter {
    fn accepts(&self, _: &Graph) -> bool {
        true
    }
}

/// The `[s,t]` property. Only `s`-sets through the new vertex need checking.
pub struct StFilter(pub STParams);

impl HereditaryFilter for StFilter {
    fn accepts(&self, g: &Graph) -> bool {
        let STParams { s, t } = self.0;
        t == 0 || min_induced_edges_containing(g, s, g.order() - 1).is_none_or(|m| m >= t)
    }
}

fn check_order(n: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange { n, min: 1, max })
    }
}

/// Canonical children of the canonical graph `parent`, in increasing order
/// of the new vertex's neighbourhood bitmask.
pub fn children<F: HereditaryFilter + ?Sized>(parent: &Graph, filter: &F) -> Vec<Graph> {
    let n = parent.order();
    let pdeg = parent.degrees();
    let mut seen: HashSet<CanonicalLabel> = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let d = mask.count_ones() as usize;
        // the new vertex must have minimum degree in the child
        if (0..n).any(|x| pdeg[x] + (((mask >> x) & 1) as usize) < d) {
            continue;
        }
        let g = parent.with_new_vertex(VertexSet(mask));
        if !filter.accepts(&g) {
            continue;
        }
        let deg = g.degrees();
        let key = |x: usize| g.neighbors(x).iter().map(|w| deg[w]).sum::<usize>();
        let new_key = key(n);
        let mut ties = Vec::new();
        let mut beaten = false;
        for x in (0..n).filter(|&x| deg[x] == d) {
            let kx = key(x);
            if kx > new_key {
                beaten = true;
                break;
            }
            if kx == new_key {
                ties.push(x);
            }
        }
        if beaten {
            continue;
        }
        let canon = canonical_form(&g);
        if !ties.is_empty() {
            let pos = canon.positions();
            let chosen = ties.iter().copied().chain([n]).max_by_key(|&x| pos[x]).unwrap();
            if chosen != n && canonical_label(&g.delete_vertex(chosen)).graph() != parent {
                continue;
            }
        }
        if seen.insert(canon.label.clone()) {
            out.push(canon.label.into_graph());
        }
    }
    out
}

/// Every graph (connected or not) of each order `0..=n_max` passing `filter`,
/// one canonical representative per isomorphism class. Index `i` holds
/// order `i`.
pub fn all_graphs_by_order<F: HereditaryFilter + ?Sized>(n_max: usize, filter: &F) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::new(0)]];
    if n_max == 0 {
        return levels;
    }
    let k1 = Graph::new(1);
    levels.push(if filter.accepts(&k1) { vec![k1] } else { vec![] });
    for _ in 2..=n_max {
        let next = next_level(levels.last().unwrap(), filter);
        levels.push(next);
    }
    levels
}

fn next_level<F: HereditaryFilter + ?Sized>(parents: &[Graph], filter: &F) -> Vec<Graph> {
    parents.par_iter().map(|p| children(p, filter)).collect::<Vec<_>>().concat()
}

/// Connected graphs of order `n` passing `filter`, as a lazy stream over the
/// parents of order `n-1`.
pub struct ConnectedGraphs<F> {
    parents: std::vec::IntoIter<Graph>,
    buffer: std::vec::IntoIter<Graph>,
    filter: F,
    single: Option<Graph>,
}

impl<F: HereditaryFilter> Iterator for ConnectedGraphs<F> {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if let Some(g) = self.single.take() {
            return Some(g);
        }
        loop {
            if let Some(g) = self.buffer.next() {
                return Some(g);
            }
            let p = self.parents.next()?;
            let kids: Vec<Graph> = children(&p, &self.filter).into_iter().filter(Graph::is_connected).collect();
            self.buffer = kids.into_iter();
        }
    }
}

pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs<NoFilter>> {
    enumerate_connected_filtered(n, NoFilter)
}

/// Connected graphs of order `n` all of whose induced subgraphs pass
/// `filter`.
pub fn enumerate_connected_filtered<F: HereditaryFilter>(n: usize, filter: F) -> Result<ConnectedGraphs<F>> {
    check_order(n, MAX_ENUM_ORDER)?;
    if n == 1 {
        let k1 = Graph::new(1);
        let single = filter.accepts(&k1).then_some(k1);
        return Ok(ConnectedGraphs { parents: vec![].into_iter(), buffer: vec![].into_iter(), filter, single });
    }
    let parents = all_graphs_by_order(n - 1, &filter).pop().unwrap();
    Ok(ConnectedGraphs { parents: parents.into_iter(), buffer: vec![].into_iter(), filter, single: None })
}

/// Applies `visit` to every connected graph of order `1..=n_max` passing
/// `filter`, in parallel over parents, and combines the partial results with
/// `merge`. The combination order is fixed, so a `merge` that is associative
/// gives identical output for any thread count.
pub fn scan_connected<F, T, V, M>(n_max: usize, filter: &F, visit: V, merge: M) -> Result<T>
where
    F: HereditaryFilter,
    T: Send + Default,
    V: Fn(&Graph) -> T + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    check_order(n_max, MAX_ENUM_ORDER)?;
    let levels = all_graphs_by_order((n_max - 1).max(1), filter);
    let mut total = T::default();
    if let Some(k1) = levels.get(1).and_then(|l| l.first()) {
        total = merge(total, visit(k1));
    }
    for parents in &levels[1..n_max] {
        let part = parents
            .par_iter()
            .map(|p| {
                children(p, filter)
                    .iter()
                    .filter(|g| g.is_connected())
                    .fold(T::default(), |acc, g| merge(acc, visit(g)))
            })
            .reduce(T::default, &merge);
        total = merge(total, part);
    }
    Ok(total)
}

/// Independent oracle: all labelled graphs of order `n`, keeping one
/// canonical label per connected class, in label order.
pub fn brute_force_connected(n: usize) -> Result<Vec<Graph>> {
    check_order(n, MAX_BRUTE_ORDER)?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let labels: BTreeSet<CanonicalLabel> = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|bits| {
            let mut g = Graph::new(n);
            for (e, &(i, j)) in pairs.iter().enumerate() {
                if bits >> e & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
            g.is_connected().then(|| canonical_label(&g))
        })
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    Ok(labels.into_iter().map(CanonicalLabel::into_graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected(n).unwrap().count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        let all: Vec<usize> = all_graphs_by_order(7, &NoFilter).iter().map(Vec::len).collect();
        assert_eq!(all, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn range_errors() {
        assert!(matches!(enumerate_connected(0), Err(Error::OrderOutOfRange { n: 0, .. })));
        assert!(matches!(enumerate_connected(11), Err(Error::OrderOutOfRange { n: 11, .. })));
        assert!(brute_force_connected(8).is_err());
    }

    #[test]
    fn brute_small() {
        assert_eq!(brute_force_connected(2).unwrap().len(), 1);
        assert_eq!(brute_force_connected(3).unwrap().len(), 2);
    }

    #[test]
    fn outputs_are_canonical_and_distinct() {
        let gs: Vec<Graph> = enumerate_connected(6).unwrap().collect();
        let labels: HashSet<_> = gs.iter().map(canonical_label).collect();
        assert_eq!(labels.len(), gs.len());
        assert!(gs.iter().all(|g| canonical_label(g).graph() == g));
    }

    #[test]
    fn filtered_matches_post_filter() {
        use crate::predicates::is_st_graph;
        let p = STParams::new(3, 1).unwrap();
        for n in 1..=7 {
            let pruned = enumerate_connected_filtered(n, StFilter(p)).unwrap().count();
            let post = enumerate_connected(n).unwrap().filter(|g| is_st_graph(g, p)).count();
            assert_eq!(pruned, post, "n={n}");
        }
    }

    #[test]
    fn scan_counts() {
        let total = scan_connected(7, &NoFilter, |_| 1usize, |a, b| a + b).unwrap();
        assert_eq!(total, 1 + 1 + 2 + 6 + 21 + 112 + 853);
    }
}
