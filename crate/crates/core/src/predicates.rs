//! Exact decision procedures: [s,t]-graphs, independence number, vertex
//! connectivity, Hamilton paths and cycles, and the recognisers for the
//! exceptional graphs `kK1 ∨ G_k` and the Petersen graph.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};
use crate::path::UVPath;

/// Parameters of the `[s,t]` property: every induced subgraph of order `s`
/// has at least `t` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct STParams {
    pub s: usize,
    pub t: usize,
}

impl STParams {
    pub fn new(s: usize, t: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParams("s must be at least 1".into()));
        }
        Ok(STParams { s, t })
    }

    /// Whether some graph of order >= s can have the property at all.
    pub fn is_satisfiable(&self) -> bool {
        self.t <= self.s * (self.s - 1) / 2
    }
}

/// Minimum of e(G[S]) over all `s`-subsets S, or `None` when `s > n(G)` and
/// the family of subsets is empty.
pub fn min_induced_edges(g: &Graph, s: usize) -> Option<usize> {
    sparsest_subset(g, VertexSet::EMPTY, g.vertices(), s).map(|(e, _)| e)
}

/// Minimum of e(G[S]) over `s`-subsets S that contain `v`.
pub fn min_induced_edges_containing(g: &Graph, s: usize, v: usize) -> Option<usize> {
    sparsest_subset(g, VertexSet::singleton(v), g.vertices(), s).map(|(e, _)| e)
}

/// An `s`-set `forced ⊆ S ⊆ forced ∪ pool` inducing as few edges as possible,
/// with its edge count. Branch and bound over pool vertices in ascending
/// degree order, pruning on the partial edge count.
pub fn sparsest_subset(g: &Graph, forced: VertexSet, pool: VertexSet, s: usize) -> Option<(usize, VertexSet)> {
    if forced.len() > s {
        return None;
    }
    let mut cands: Vec<usize> = pool.difference(forced).to_vec();
    let need = s - forced.len();
    if cands.len() < need {
        return None;
    }
    cands.sort_by_key(|&v| g.degree(v));
    let mut bb = SparsestSearch { rows: g.rows(), cands: &cands, best: usize::MAX, best_set: forced };
    bb.dfs(0, forced.bits(), g.edges_within(forced), need);
    Some((bb.best, bb.best_set))
}

struct SparsestSearch<'a> {
    rows: &'a [u64],
    cands: &'a [usize],
    best: usize,
    best_set: VertexSet,
}

impl SparsestSearch<'_> {
    fn dfs(&mut self, from: usize, chosen: u64, edges: usize, need: usize) {
        if need == 0 {
            if edges < self.best {
                self.best = edges;
                self.best_set = VertexSet(chosen);
            }
            return;
        }
        for i in from..=self.cands.len() - need {
            let v = self.cands[i];
            let e = edges + (self.rows[v] & chosen).count_ones() as usize;
            if e >= self.best {
                continue;
            }
            self.dfs(i + 1, chosen | bit(v), e, need - 1);
            if self.best == 0 {
                return;
            }
        }
    }
}

/// `[s,t]` test. Vacuously true when `s > n(G)`.
pub fn is_st_graph(g: &Graph, p: STParams) -> bool {
    if p.t == 0 {
        return true;
    }
    min_induced_edges(g, p.s).is_none_or(|m| m >= p.t)
}

/// α(G), via maximum cliques of the complement.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let co = g.complement();
    let mut best = 0u64;
    max_clique(co.rows(), g.vertices().bits(), 0, &mut best);
    VertexSet(best)
}

fn max_clique(rows: &[u64], cand: u64, cur: u64, best: &mut u64) {
    if cand == 0 {
        if cur.count_ones() > best.count_ones() {
            *best = cur;
        }
        return;
    }
    if cur.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    max_clique(rows, cand & rows[v], cur | bit(v), best);
    max_clique(rows, cand & !bit(v), cur, best);
}

/// Number of internally disjoint (u,v)-paths for nonadjacent `u`, `v`,
/// stopping once `cap` paths are found. Unit-capacity max-flow on the
/// vertex-split network: vertex x becomes `2x -> 2x+1` with capacity one.
pub fn local_connectivity(g: &Graph, u: usize, v: usize, cap: usize) -> usize {
    debug_assert!(u != v && !g.adjacent(u, v));
    let n = g.order();
    let m = 2 * n;
    // residual[a][b] for arcs a -> b; dense is fine at n <= 64
    let mut residual = vec![0i8; m * m];
    for x in 0..n {
        residual[(2 * x) * m + 2 * x + 1] = 1;
        for y in g.neighbors(x) {
            residual[(2 * x + 1) * m + 2 * y] = 1;
        }
    }
    let (source, sink) = (2 * u + 1, 2 * v);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; m];
    while flow < cap {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for b in 0..m {
                if prev[b] == usize::MAX && residual[a * m + b] > 0 {
                    prev[b] = a;
                    queue.push_back(b);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut b = sink;
        while b != source {
            let a = prev[b];
            residual[a * m + b] -= 1;
            residual[b * m + a] += 1;
            b = a;
        }
        flow += 1;
    }
    flow
}

/// κ(G). Complete graphs get n-1; otherwise the minimum local connectivity
/// over nonadjacent pairs. Only pairs whose first vertex has index at most
/// the current bound need checking: some vertex of that prefix lies outside
/// any minimum separator.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.size() == n * n.saturating_sub(1) / 2 {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree().unwrap_or(0);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.adjacent(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// "k-connected": κ(G) >= k and n(G) >= k + 1.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n < k + 1 {
        return false;
    }
    if k == 0 {
        return true;
    }
    if g.min_degree().unwrap_or(0) < k || !g.is_connected() {
        return false;
    }
    (0..k.min(n)).all(|i| (i + 1..n).all(|j| g.adjacent(i, j) || local_connectivity(g, i, j, k) >= k))
}

/// A Hamilton (u,v)-path, if one exists. Exact backtracking; each step
/// checks that every unvisited vertex can still be an interior vertex and
/// that the unvisited part stays connected to `v`, and tries successors in
/// ascending order of their remaining degree.
pub fn hamilton_uv_path(g: &Graph, u: usize, v: usize) -> Option<UVPath> {
    let n = g.order();
    if u == v || u >= n || v >= n {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    path.push(u);
    let remaining = g.vertices().bits() & !bit(u);
    hamilton_dfs(g, u, v, remaining, &mut path).then(|| UVPath::new(path))
}

fn hamilton_dfs(g: &Graph, cur: usize, target: usize, remaining: u64, path: &mut Vec<usize>) -> bool {
    let rows = g.rows();
    if remaining == bit(target) {
        if rows[cur] & bit(target) != 0 {
            path.push(target);
            return true;
        }
        return false;
    }
    let live = remaining | bit(cur);
    let inner = remaining & !bit(target);
    if VertexSet(inner).iter().any(|w| (rows[w] & live).count_ones() < 2) {
        return false;
    }
    if rows[target] & inner == 0 {
        return false;
    }
    if g.reach_within(target, VertexSet(remaining)).bits() != remaining {
        return false;
    }
    let mut next: smallvec::SmallVec<[(u32, usize); 16]> =
        VertexSet(rows[cur] & inner).iter().map(|w| ((rows[w] & remaining).count_ones(), w)).collect();
    next.sort_unstable();
    for (_, w) in next {
        path.push(w);
        if hamilton_dfs(g, w, target, remaining & !bit(w), path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Hamilton paths between every pair of distinct vertices. K1 and K2 count
/// as hamiltonian-connected.
pub fn is_hamiltonian_connected(g: &Graph) -> bool {
    let n = g.order();
    if n <= 1 {
        return true;
    }
    if !g.is_connected() {
        return false;
    }
    // a degree-2 vertex forces the path between its neighbours to be short
    if n >= 4 && g.min_degree().unwrap_or(0) < 3 {
        return false;
    }
    (0..n).all(|u| (u + 1..n).all(|v| hamilton_uv_path(g, u, v).is_some()))
}

/// Whether G has a Hamilton cycle. Needs n >= 3.
pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n < 3 {
        return Err(Error::OrderTooSmall { needed: 3, order: n });
    }
    Ok(hamilton_cycle(g).is_some())
}

/// A Hamilton cycle as a vertex sequence (closing edge implied).
pub fn hamilton_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n < 3 || !g.is_connected() || g.min_degree().unwrap_or(0) < 2 {
        return None;
    }
    let start = (0..n).min_by_key(|&v| g.degree(v)).unwrap();
    g.neighbors(start).iter().find_map(|t| hamilton_uv_path(g, start, t)).map(|p| p.into_vertices())
}

/// Certificate that G ≅ aK1 ∨ H: `independent_part` induces no edges and is
/// completely joined to `rest`, and the two parts partition V(G).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinWitness {
    pub independent_part: VertexSet,
    pub rest: VertexSet,
}

impl JoinWitness {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let (s, r) = (self.independent_part, self.rest);
        s.intersection(r).is_empty()
            && s.union(r) == g.vertices()
            && g.edges_within(s) == 0
            && s.iter().all(|x| r.is_subset(g.neighbors(x)))
    }
}

/// Witness for G ≅ aK1 ∨ H with |H| = b. Any vertex x of the independent
/// part has N(x) equal to the rest, so the part is V − N(x) for some x of
/// degree b; each such candidate set is checked directly.
pub fn join_witness(g: &Graph, independent: usize, rest: usize) -> Option<JoinWitness> {
    let n = g.order();
    if independent == 0 || n != independent + rest {
        return None;
    }
    let all = g.vertices();
    (0..n).filter(|&x| g.degree(x) == rest).find_map(|x| {
        let r = g.neighbors(x);
        let s = all.difference(r);
        (s.len() == independent && s.iter().all(|y| g.neighbors(y) == r))
            .then_some(JoinWitness { independent_part: s, rest: r })
    })
}

/// Witness for G ≅ kK1 ∨ G_k (order 2k).
pub fn exception_witness(g: &Graph, k: usize) -> Option<JoinWitness> {
    join_witness(g, k, k)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let c = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
            }
        }
    }
    best
}

/// Order 10, 3-regular and girth 5; these determine the Petersen graph.
pub fn is_petersen(g: &Graph) -> bool {
    g.order() == 10 && (0..10).all(|v| g.degree(v) == 3) && girth(g) == Some(5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_label;
    use crate::graph::{complete, cycle, join, path, petersen};
    use crate::path::validate_path;

    fn subsets(n: usize, s: usize) -> impl Iterator<Item = VertexSet> {
        (0u64..1 << n).map(VertexSet).filter(move |m| m.len() == s)
    }

    fn min_induced_naive(g: &Graph, s: usize) -> Option<usize> {
        subsets(g.order(), s).map(|m| g.edges_within(m)).min()
    }

    fn alpha_naive(g: &Graph) -> usize {
        (0u64..1 << g.order()).map(VertexSet).filter(|&m| g.edges_within(m) == 0).map(|m| m.len()).max().unwrap()
    }

    fn kappa_by_deletion(g: &Graph) -> usize {
        let n = g.order();
        for k in 0..n.saturating_sub(1) {
            for s in subsets(n, k) {
                let rest = g.vertices().difference(s);
                if g.components_within(rest).len() > 1 {
                    return k;
                }
            }
        }
        n.saturating_sub(1)
    }

    fn random_graph(n: usize, p: f64, rng: &mut impl rand::Rng) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn min_induced_examples() {
        assert_eq!(min_induced_edges(&complete(5), 3), Some(3));
        assert_eq!(min_induced_naive(&cycle(5), 3), Some(1));
        assert_eq!(min_induced_edges(&cycle(5), 3), Some(1));
        assert_eq!(min_induced_naive(&petersen(), 5), Some(2));
        assert_eq!(min_induced_edges(&petersen(), 5), Some(2));
        assert_eq!(min_induced_edges(&cycle(4), 5), None);
    }

    #[test]
    fn min_induced_matches_naive_scan() {
        let mut rng = rand::thread_rng();
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
            for s in 1..=n + 1 {
                assert_eq!(min_induced_edges(&g, s), min_induced_naive(&g, s), "{g:?} s={s}");
            }
            let v = rng.gen_range(0..n);
            for s in 1..=n {
                let naive = subsets(n, s).filter(|m| m.contains(v)).map(|m| g.edges_within(m)).min();
                assert_eq!(min_induced_edges_containing(&g, s, v), naive);
            }
        }
    }

    use rand::Rng;

    #[test]
    fn st_examples() {
        let st = |s, t| STParams::new(s, t).unwrap();
        assert!(is_st_graph(&cycle(4), st(3, 2)));
        assert!(!is_st_graph(&cycle(5), st(3, 2)));
        assert!(is_st_graph(&complete(4), st(5, 1)));
        assert!(is_st_graph(&cycle(4), st(5, 1)));
        assert!(STParams::new(0, 1).is_err());
        assert!(!STParams::new(3, 4).unwrap().is_satisfiable());
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&complete(4)), 1);
        let g = join(&Graph::new(3), &complete(3)).unwrap();
        assert_eq!(independence_number(&g), 3);
        assert_eq!(alpha_naive(&petersen()), 4);
        assert_eq!(independence_number(&petersen()), 4);
        assert_eq!(independence_number(&Graph::new(0)), 0);
    }

    #[test]
    fn independence_matches_naive() {
        let mut rng = rand::thread_rng();
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
            assert_eq!(independence_number(&g), alpha_naive(&g));
            assert_eq!(g.edges_within(maximum_independent_set(&g)), 0);
        }
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&complete(5)), 4);
        assert_eq!(vertex_connectivity(&cycle(6)), 2);
        assert_eq!(kappa_by_deletion(&petersen()), 3);
        assert_eq!(vertex_connectivity(&petersen()), 3);
        assert_eq!(vertex_connectivity(&Graph::new(1)), 0);
        assert_eq!(vertex_connectivity(&Graph::new(3)), 0);
        assert!(is_k_connected(&complete(4), 3));
        assert!(!is_k_connected(&complete(3), 3));
    }

    #[test]
    fn connectivity_matches_deletion_oracle() {
        let mut rng = rand::thread_rng();
        for _ in 0..300 {
            let n = rng.gen_range(1..=9);
            let g = random_graph(n, rng.gen_range(0.2..0.95), &mut rng);
            let kappa = kappa_by_deletion(&g);
            assert_eq!(vertex_connectivity(&g), kappa, "{g:?}");
            for k in 0..=n {
                assert_eq!(is_k_connected(&g, k), kappa >= k && n > k, "{g:?} k={k}");
            }
        }
    }

    fn hamilton_uv_brute(g: &Graph, u: usize, v: usize) -> bool {
        fn rec(g: &Graph, cur: usize, v: usize, used: u64, n: usize) -> bool {
            if used.count_ones() as usize == n {
                return cur == v;
            }
            g.neighbors(cur).iter().any(|w| used & bit(w) == 0 && (w != v || used.count_ones() as usize == n - 1) && rec(g, w, v, used | bit(w), n))
        }
        rec(g, u, v, bit(u), g.order())
    }

    #[test]
    fn hamilton_path_examples() {
        let k4 = complete(4);
        let p = hamilton_uv_path(&k4, 0, 1).unwrap();
        assert_eq!(p.len(), 4);
        assert!(validate_path(&k4, &p, 0, 1));
        // opposite corners of C4 lie in the same independent class of 2K1 ∨ 2K1
        assert!(hamilton_uv_path(&cycle(4), 0, 2).is_none());
        assert!(!hamilton_uv_brute(&cycle(4), 0, 2));
        assert!(hamilton_uv_path(&cycle(4), 0, 1).is_some());
        assert_eq!(hamilton_uv_path(&complete(2), 0, 1).unwrap().vertices(), &[0, 1]);
        assert!(hamilton_uv_path(&k4, 2, 2).is_none());
    }

    #[test]
    fn hamilton_path_matches_brute_force() {
        let mut rng = rand::thread_rng();
        for _ in 0..300 {
            let n = rng.gen_range(2..=7);
            let g = random_graph(n, rng.gen_range(0.3..0.9), &mut rng);
            for u in 0..n {
                for v in 0..n {
                    if u == v {
                        continue;
                    }
                    let got = hamilton_uv_path(&g, u, v);
                    assert_eq!(got.is_some(), hamilton_uv_brute(&g, u, v), "{g:?} {u} {v}");
                    if let Some(p) = got {
                        assert!(validate_path(&g, &p, u, v));
                        assert_eq!(p.len(), n);
                    }
                }
            }
        }
    }

    #[test]
    fn hamiltonian_connected_examples() {
        assert!(is_hamiltonian_connected(&complete(4)));
        assert!(!is_hamiltonian_connected(&cycle(4)));
        let mut k4e = complete(4);
        k4e.remove_edge(0, 1);
        assert!(!is_hamiltonian_connected(&k4e));
        assert!(is_hamiltonian_connected(&Graph::new(1)));
        assert!(is_hamiltonian_connected(&complete(2)));
        assert!(!is_hamiltonian_connected(&Graph::new(2)));
        assert!(is_hamiltonian_connected(&complete(3)));
    }

    #[test]
    fn hamiltonian_examples() {
        assert!(is_hamiltonian(&cycle(5)).unwrap());
        assert!(!is_hamiltonian(&petersen()).unwrap());
        assert!(is_hamiltonian(&join(&Graph::new(3), &complete(3)).unwrap()).unwrap());
        assert!(!is_hamiltonian(&path(4)).unwrap());
        assert_eq!(is_hamiltonian(&complete(2)), Err(Error::OrderTooSmall { needed: 3, order: 2 }));
        let c = hamilton_cycle(&cycle(7)).unwrap();
        assert!(cycle(7).adjacent(c[0], c[6]));
    }

    #[test]
    fn exception_witness_examples() {
        let w = exception_witness(&cycle(4), 2).unwrap();
        assert_eq!(w.independent_part, VertexSet::from_iter([0, 2]));
        assert!(w.is_valid_for(&cycle(4)));
        assert!(exception_witness(&complete(4), 2).is_none());
        let g = join(&Graph::new(3), &path(3)).unwrap();
        let w = exception_witness(&g, 3).unwrap();
        assert_eq!(w.independent_part, VertexSet::from_iter([0, 1, 2]));
        assert!(exception_witness(&g, 2).is_none());
        // (k+1)K1 ∨ G_k shape used by the hamiltonicity scan
        let h = join(&Graph::new(3), &complete(2)).unwrap();
        assert!(join_witness(&h, 3, 2).unwrap().is_valid_for(&h));
    }

    #[test]
    fn exception_family_properties() {
        // every G_k of order k, k = 2, 3, 4
        for k in 2..=4 {
            let pairs = k * (k - 1) / 2;
            for mask in 0u64..1 << pairs {
                let mut gk = Graph::new(k);
                let mut idx = 0;
                for j in 1..k {
                    for i in 0..j {
                        if mask >> idx & 1 == 1 {
                            gk.add_edge(i, j);
                        }
                        idx += 1;
                    }
                }
                let g = join(&Graph::new(k), &gk).unwrap();
                assert!(exception_witness(&g, k).is_some());
                assert_eq!(independence_number(&g), k);
                assert_eq!(vertex_connectivity(&g), k);
                assert!(is_st_graph(&g, STParams { s: k + 1, t: 2 }));
                assert!(!is_hamiltonian_connected(&g));
            }
        }
    }

    #[test]
    fn petersen_recognition() {
        assert!(is_petersen(&petersen()));
        assert!(!is_petersen(&cycle(10)));
        assert!(!is_petersen(&complete(5)));
        let relabelled = petersen().permuted(&[3, 1, 4, 0, 9, 2, 6, 5, 8, 7]);
        assert!(is_petersen(&relabelled));
        assert_eq!(canonical_label(&relabelled), canonical_label(&petersen()));
        assert_eq!(girth(&path(5)), None);
        assert_eq!(girth(&complete(4)), Some(3));
    }
}
