//! Canonical labelling by equitable-partition refinement and a backtracking
//! search over individualised vertices.
//!
//! Every discrete partition reached by the search is a candidate labelling;
//! the canonical form is the candidate whose relabelled adjacency rows are
//! lexicographically smallest. Automorphisms found along the way (two leaves
//! with equal rows) prune sibling subtrees by orbit and let the search jump
//! back to the deepest common ancestor of the two leaves.

use smallvec::SmallVec;

use crate::graph::{bit, Graph, VertexSet};
use crate::graph6::{to_graph6, Graph6Error};

type Cells = SmallVec<[(u8, u8); 16]>;
type Rows = SmallVec<[u64; 12]>;
type Arrangement = [u8; 64];

/// The canonical representative of a graph's isomorphism class.
///
/// Two graphs have equal labels exactly when they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalLabel(Graph);

impl CanonicalLabel {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn to_graph6(&self) -> Result<String, Graph6Error> {
        to_graph6(&self.0)
    }
}

/// Canonical form together with the labelling that produces it.
#[derive(Clone, Debug)]
pub struct Canonical {
    pub label: CanonicalLabel,
    /// `order[i]` is the input vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

impl Canonical {
    /// Canonical position of every input vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn canonical_label(g: &Graph) -> CanonicalLabel {
    canonical_form(g).label
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_label(g) == canonical_label(h)
}

pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.order();
    let mut arr = [0u8; 64];
    for (i, a) in arr.iter_mut().enumerate().take(n) {
        *a = i as u8;
    }
    let mut cells = Cells::new();
    if n > 0 {
        cells.push((0, n as u8));
    }
    let mut search = Search { g, n, first: None, best: None, generators: Vec::new() };
    let mut fixed = SmallVec::new();
    search.node(arr, cells, &mut fixed);
    let best = search.best.expect("search visits at least one leaf");
    Canonical {
        label: CanonicalLabel(Graph::from_rows(&best.rows)),
        order: best.arr[..n].iter().map(|&v| v as usize).collect(),
    }
}

/// Splits cells until the partition is equitable: within each cell every
/// vertex has the same number of neighbours in every cell. New cells are
/// ordered by neighbour count, so the result depends only on structure.
fn refine(g: &Graph, arr: &mut Arrangement, cells: &mut Cells) {
    let rows = g.rows();
    let mut si = 0;
    while si < cells.len() {
        let (ss, sl) = cells[si];
        let splitter = arr[ss as usize..(ss + sl) as usize].iter().fold(0u64, |m, &v| m | bit(v as usize));
        let mut next = Cells::new();
        let mut changed = false;
        for &(cs, cl) in cells.iter() {
            if cl == 1 {
                next.push((cs, cl));
                continue;
            }
            let (cs, cl) = (cs as usize, cl as usize);
            let slice = &mut arr[cs..cs + cl];
            slice.sort_unstable_by_key(|&v| (rows[v as usize] & splitter).count_ones());
            let key = |v: u8| (rows[v as usize] & splitter).count_ones();
            let mut start = cs;
            for i in cs + 1..cs + cl {
                if key(arr[i]) != key(arr[i - 1]) {
                    next.push((start as u8, (i - start) as u8));
                    start = i;
                    changed = true;
                }
            }
            next.push((start as u8, (cs + cl - start) as u8));
        }
        *cells = next;
        si = if changed { 0 } else { si + 1 };
    }
}

struct Leaf {
    rows: Rows,
    arr: Arrangement,
    fixed: SmallVec<[u8; 16]>,
}

enum Flow {
    Continue,
    JumpTo(usize),
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Arrangement>,
}

const MAX_GENERATORS: usize = 256;

impl Search<'_> {
    fn node(&mut self, mut arr: Arrangement, mut cells: Cells, fixed: &mut SmallVec<[u8; 16]>) -> Flow {
        refine(self.g, &mut arr, &mut cells);
        if cells.len() == self.n {
            return self.leaf(&arr, fixed);
        }
        let depth = fixed.len();
        let ti = cells.iter().position(|c| c.1 > 1).expect("non-discrete partition");
        let (ts, tl) = (cells[ti].0 as usize, cells[ti].1 as usize);
        let mut members: SmallVec<[u8; 16]> = SmallVec::from_slice(&arr[ts..ts + tl]);
        members.sort_unstable();

        let mut explored: SmallVec<[u8; 16]> = SmallVec::new();
        for &w in &members {
            if !explored.is_empty() && self.same_orbit_as_any(w, &explored, fixed) {
                continue;
            }
            let mut child = arr;
            let at = ts + child[ts..ts + tl].iter().position(|&x| x == w).unwrap();
            child.swap(ts, at);
            let mut child_cells = cells.clone();
            child_cells[ti] = (ts as u8, 1);
            child_cells.insert(ti + 1, (ts as u8 + 1, tl as u8 - 1));

            fixed.push(w);
            let flow = self.node(child, child_cells, fixed);
            fixed.pop();
            if let Flow::JumpTo(level) = flow {
                if level < depth {
                    return flow;
                }
            }
            explored.push(w);
        }
        Flow::Continue
    }

    fn leaf(&mut self, arr: &Arrangement, fixed: &SmallVec<[u8; 16]>) -> Flow {
        let n = self.n;
        let mut pos = [0u8; 64];
        for i in 0..n {
            pos[arr[i] as usize] = i as u8;
        }
        let rows: Rows = (0..n)
            .map(|i| VertexSet(self.g.rows()[arr[i] as usize]).iter().fold(0u64, |r, u| r | bit(pos[u] as usize)))
            .collect();

        let Some(first) = &self.first else {
            let leaf = Leaf { rows, arr: *arr, fixed: fixed.clone() };
            self.best = Some(Leaf { rows: leaf.rows.clone(), arr: leaf.arr, fixed: leaf.fixed.clone() });
            self.first = Some(leaf);
            return Flow::Continue;
        };
        if rows == first.rows {
            let level = common_prefix(&first.fixed, fixed);
            let gamma = automorphism(&first.arr, arr, n);
            self.push_generator(gamma);
            return Flow::JumpTo(level);
        }
        let best = self.best.as_ref().unwrap();
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf { rows, arr: *arr, fixed: fixed.clone() });
                Flow::Continue
            }
            std::cmp::Ordering::Equal => {
                let level = common_prefix(&best.fixed, fixed);
                let gamma = automorphism(&best.arr, arr, n);
                self.push_generator(gamma);
                Flow::JumpTo(level)
            }
            std::cmp::Ordering::Greater => Flow::Continue,
        }
    }

    fn push_generator(&mut self, gamma: Arrangement) {
        if self.generators.len() < MAX_GENERATORS {
            self.generators.push(gamma);
        }
    }

    /// Orbit test under the group generated by the known automorphisms that
    /// fix every individualised vertex.
    fn same_orbit_as_any(&self, w: u8, explored: &[u8], fixed: &[u8]) -> bool {
        let mut parent = [0u8; 64];
        for (i, p) in parent.iter_mut().enumerate().take(self.n) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; 64], mut x: u8) -> u8 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut any = false;
        for gamma in &self.generators {
            if fixed.iter().any(|&f| gamma[f as usize] != f) {
                continue;
            }
            any = true;
            for v in 0..self.n as u8 {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v as usize]));
                if a != b {
                    parent[a as usize] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&x| find(&mut parent, x) == root)
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Two leaves with identical relabelled rows: position `i` holds `from[i]`
/// in one and `to[i]` in the other, so `from[i] -> to[i]` preserves edges.
fn automorphism(from: &Arrangement, to: &Arrangement, n: usize) -> Arrangement {
    let mut gamma = [0u8; 64];
    for i in 0..n {
        gamma[from[i] as usize] = to[i];
    }
    gamma
}
