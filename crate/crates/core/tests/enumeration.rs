use std::collections::BTreeSet;

use stgraph::canon::canonical_label;
use stgraph::enumerate::{all_graphs_by_order, enumerate_connected, enumerate_connected_filtered, NoFilter, StFilter};
use stgraph::{brute_force_connected, is_st_graph, Graph, STParams};

fn labels(gs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut v: Vec<Graph> = gs.into_iter().map(|g| canonical_label(&g).into_graph()).collect();
    v.sort();
    v
}

#[test]
fn generator_matches_brute_force() {
    for n in 1..=6 {
        assert_eq!(labels(enumerate_connected(n).unwrap()), labels(brute_force_connected(n).unwrap()), "n={n}");
    }
}

#[test]
fn known_counts() {
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_connected(n).unwrap().count()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853, 11117]);
    let all: Vec<usize> = all_graphs_by_order(8, &NoFilter).iter().map(Vec::len).collect();
    assert_eq!(all, [1, 1, 2, 4, 11, 34, 156, 1044, 12346]);
}

#[test]
fn deterministic_order() {
    let a: Vec<Graph> = enumerate_connected(7).unwrap().collect();
    let b: Vec<Graph> = enumerate_connected(7).unwrap().collect();
    assert_eq!(a, b);
    let distinct: BTreeSet<_> = a.iter().collect();
    assert_eq!(distinct.len(), a.len());
}

#[test]
fn pruning_equals_post_filtering() {
    for (s, t) in [(3, 2), (4, 2), (5, 2), (4, 1), (4, 3)] {
        let p = STParams::new(s, t).unwrap();
        for n in 1..=7 {
            let pruned = labels(enumerate_connected_filtered(n, StFilter(p)).unwrap());
            let post = labels(enumerate_connected(n).unwrap().filter(|g| is_st_graph(g, p)));
            assert_eq!(pruned, post, "[{s},{t}] n={n}");
        }
    }
}
