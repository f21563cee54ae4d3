//! Worked examples for the public operations, with expected values derived
//! by hand or by brute force.

use stgraph::graph::{disjoint_union, Family};
use stgraph::predicates::{hamilton_uv_path, is_hamiltonian, maximum_independent_set};
use stgraph::*;

fn empty(n: usize) -> Graph {
    Graph::new(n)
}

fn k4_minus_e() -> Graph {
    let mut g = complete(4);
    g.remove_edge(0, 1);
    g
}

#[test]
fn named_families() {
    let k4 = make_named(Family::Complete, &[4]).unwrap();
    assert_eq!((k4.size(), k4.degrees()), (6, vec![3; 4]));
    let c4 = make_named(Family::Cycle, &[4]).unwrap();
    assert_eq!((c4.size(), c4.degrees()), (4, vec![2; 4]));
    let p = make_named(Family::Petersen, &[]).unwrap();
    assert_eq!((p.order(), p.size(), p.degrees()), (10, 15, vec![3; 10]));
    assert_eq!(stgraph::predicates::girth(&p), Some(5));
    assert!(make_named(Family::Cycle, &[2]).is_err());
}

#[test]
fn joins() {
    assert!(are_isomorphic(&join(&empty(2), &empty(2)).unwrap(), &cycle(4)));
    assert!(are_isomorphic(&join(&empty(2), &complete(2)).unwrap(), &k4_minus_e()));
    assert_eq!(join(&empty(1), &empty(1)).unwrap(), complete(2));
}

#[test]
fn induced_and_components() {
    let k3 = complete(4).induced_subgraph(VertexSet::from(vec![0, 1, 2])).unwrap();
    assert_eq!(k3, complete(3));
    let opp = cycle(4).induced_subgraph(VertexSet::from(vec![0, 2])).unwrap();
    assert_eq!((opp.order(), opp.size()), (2, 0));
    let p = petersen();
    let mis = maximum_independent_set(&p);
    assert_eq!(mis.len(), 4);
    for x in p.vertices().difference(mis) {
        let s = mis.union(VertexSet::singleton(x));
        assert_eq!(p.edges_within(s), 2);
    }
    assert_eq!(complete(4).connected_components().len(), 1);
    assert_eq!(empty(3).connected_components().len(), 3);
    let comps = cycle(4).components_within(VertexSet::from(vec![0, 2]));
    assert_eq!(comps, vec![VertexSet::singleton(0), VertexSet::singleton(2)]);
}

#[test]
fn graph6_golden() {
    assert_eq!(to_graph6(&complete(4)).unwrap(), "C~");
    assert_eq!(to_graph6(&empty(5)).unwrap(), "D??");
    assert_eq!(from_graph6(&to_graph6(&petersen()).unwrap()).unwrap(), petersen());
}

#[test]
fn four_vertex_classes() {
    let mut labels = std::collections::BTreeSet::new();
    for bits in 0u32..64 {
        let mut g = empty(4);
        let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
        for (e, &(i, j)) in pairs.iter().enumerate() {
            if bits >> e & 1 == 1 {
                g.add_edge(i, j);
            }
        }
        labels.insert(canonical_label(&g));
    }
    assert_eq!(labels.len(), 11);
}

#[test]
fn induced_edge_minima() {
    assert_eq!(min_induced_edges(&complete(5), 3), Some(3));
    assert_eq!(min_induced_edges(&cycle(5), 3), Some(1));
    assert_eq!(min_induced_edges(&petersen(), 5), Some(2));
    assert!(is_st_graph(&cycle(4), STParams::new(3, 2).unwrap()));
    assert!(!is_st_graph(&cycle(5), STParams::new(3, 2).unwrap()));
    assert!(is_st_graph(&cycle(4), STParams::new(5, 1).unwrap()));
}

#[test]
fn independence_and_connectivity() {
    assert_eq!(independence_number(&complete(4)), 1);
    assert_eq!(independence_number(&join(&empty(3), &complete(3)).unwrap()), 3);
    assert_eq!(independence_number(&petersen()), 4);
    assert_eq!(vertex_connectivity(&complete(5)), 4);
    assert_eq!(vertex_connectivity(&cycle(6)), 2);
    assert_eq!(vertex_connectivity(&petersen()), 3);
    assert!(!is_k_connected(&complete(4), 4));
    assert!(is_k_connected(&complete(4), 3));
}

#[test]
fn hamiltonicity() {
    let p = hamilton_uv_path(&complete(4), 0, 1).unwrap();
    assert!(validate_path(&complete(4), &p, 0, 1) && p.len() == 4);
    assert!(hamilton_uv_path(&cycle(4), 0, 2).is_none());
    assert_eq!(hamilton_uv_path(&complete(2), 0, 1).unwrap().vertices(), &[0, 1]);
    assert!(is_hamiltonian_connected(&complete(4)));
    assert!(!is_hamiltonian_connected(&cycle(4)));
    assert!(!is_hamiltonian_connected(&k4_minus_e()));
    assert!(is_hamiltonian_connected(&complete(1)) && is_hamiltonian_connected(&complete(2)));
    assert!(is_hamiltonian(&cycle(5)).unwrap());
    assert!(!is_hamiltonian(&petersen()).unwrap());
    assert!(is_hamiltonian(&join(&empty(3), &complete(3)).unwrap()).unwrap());
    assert!(matches!(is_hamiltonian(&complete(2)), Err(Error::OrderTooSmall { .. })));
}

#[test]
fn witnesses() {
    let w = exception_witness(&cycle(4), 2).unwrap();
    assert!(w.independent_part == VertexSet::from(vec![0, 2]) || w.independent_part == VertexSet::from(vec![1, 3]));
    assert!(exception_witness(&complete(4), 2).is_none());
    let g = join(&empty(3), &path_graph(3)).unwrap();
    assert_eq!(exception_witness(&g, 3).unwrap().independent_part, VertexSet::from(vec![0, 1, 2]));
}

/// The exception family kK1 ∨ G_k has α = κ = k and is [k+1,2] for k ≥ 2.
#[test]
fn exception_family_properties() {
    for k in 2..=4 {
        for gk in stgraph::enumerate::all_graphs_by_order(k, &stgraph::enumerate::NoFilter).pop().unwrap() {
            let g = join(&empty(k), &gk).unwrap();
            assert!(exception_witness(&g, k).is_some());
            assert_eq!(independence_number(&g), k);
            assert_eq!(vertex_connectivity(&g), k);
            assert!(is_st_graph(&g, STParams::new(k + 1, 2).unwrap()));
            assert!(!is_hamiltonian_connected(&g));
        }
    }
}

#[test]
fn petersen_recognition() {
    assert!(is_petersen(&petersen()));
    assert!(!is_petersen(&cycle(10)));
    assert!(!is_petersen(&complete(5)));
    let two_c5 = disjoint_union(&cycle(5), &cycle(5)).unwrap();
    assert!(!is_petersen(&two_c5));
}

#[test]
fn anchoring() {
    let ap = anchor(&complete(4), &UVPath::new(vec![0, 1, 2])).unwrap();
    assert_eq!((ap.outside, ap.anchors.clone(), ap.rho()), (3, vec![0, 1, 2], Some(0)));
    let ap = anchor(&cycle(5), &UVPath::new(vec![0, 1, 2, 3])).unwrap();
    assert_eq!((ap.outside, ap.anchors.clone(), ap.rho()), (4, vec![0, 3], Some(2)));
    assert!(anchor(&cycle(5), &UVPath::new(vec![0, 1, 2, 3, 4])).is_none());
}
