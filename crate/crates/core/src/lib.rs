//! Small-graph toolkit for `[s,t]`-graphs and Hamilton connectivity.
//!
//! An `[s,t]`-graph is one in which every induced subgraph on `s` vertices
//! has at least `t` edges. The crate provides bitset graphs, graph6 I/O,
//! canonical labelling, exact predicates (independence number, vertex
//! connectivity, Hamilton paths and cycles), a rule-based path improvement
//! engine, isomorph-free enumeration of connected graphs and exhaustive
//! verification scans built on them.

pub mod canon;
pub mod engine;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod minsize;
pub mod path;
pub mod predicates;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonical_label, Canonical, CanonicalLabel};
pub use engine::{engine_with_fallback, improve, Certificate, EngineResult, Outcome, RuleId, RuleKind, TraceRecord};
pub use enumerate::{brute_force_connected, enumerate_connected};
pub use error::{Error, Result};
pub use graph::{complete, cycle, join, make_named, path as path_graph, petersen, Family, Graph, VertexSet};
pub use graph6::{from_graph6, parse_stream, to_graph6, Graph6Error};
pub use minsize::{min_size_search, MinSizeResult};
pub use path::{anchor, anchor_at, validate_path, AnchoredPath, UVPath};
pub use predicates::{
    exception_witness, hamilton_uv_path, independence_number, is_hamiltonian, is_hamiltonian_connected, is_k_connected,
    is_petersen, is_st_graph, min_induced_edges, vertex_connectivity, JoinWitness, STParams,
};
pub use verify::{TheoremId, TheoremReport};
