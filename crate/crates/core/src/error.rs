use thiserror::Error;

use crate::graph6::Graph6Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of 64")]
    OrderTooLarge(usize),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("operation needs at least {needed} vertices, graph has {order}")]
    OrderTooSmall { needed: usize, order: usize },
    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("no path joins {u} and {v}")]
    NoPath { u: usize, v: usize },
    #[error("rule {rule} produced an invalid path {path:?}")]
    RuleTranscription { rule: &'static str, path: Vec<usize> },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
