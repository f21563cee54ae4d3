//! graph6 text encoding, short form only (orders 0..=62).
//!
//! A graph of order `n` is written as the byte `n + 63` followed by the upper
//! triangle of its adjacency matrix, column by column (`(0,1), (0,2), (1,2),
//! (0,3), ..`), packed six bits per byte, most significant bit first, each
//! byte offset by 63. Unused trailing bits are zero.

use thiserror::Error;

use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

/// Largest order the short length form can express.
pub const MAX_SHORT_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed length: expected {expected} data bytes for order {order}, found {found}")]
    MalformedLength { order: usize, expected: usize, found: usize },
    #[error("long-form orders (first byte 126) are not supported")]
    LongForm,
    #[error("nonzero padding bits after the adjacency data")]
    TrailingBitsNonzero,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    OutOfRange { byte: u8, offset: usize },
    #[error("order {0} is too large for the short graph6 form")]
    OrderTooLarge(usize),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = String::with_capacity(1 + data_len(n));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::OutOfRange { byte, offset });
        }
    }
    let (&first, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if first == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (first - 63) as usize;
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::MalformedLength { order: n, expected, found: data.len() });
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if (data[k / 6] - 63) & pad_mask != 0 {
            return Err(Graph6Error::TrailingBitsNonzero);
        }
    }
    Ok(g)
}

/// Parses a newline-delimited stream, skipping blank lines and a leading
/// header on any line.
pub fn parse_stream(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).map(from_graph6).collect()
}
