//! graph6 encoding for graphs of order at most 62.
//!
//! The first byte is `n + 63`. The upper triangle of the adjacency matrix is
//! then read column by column, `(0,1), (0,2), (1,2), (0,3), ...`, packed six
//! bits per byte (most significant first), zero-padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Capability {
            what: "graph6",
            n,
            limit: MAX_GRAPH6_ORDER,
        });
    }
    let bits = (1..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .map(|(i, j)| g.has_edge(i, j));
    Ok(encode_bits(n, bits))
}

/// Encodes a bit stream in graph6 column order. The iterator must yield
/// exactly `n(n-1)/2` bits.
pub(crate) fn encode_bits(n: usize, bits: impl Iterator<Item = bool>) -> String {
    let total = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + total.div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for bit in bits {
        acc = (acc << 1) | bit as u8;
        filled += 1;
        if filled == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let Some((&first, body)) = bytes.split_first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("invalid order byte {first}")));
    }
    if first == 126 {
        return Err(Error::Capability {
            what: "graph6",
            n: 63,
            limit: MAX_GRAPH6_ORDER,
        });
    }
    let n = (first - 63) as usize;
    let total = n * n.saturating_sub(1) / 2;
    let expected = total.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|s| (v >> s) & 1 == 1));
    }
    if bits[total..].iter().any(|&b| b) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    let edges = pairs.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e);
    Graph::from_edges(n, edges)
}
