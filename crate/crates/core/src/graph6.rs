//! The graph6 text encoding (single-byte order header only).
//!
//! A line is `chr(63 + n)` followed by the upper triangle of the adjacency
//! matrix read column by column, `(0,1) (0,2) (1,2) (0,3) ...`, packed six bits
//! per byte with the first bit in the high position, each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty line")]
    Empty,
    #[error("sparse6 input is not supported")]
    Sparse6,
    #[error("digraph6 input is not supported")]
    Digraph6,
    #[error("header byte {0:#04x} does not encode an order between 1 and 62")]
    BadHeader(u8),
    #[error("order {0} exceeds the {MAX_VERTICES}-vertex limit")]
    TooLarge(usize),
    #[error("expected {expected} bytes for this order, found {found}")]
    Length { expected: usize, found: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("padding bits in the final byte are not zero")]
    NonZeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Length in bytes of the encoding of an `n`-vertex graph.
pub const fn encoded_len(n: usize) -> usize {
    1 + (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A trailing `\n` or `\r\n` and a leading
/// `>>graph6<<` header are accepted.
pub fn parse(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let &first = bytes.first().ok_or(Graph6Error::Empty)?;
    match first {
        b':' => return Err(Graph6Error::Sparse6),
        b'&' => return Err(Graph6Error::Digraph6),
        _ => {}
    }
    if line.starts_with(">>sparse6<<") {
        return Err(Graph6Error::Sparse6);
    }
    if line.starts_with(">>digraph6<<") {
        return Err(Graph6Error::Digraph6);
    }
    if !(OFFSET + 1..=OFFSET + 62).contains(&first) {
        return Err(Graph6Error::BadHeader(first));
    }
    let n = (first - OFFSET) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let expected = encoded_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: bytes.len(),
        });
    }
    let body = &bytes[1..];
    if let Some((i, &byte)) = body
        .iter()
        .enumerate()
        .find(|(_, &b)| !(OFFSET..=OFFSET + 63).contains(&b))
    {
        return Err(Graph6Error::ByteOutOfRange {
            offset: i + 1,
            byte,
        });
    }

    let mut rows = [0u32; MAX_VERTICES];
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let word = body[bit / 6] - OFFSET;
            if word >> (5 - bit % 6) & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let word = body[bit / 6] - OFFSET;
        if word & ((1 << (6 - bit % 6)) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    Ok(Graph::from_rows(&rows[..n])?)
}

/// Encodes `g` as a graph6 line without a trailing newline.
pub fn emit(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(encoded_len(n));
    out.push(OFFSET + n as u8);
    let mut word = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            word = word << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + word);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (word << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
