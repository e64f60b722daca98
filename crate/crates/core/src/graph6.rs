//! graph6 encoding: the sole interchange format for graphs.
//!
//! One graph per ASCII line. Header: n+63 for n <= 62, else '~' plus three
//! sextet bytes (18-bit big-endian). Payload: upper-triangle bits in column
//! order (0,1),(0,2),(1,2),(0,3),... packed six per byte, MSB first, each
//! byte offset by 63. Directive lines like ">>graph6<<" are rejected here;
//! strip them upstream if a producer emits one.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("format directive line (starts with \">>\") is not a graph")]
    DirectiveLine,
    #[error("graph order {0} not supported (expect 1..={MAX_VERTICES})")]
    UnsupportedOrder(usize),
    #[error("byte {byte:#04x} at position {pos} outside graph6 alphabet 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("line has {got} payload bytes, expected {expected}")]
    WrongLength { expected: usize, got: usize },
}

/// Number of payload bytes for an n-vertex graph.
fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Parse one graph6 line (no trailing newline).
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes.starts_with(b">>") {
        return Err(Graph6Error::DirectiveLine);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }
    let (n, header_len) = if bytes[0] == 126 {
        // Long form: 126 then three sextets. (126, 126, ...) would be the
        // 36-bit form for n > 258047, far beyond our 64-vertex cap.
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::UnsupportedOrder(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::WrongLength { expected: 4, got: bytes.len() });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b as usize - 63));
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let payload = &bytes[header_len..];
    if payload.len() != payload_len(n) {
        return Err(Graph6Error::WrongLength {
            expected: payload_len(n),
            got: payload.len(),
        });
    }
    let mut edges = Vec::new();
    let mut idx = 0usize; // bit index into the packed upper triangle
    for v in 1..n {
        for u in 0..v {
            let byte = payload[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    // Padding bits past the triangle must be zero for a canonical line, but
    // nauty tools always emit zeros there; we already sized the payload, so
    // stray set padding bits would be a producer bug. Accept and ignore.
    Ok(Graph::from_edges(n, &edges).expect("graph6 indices are in range by construction"))
}

/// Encode a graph as one graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
