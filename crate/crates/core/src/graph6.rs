//! graph6 line codec.
//!
//! One graph per ASCII line: a 63-biased order header (one byte for
//! n <= 62, `~` + 3 bytes for n <= 258047), followed by the upper
//! triangle of the adjacency matrix packed column-major, 6 bits per
//! byte, zero-padded. We support orders up to 4096 and no sparse6 or
//! digraph6 variants.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Graph, GraphBuilder, MAX_ORDER};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Graph6Error {
    /// Input line was empty.
    Empty,
    /// Byte outside the printable graph6 range, at this offset.
    BadByte { offset: usize, byte: u8 },
    /// Header declares an order beyond what we support.
    OrderTooLarge { order: usize },
    /// Line ended before the bit payload was complete.
    Truncated { expected_bytes: usize, got_bytes: usize },
    /// Extra bytes after the payload, starting at this offset.
    TrailingGarbage { offset: usize },
    /// Padding bits in the final byte must be zero.
    NonzeroPadding { offset: usize },
}

impl core::fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 line"),
            Graph6Error::BadByte { offset, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at offset {offset}")
            }
            Graph6Error::OrderTooLarge { order } => {
                write!(f, "graph6 order {order} exceeds supported maximum {MAX_ORDER}")
            }
            Graph6Error::Truncated { expected_bytes, got_bytes } => write!(
                f,
                "truncated graph6 payload: expected {expected_bytes} bytes, got {got_bytes}"
            ),
            Graph6Error::TrailingGarbage { offset } => {
                write!(f, "trailing bytes after graph6 payload at offset {offset}")
            }
            Graph6Error::NonzeroPadding { offset } => {
                write!(f, "nonzero padding bits in final graph6 byte at offset {offset}")
            }
        }
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let b = bytes[offset];
    if !(63..=126).contains(&b) {
        return Err(Graph6Error::BadByte { offset, byte: b });
    }
    Ok((b - 63) as u64)
}

/// Parses one graph6 line (trailing newline allowed).
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected_bytes: 4, got_bytes: bytes.len() });
        }
        let mut n = 0u64;
        for off in 1..4 {
            n = (n << 6) | sextet(bytes, off)?;
        }
        (n as usize, 4)
    } else {
        (sextet(bytes, 0)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { order: n });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::Truncated {
            expected_bytes: pos + nbytes,
            got_bytes: bytes.len(),
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Graph6Error::TrailingGarbage { offset: pos + nbytes });
    }

    let mut b = GraphBuilder::new(n);
    let mut bit = 0usize;
    let mut cur = 0u64;
    let mut have = 0usize;
    for v in 1..n {
        for u in 0..v {
            if have == 0 {
                cur = sextet(bytes, pos)?;
                pos += 1;
                have = 6;
            }
            if cur & (1 << (have - 1)) != 0 {
                b.add_edge(u, v);
            }
            have -= 1;
            bit += 1;
        }
    }
    debug_assert_eq!(bit, nbits);
    // Remaining bits of the final byte are padding and must be zero.
    if have > 0 && cur & ((1 << have) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding { offset: pos - 1 });
    }
    Ok(b.build())
}

/// Encodes the graph under its current labeling.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut cur = 0u8;
    let mut have = 0usize;
    for v in 1..n {
        for u in 0..v {
            cur = (cur << 1) | g.has_edge(u, v) as u8;
            have += 1;
            if have == 6 {
                out.push(63 + cur);
                cur = 0;
                have = 0;
            }
        }
    }
    if have > 0 {
        out.push(63 + (cur << (6 - have)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
