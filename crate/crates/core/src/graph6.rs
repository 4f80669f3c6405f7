//! graph6 text encoding, as produced by nauty's `geng`.
//!
//! Orders of any size are supported through the standard multi-byte `N(n)`
//! header (1, 4 or 8 bytes). sparse6 and digraph6 lines are rejected.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
const MAX_ORDER: usize = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("sparse6 and digraph6 are not supported")]
    Unsupported,
    #[error("byte {0:#04x} is outside the printable range 63..=126")]
    OutOfRange(u8),
    #[error("truncated order header")]
    TruncatedHeader,
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits are not zero")]
    NonZeroPadding,
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored; error offsets refer to the untrimmed line.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let mut start = 0;
    if line.starts_with(HEADER) {
        start = HEADER.len();
    }
    let bytes = line.trim_end().as_bytes();
    if bytes.len() <= start {
        return Err(err(start, Graph6ErrorKind::Empty));
    }
    if matches!(bytes[start], b':' | b'&') {
        return Err(err(start, Graph6ErrorKind::Unsupported));
    }
    let value = |i: usize| -> Result<u64, Graph6Error> {
        match bytes.get(i) {
            None => Err(err(i, Graph6ErrorKind::TruncatedHeader)),
            Some(&b) if (BIAS..=126).contains(&b) => Ok((b - BIAS) as u64),
            Some(&b) => Err(err(i, Graph6ErrorKind::OutOfRange(b))),
        }
    };

    let (order, mut pos) = if bytes[start] != 126 {
        (value(start)? as usize, start + 1)
    } else if bytes.get(start + 1) != Some(&126) {
        let mut n = 0u64;
        for i in 1..=3 {
            n = (n << 6) | value(start + i)?;
        }
        (n as usize, start + 4)
    } else {
        let mut n = 0u64;
        for i in 2..=7 {
            n = (n << 6) | value(start + i)?;
        }
        (n as usize, start + 8)
    };

    let bits = order * order.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let found = bytes.len() - pos;
    if found != expected {
        return Err(err(pos + found.min(expected), Graph6ErrorKind::WrongLength { expected, found }));
    }

    let mut g = Graph::empty(order);
    let (mut i, mut j) = (0usize, 1usize);
    let mut taken = 0;
    while taken < bits {
        let chunk = value(pos)?;
        for shift in (0..6).rev() {
            if taken == bits {
                if chunk & ((1 << (shift + 1)) - 1) != 0 {
                    return Err(err(pos, Graph6ErrorKind::NonZeroPadding));
                }
                break;
            }
            if (chunk >> shift) & 1 == 1 {
                g.set_edge(i, j);
            }
            taken += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(g)
}

/// Encodes `g` as a graph6 line (no trailing newline).
///
/// # Panics
/// Panics if the order exceeds 2^36 − 1, the largest order graph6 can express.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph6 cannot encode order {n}");
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Reads every non-blank line of a graph6 stream, pairing each parse result
/// with its 1-based line number.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<(usize, Result<Graph, Graph6Error>)>> {
    reader
        .lines()
        .enumerate()
        .filter(|(_, line)| line.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(|(i, line)| line.map(|l| (i + 1, parse_graph6(&l))))
}
