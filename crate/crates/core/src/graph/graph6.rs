//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per printable byte (value + 63).

use super::Graph;
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    let b = *bytes
        .get(offset)
        .ok_or_else(|| parse_err(offset, "unexpected end of input"))?;
    if !(63..=126).contains(&b) {
        return Err(parse_err(
            offset,
            format!("byte {b:#04x} outside the graph6 range"),
        ));
    }
    Ok(b - BIAS)
}

/// Parses one graph6 line. A trailing newline is accepted; the optional
/// `>>graph6<<` header is not.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(0, "empty input"));
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (usize::from(sextet(bytes, 0)?), 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for k in 1..4 {
            n = (n << 6) | usize::from(sextet(bytes, k)?);
        }
        if n < 63 {
            return Err(parse_err(1, "non-canonical size header"));
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for k in 2..8 {
            n = (n << 6) | usize::from(sextet(bytes, k)?);
        }
        if n < 258048 {
            return Err(parse_err(2, "non-canonical size header"));
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        let offset = bytes.len().min(expected);
        return Err(parse_err(
            offset,
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                bytes.len()
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                cur = sextet(bytes, pos)?;
                pos += 1;
            }
            if (cur >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let pad = 6 - k % 6;
        if cur & ((1 << pad) - 1) != 0 {
            return Err(parse_err(pos - 1, "nonzero padding bits"));
        }
    }
    Graph::new(n, &edges)
}
