//! graph6 codec for graphs on at most 62 vertices (single-byte size header).

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#04x} at offset {1} is outside 63..=126")]
    BadByte(u8, usize),
    #[error("vertex count {0} not supported (1..={MAX_VERTICES})")]
    VertexCount(usize),
    #[error("expected {expected} bytes for n = {n}, found {found}")]
    Length {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-zero padding bits")]
    Padding,
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encodes `g` in graph6: header byte `n + 63`, then the upper triangle
/// column by column, six bits per byte, zero padded.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push((n + 63) as u8);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b, i));
        }
    }
    let n = (head - 63) as usize;
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(Graph6Error::VertexCount(n));
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected,
            found: body.len(),
        });
    }
    let mut rows = [0u64; MAX_VERTICES];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1u64 << j;
                rows[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - k % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    Ok(Graph::from_rows(n, &rows))
}
