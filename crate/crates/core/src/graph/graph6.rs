//! graph6 encoding.
//!
//! `N(n)` is one byte `n + 63` for `n < 63`, else `~` followed by three
//! bytes carrying 18 bits. The upper triangle follows in column order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), …`), packed six bits per byte
//! big-endian, zero padded, each byte offset by 63. An optional `>>graph6<<`
//! header and trailing newline are accepted on input.

use super::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("malformed graph6 size header")]
    BadHeader,
    #[error("byte {byte:#04x} at position {pos} is outside the graph6 range 63..=126")]
    ByteOutOfRange { pos: usize, byte: u8 },
    #[error("graph6 input declares {0} vertices, at most 64 are supported")]
    TooManyVertices(usize),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("nonzero padding bits in the last graph6 byte")]
    NonZeroPadding,
}

const HEADER: &str = ">>graph6<<";

fn check_byte(pos: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::ByteOutOfRange { pos, byte })
    }
}

impl Graph {
    pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
        let text = text.trim_end_matches(['\n', '\r']);
        let text = text.strip_prefix(HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(Graph6Error::Empty.into());
        }
        let (n, body_start) = if bytes[0] == b'~' {
            if bytes.get(1) == Some(&b'~') {
                // 36-bit form; anything that needs it is far beyond the cap.
                return Err(Graph6Error::TooManyVertices(usize::MAX).into());
            }
            if bytes.len() < 4 {
                return Err(Graph6Error::BadHeader.into());
            }
            let mut n = 0usize;
            for (pos, &b) in bytes.iter().enumerate().take(4).skip(1) {
                n = n << 6 | check_byte(pos, b)? as usize;
            }
            if n < 63 {
                return Err(Graph6Error::BadHeader.into());
            }
            (n, 4)
        } else {
            (check_byte(0, bytes[0])? as usize, 1)
        };
        if n > MAX_VERTICES {
            return Err(Graph6Error::TooManyVertices(n).into());
        }
        if n == 0 {
            return Err(GraphError::InvalidOrder { n, max: MAX_VERTICES });
        }
        let body = &bytes[body_start..];
        let nbits = n * (n - 1) / 2;
        let expected = nbits.div_ceil(6);
        if body.len() != expected {
            return Err(Graph6Error::WrongLength { expected, found: body.len() }.into());
        }
        let mut values = Vec::with_capacity(body.len());
        for (i, &b) in body.iter().enumerate() {
            values.push(check_byte(body_start + i, b)?);
        }
        let mut g = Graph::new(n)?;
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(i, j)?;
                }
                k += 1;
            }
        }
        if let Some(&last) = values.last() {
            let pad = expected * 6 - nbits;
            if pad > 0 && last & ((1 << pad) - 1) != 0 {
                return Err(Graph6Error::NonZeroPadding.into());
            }
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = Vec::new();
        if n < 63 {
            out.push(n as u8 + 63);
        } else {
            out.push(b'~');
            for shift in [12, 6, 0] {
                out.push((n >> shift & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are ascii")
    }
}
