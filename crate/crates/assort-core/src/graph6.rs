//! The standard graph6 text encoding for small graphs.
//!
//! Upper-triangle adjacency bits in column-major order, packed into 6-bit
//! groups offset by 63. Orders up to [`MAX_ORDER`](crate::MAX_ORDER) only, so
//! the order always fits a single leading byte.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Graph6Error {
    Empty,
    /// Order byte outside the supported range.
    BadOrder(u8),
    /// Wrong number of data bytes for the declared order.
    BadLength { expected: usize, got: usize },
    /// A byte outside the 63..=126 graph6 alphabet.
    BadByte(u8),
}

impl core::fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::BadOrder(b) => write!(f, "unsupported graph6 order byte {}", b),
            Graph6Error::BadLength { expected, got } => {
                write!(f, "graph6 length {} (expected {})", got, expected)
            }
            Graph6Error::BadByte(b) => write!(f, "invalid graph6 byte {}", b),
        }
    }
}

fn data_len(n: usize) -> usize {
    (n * (n - 1) / 2 + 5) / 6
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(63 + n as u8);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    let &first = bytes.first().ok_or(Graph6Error::Empty)?;
    if !(63..=63 + MAX_ORDER as u8).contains(&first) || first == 63 {
        // order 0 and the multi-byte order escape (126) are out of scope
        if first == 63 {
            return Err(Graph6Error::BadOrder(first));
        }
        return Err(Graph6Error::BadOrder(first));
    }
    let n = (first - 63) as usize;
    let data = &bytes[1..];
    if data.len() != data_len(n) {
        return Err(Graph6Error::BadLength {
            expected: data_len(n),
            got: data.len(),
        });
    }
    let mut g = Graph::new(n);
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[idx / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::BadByte(byte));
            }
            let bit = (byte - 63) >> (5 - idx % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v);
            }
            idx += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_vector() {
        // 5 vertices, edges {0,2},{0,4},{1,3},{3,4}.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1);
        assert_eq!(encode(&g), "@");
        assert_eq!(decode("@").unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("D"), Err(Graph6Error::BadLength { .. })));
        assert!(matches!(decode("D\x10\x10"), Err(Graph6Error::BadByte(_))));
        assert!(matches!(decode("~??"), Err(Graph6Error::BadOrder(_))));
    }
}
