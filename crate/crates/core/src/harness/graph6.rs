//! graph6 encoding (McKay's format) for graphs on at most 64 vertices.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, else `126` followed by three
//! bytes of 6 bits each. The upper triangle follows in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ..`, packed six bits per byte
//! (most significant first), zero padded, each byte offset by 63.

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} is outside the graph6 range 63..=126")]
    BadChar { pos: usize, byte: u8 },
    #[error("graph6 body has {got} bytes, {expected} expected")]
    Length { expected: usize, got: usize },
    #[error("padding bits in the last byte are not zero")]
    TrailingBits,
    #[error("graph6 order {0} exceeds the 64 vertex limit")]
    TooLarge(u64),
}

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let text = line.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadChar { pos, byte });
        }
    }
    let (n, body) = if bytes[0] != 126 {
        (u64::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::Length { expected: 8, got: bytes.len() });
        }
        let n = bytes[2..8].iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - 63));
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Length { expected: 4, got: bytes.len() });
        }
        let n = bytes[1..4].iter().fold(0u64, |acc, &b| acc << 6 | u64::from(b - 63));
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length { expected, got: body.len() });
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::TrailingBits);
        }
    }
    Ok(Graph::from_adjacency(adj).expect("graph6 decoding yields a simple graph"))
}

/// Encodes a graph as graph6, without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        assert_eq!(write_graph6(&Graph::empty(5)), "D??");
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5));
        assert_eq!(write_graph6(&Graph::complete(2)), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn petgraph_fixture() {
        // Edges a-c, a-e, b-d, d-e on five vertices.
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn petersen_matches_reference() {
        // Outer cycle 0..5, spokes i-(i+5), inner pentagram; same labelling
        // as the networkx generator, whose encoding this is.
        assert_eq!(write_graph6(&Graph::petersen()), "IheA@GUAo");
        assert_eq!(parse_graph6("IheA@GUAo").unwrap(), Graph::petersen());
    }

    #[test]
    fn long_form_orders() {
        for n in [63, 64] {
            let g = Graph::complete(n);
            let s = write_graph6(&g);
            assert!(s.starts_with('~'));
            if n == 63 {
                assert!(s.starts_with("~??~~~"));
            }
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn malformed() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("D?"), Err(Graph6Error::Length { expected: 2, got: 1 }));
        assert_eq!(parse_graph6("D???"), Err(Graph6Error::Length { expected: 2, got: 3 }));
        assert!(matches!(parse_graph6("D? ?"), Err(Graph6Error::BadChar { pos: 2, .. })));
        // K2 body "_" = 100000; "`" = 100001 sets a padding bit.
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::TrailingBits));
        assert_eq!(parse_graph6("~?@@"), Err(Graph6Error::TooLarge(65)));
    }
}
