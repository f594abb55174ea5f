//! graph6 short-form encoding (orders 0..=62).
//!
//! Layout: byte 0 is `n + 63`; the upper-triangle adjacency bits
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` follow in column order, packed
//! big-endian into 6-bit groups, each group emitted as one printable byte
//! `value + 63`. Zero bits pad the last group. The optional ASCII header
//! `>>graph6<<` and one trailing newline are tolerated on input.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const HEADER: &[u8] = b">>graph6<<";
const OFFSET: u8 = 63;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("order byte {0:#04x} out of range (short form supports n <= 62)")]
    OrderByteOutOfRange(u8),
    #[error("payload byte {byte:#04x} at position {pos} is not printable graph6")]
    UnprintableByte { byte: u8, pos: usize },
    #[error("payload too short: expected {expected} bytes, got {got}")]
    PayloadTooShort { expected: usize, got: usize },
    #[error("payload too long: expected {expected} bytes, got {got}")]
    PayloadTooLong { expected: usize, got: usize },
    #[error("set bit in padding of final payload byte")]
    PaddingBitSet,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decodes one short-form graph6 graph. Vertex labels preserve graph6
/// order.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let mut data = bytes;
    if data.starts_with(HEADER) {
        data = &data[HEADER.len()..];
    }
    while let [rest @ .., b'\n' | b'\r'] = data {
        data = rest;
    }
    let (&order_byte, payload) = data.split_first().ok_or(Graph6Error::Empty)?;
    if order_byte < OFFSET || order_byte > OFFSET + MAX_VERTICES as u8 {
        return Err(Graph6Error::OrderByteOutOfRange(order_byte));
    }
    let n = (order_byte - OFFSET) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if payload.len() < expected {
        return Err(Graph6Error::PayloadTooShort {
            expected,
            got: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::PayloadTooLong {
            expected,
            got: payload.len(),
        });
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if read_bit(payload, bit)? {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    for pad in nbits..expected * 6 {
        if read_bit(payload, pad)? {
            return Err(Graph6Error::PaddingBitSet);
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn read_bit(payload: &[u8], bit: usize) -> Result<bool, Graph6Error> {
    let byte = payload[bit / 6];
    if !(OFFSET..=126).contains(&byte) {
        return Err(Graph6Error::UnprintableByte { byte, pos: bit / 6 });
    }
    let group = byte - OFFSET;
    Ok(group >> (5 - bit % 6) & 1 == 1)
}

/// Encodes a graph in short form (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = vec![OFFSET + n as u8];
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (group << (6 - filled)));
    }
    String::from_utf8(out).expect("printable range")
}

/// Parses a newline-separated graph6 corpus, skipping blank lines.
/// Returns each graph with its 0-based line position.
pub fn parse_graph6_corpus(text: &str) -> Result<Vec<(usize, Graph)>, Graph6Error> {
    let mut out = Vec::new();
    for (pos, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        out.push((pos, parse_graph6(line.as_bytes())?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphFamily};

    #[test]
    fn decode_k2() {
        let g = parse_graph6(b"A_").unwrap();
        assert_eq!(g, generate(GraphFamily::Complete(2)).unwrap());
    }

    #[test]
    fn decode_k3() {
        let g = parse_graph6(b"Bw").unwrap();
        assert_eq!(g, generate(GraphFamily::Complete(3)).unwrap());
    }

    #[test]
    fn decode_e2() {
        let g = parse_graph6(b"A?").unwrap();
        assert_eq!(g, generate(GraphFamily::Empty(2)).unwrap());
    }

    #[test]
    fn header_and_newline_tolerated() {
        let g = parse_graph6(b">>graph6<<A_\n").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn encode_spot_values() {
        assert_eq!(
            encode_graph6(&generate(GraphFamily::Complete(2)).unwrap()),
            "A_"
        );
        assert_eq!(
            encode_graph6(&generate(GraphFamily::Complete(3)).unwrap()),
            "Bw"
        );
        assert_eq!(
            encode_graph6(&generate(GraphFamily::Empty(2)).unwrap()),
            "A?"
        );
        assert_eq!(
            encode_graph6(&generate(GraphFamily::Cycle(4)).unwrap()),
            "Cl"
        );
    }

    #[test]
    fn round_trip_families() {
        for g in [
            generate(GraphFamily::Wheel(9)).unwrap(),
            generate(GraphFamily::Star(13)).unwrap(),
            generate(GraphFamily::Path(7)).unwrap(),
            generate(GraphFamily::Empty(1)).unwrap(),
            Graph::empty(0).unwrap(),
            generate(GraphFamily::Complete(12)).unwrap(),
        ] {
            assert_eq!(parse_graph6(encode_graph6(&g).as_bytes()).unwrap(), g);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(b"").unwrap_err(), Graph6Error::Empty);
        assert_eq!(
            parse_graph6(b"~??"),
            Err(Graph6Error::OrderByteOutOfRange(b'~'))
        );
        assert_eq!(
            parse_graph6(b"B"),
            Err(Graph6Error::PayloadTooShort {
                expected: 1,
                got: 0
            })
        );
        assert_eq!(
            parse_graph6(b"A__"),
            Err(Graph6Error::PayloadTooLong {
                expected: 1,
                got: 2
            })
        );
        assert!(matches!(
            parse_graph6(b"A\x20"),
            Err(Graph6Error::UnprintableByte { .. })
        ));
        // n=2 has one adjacency bit; any other set bit is padding.
        assert_eq!(parse_graph6(b"AO"), Err(Graph6Error::PaddingBitSet));
    }

    #[test]
    fn corpus_lines() {
        let text = "A_\n\nBw\n";
        let corpus = parse_graph6_corpus(text).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus[0].0, 0);
        assert_eq!(corpus[1].0, 2);
        assert_eq!(corpus[1].1.order(), 3);
    }
}
