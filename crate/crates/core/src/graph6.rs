//! graph6 encoding (short form, order ≤ 62).
//!
//! The header byte is `63 + n`; the upper triangle of the adjacency matrix is
//! then written column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits
//! per byte, each byte offset by 63, with zero padding at the end.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn parse_err<T>(offset: usize, reason: impl Into<String>) -> Result<T> {
    Err(Error::Parse { offset, reason: reason.into() })
}

/// Decodes a single graph6 line. A trailing line terminator is ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&first) = bytes.first() else {
        return parse_err(0, "empty input");
    };
    if !(63..=126).contains(&first) {
        return parse_err(0, format!("byte {first:#04x} outside the graph6 range 63..=126"));
    }
    if first == 126 {
        return parse_err(0, format!("long-form order header (graphs above {MAX_ORDER} vertices are unsupported)"));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < body_len {
        return parse_err(bytes.len(), format!("truncated: expected {} bytes, found {}", body_len + 1, bytes.len()));
    }
    if body.len() > body_len {
        return parse_err(1 + body_len, "trailing bytes after the adjacency field");
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return parse_err(1 + i, format!("byte {b:#04x} outside the graph6 range 63..=126"));
        }
        let val = b - 63;
        for shift in (0..6).rev() {
            let bit = val >> shift & 1 == 1;
            if k >= bits {
                if bit {
                    return parse_err(1 + i, "non-zero padding bit");
                }
            } else if bit {
                let (row, col) = triangle_position(k);
                edges.push((row, col));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Maps a bit index to the matrix position `(i, j)` with `i < j`, column-major.
fn triangle_position(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

/// Encodes a graph; fails for orders above 62.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut out = String::with_capacity(1 + (n * n / 12) + 1);
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut count = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            count += 1;
            if count == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                count = 0;
            }
        }
    }
    if count > 0 {
        out.push(((acc << (6 - count)) + 63) as char);
    }
    Ok(out)
}

/// One record of a graph6 stream: the 1-based line number, the raw text, and the graph.
#[derive(Clone, Debug)]
pub struct Graph6Record {
    pub line: usize,
    pub text: String,
    pub graph: Graph,
}

/// Failure while reading a graph6 stream.
#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Error },
    #[error("read failure: {0}")]
    Io(#[from] std::io::Error),
}

/// Reads one graph per line. Blank lines are skipped and a leading
/// `>>graph6<<` header is stripped.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = std::result::Result<Graph6Record, ReadError>> {
    reader.lines().enumerate().filter_map(|(i, line)| {
        let line_no = i + 1;
        let raw = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(ReadError::Io(e))),
        };
        let text = raw.strip_prefix(HEADER).unwrap_or(&raw).trim_end();
        if text.is_empty() {
            return None;
        }
        Some(
            parse_graph6(text)
                .map(|graph| Graph6Record { line: line_no, text: text.to_string(), graph })
                .map_err(|source| ReadError::Parse { line: line_no, source }),
        )
    })
}

/// Reads a whole stream, stopping at the first malformed line.
pub fn read_all_graph6<R: BufRead>(reader: R) -> std::result::Result<Vec<Graph6Record>, ReadError> {
    read_graph6(reader).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k4_round_trip() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 6);
        assert_eq!(to_graph6(&g).unwrap(), "C~");
    }

    #[test]
    fn tiny_orders() {
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        assert_eq!(to_graph6(&Graph::new(2, [(0, 1)]).unwrap()).unwrap(), "A_");
    }

    #[test]
    fn petersen_known_encoding() {
        // the usual nauty rendering of the Petersen graph
        let g = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 15);
        assert!(g.is_cubic());
    }

    #[test]
    fn malformed_inputs_name_the_offset() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("C"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6("C "), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6(" "), Err(Error::Parse { offset: 0, .. })));
        // order 3 uses 3 bits; the low three bits of the byte are padding
        assert!(matches!(parse_graph6("B@"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn stream_reader_skips_header_and_blank_lines() {
        let text = ">>graph6<<C~\n\nA_\r\n";
        let recs = read_all_graph6(text.as_bytes()).unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].line, 1);
        assert_eq!(recs[1].line, 3);
        assert_eq!(recs[1].text, "A_");
    }

    #[test]
    fn stream_reader_reports_line_numbers() {
        let err = read_all_graph6("C~\nC~x\n".as_bytes()).unwrap_err();
        assert!(matches!(err, ReadError::Parse { line: 2, .. }));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=20).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn graph6_round_trips(g in arb_graph()) {
            let s = to_graph6(&g).unwrap();
            let h = parse_graph6(&s).unwrap();
            prop_assert_eq!(&h, &g);
            prop_assert_eq!(to_graph6(&h).unwrap(), s);
        }
    }

    #[test]
    fn max_order_round_trip() {
        let n = MAX_ORDER;
        let g = Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
    }
}
