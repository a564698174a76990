//! Interchange formats: the graph6 text encoding (bit-exact) and a plain
//! edge-list format for human-authored fixtures.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by
//! column (`x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...`) into 6-bit groups,
//! each stored as one printable byte offset by 63. The order `n` is
//! encoded in 1, 4, or 8 leading bytes depending on magnitude.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;
const MAX_LONG: usize = 68_719_476_735; // 2^36 - 1

fn push_sextets(out: &mut Vec<u8>, value: usize, count: usize) {
    for i in (0..count).rev() {
        out.push(OFFSET + ((value >> (6 * i)) & 0x3f) as u8);
    }
}

/// Encodes a graph as a graph6 byte string (always printable ASCII).
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_LONG, "graph6 supports orders below 2^36");
    let mut out = Vec::new();
    if n <= MAX_SHORT {
        out.push(OFFSET + n as u8);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        push_sextets(&mut out, n, 3);
    } else {
        out.push(126);
        out.push(126);
        push_sextets(&mut out, n, 6);
    }
    let mut group = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(OFFSET + group);
                group = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(OFFSET + (group << (6 - used)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<usize> {
    let b = *bytes.get(offset).ok_or_else(|| Error::Graph6 {
        offset,
        reason: "truncated input".into(),
    })?;
    if !(OFFSET..=126).contains(&b) {
        return Err(Error::Graph6 {
            offset,
            reason: format!("byte 0x{b:02x} outside the printable graph6 range"),
        });
    }
    Ok((b - OFFSET) as usize)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "empty input".into(),
        });
    }
    if bytes[0] != 126 {
        return Ok((sextet(bytes, 0)?, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        let mut n = 0usize;
        for k in 0..6 {
            n = (n << 6) | sextet(bytes, 2 + k)?;
        }
        if n <= MAX_MEDIUM {
            return Err(Error::Graph6 {
                offset: 0,
                reason: "non-canonical long order encoding".into(),
            });
        }
        Ok((n, 8))
    } else {
        let mut n = 0usize;
        for k in 0..3 {
            n = (n << 6) | sextet(bytes, 1 + k)?;
        }
        if n <= MAX_SHORT {
            return Err(Error::Graph6 {
                offset: 0,
                reason: "non-canonical medium order encoding".into(),
            });
        }
        Ok((n, 4))
    }
}

/// Decodes a graph6 byte string, reporting the byte offset of the first
/// malformed byte. Trailing padding bits must be zero and the length must
/// match the encoded order exactly.
pub fn graph6_decode(bytes: &[u8]) -> Result<Graph> {
    let (n, header) = decode_order(bytes)?;
    let bits = n * (n.saturating_sub(1)) / 2;
    let body = bits.div_ceil(6);
    if bytes.len() > header + body {
        return Err(Error::Graph6 {
            offset: header + body,
            reason: "trailing bytes after adjacency data".into(),
        });
    }
    let mut edges = Vec::new();
    let mut idx = 0usize;
    let mut pair = {
        let mut pairs = Vec::with_capacity(bits);
        for j in 1..n {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        pairs.into_iter()
    };
    for k in 0..body {
        let value = sextet(bytes, header + k)?;
        for shift in (0..6).rev() {
            let bit = (value >> shift) & 1;
            if idx < bits {
                if bit == 1 {
                    edges.push(pair.next().unwrap());
                } else {
                    pair.next();
                }
            } else if bit == 1 {
                return Err(Error::Graph6 {
                    offset: header + k,
                    reason: "nonzero padding bits".into(),
                });
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Formats a graph in the plain edge-list fixture format: the order on the
/// first line, one `u v` pair per following line.
pub fn edge_list_format(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the plain edge-list fixture format.
pub fn edge_list_parse(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, first) = lines.next().ok_or_else(|| Error::EdgeList {
        line: 1,
        reason: "missing order line".into(),
    })?;
    let n: usize = first.trim().parse().map_err(|_| Error::EdgeList {
        line: 1,
        reason: format!("expected a vertex count, got {first:?}"),
    })?;
    let mut edges = Vec::new();
    for (i, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.ok_or_else(|| Error::EdgeList {
                line: i + 1,
                reason: "expected two endpoints".into(),
            })?
            .parse()
            .map_err(|_| Error::EdgeList {
                line: i + 1,
                reason: format!("bad vertex in {line:?}"),
            })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::EdgeList {
                line: i + 1,
                reason: "more than two tokens".into(),
            });
        }
        if u == v {
            return Err(Error::EdgeList {
                line: i + 1,
                reason: format!("self-loop ({u}, {v})"),
            });
        }
        if u >= n || v >= n {
            return Err(Error::EdgeList {
                line: i + 1,
                reason: format!("edge ({u}, {v}) out of range for order {n}"),
            });
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}
