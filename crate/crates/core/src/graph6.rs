//! graph6 reader and writer, short form only (`N <= 62`).

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
pub const MAX_SHORT_ORDER: usize = 62;

fn bits_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let body = line.trim();
    let body = body.strip_prefix(HEADER).unwrap_or(body).as_bytes();
    let bad = |msg: String| Error::parse(1, msg);
    let (&first, rest) = body.split_first().ok_or_else(|| bad("empty graph6 line".into()))?;
    if first == 126 {
        return Err(bad("long-form graph6 (N > 62) is not supported".into()));
    }
    if !(63..=125).contains(&first) {
        return Err(bad(format!("invalid order byte {first:#04x}")));
    }
    let n = usize::from(first - 63);
    if rest.len() != bits_len(n) {
        return Err(bad(format!(
            "expected {} data bytes for N = {n}, found {}",
            bits_len(n),
            rest.len()
        )));
    }
    if let Some(&b) = rest.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(bad(format!("invalid data byte {b:#04x}")));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_zero_based(n, edges, [])
}

/// Encodes a loop-free graph with at most 62 vertices.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > MAX_SHORT_ORDER {
        return Err(Error::InvalidParameter(format!("graph6 short form needs N <= 62, got {n}")));
    }
    if g.loops().next().is_some() {
        return Err(Error::InvalidParameter("graph6 cannot encode loops".into()));
    }
    let mut data = vec![0u8; bits_len(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push(char::from(n as u8 + 63));
    out.extend(data.into_iter().map(|b| char::from(b + 63)));
    Ok(out)
}
