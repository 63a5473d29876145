//! graph6 encoding and decoding.
//!
//! The upper triangle is written column by column, `(0,1), (0,2), (1,2),
//! (0,3), ...`, packed big-endian into 6-bit groups offset by 63. Orders up to
//! 62 use a single size byte; 63 and 64 use the `~` long form.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([
            (n >> 12) as u8 + 63,
            (n >> 6 & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let offset0 = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &text.as_bytes()[offset0..];
    let at = |i: usize| offset0 + i;
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                at(i),
                format!("byte {b:#04x} outside graph6 range 63..=126"),
            ));
        }
    }
    let (n, body_start) = match bytes.first() {
        None => return Err(Error::parse(at(0), "empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(Error::parse(at(1), "orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(Error::parse(at(bytes.len()), "truncated size field"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(at(0), format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < want {
        return Err(Error::parse(
            at(bytes.len()),
            format!("expected {want} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > want {
        return Err(Error::parse(at(body_start + want), "trailing garbage"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - 63;
            if b >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[want - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Error::parse(at(body_start + want - 1), "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Parses a graph6 list: one graph per line, `#` comments and blank lines ignored.
/// Errors report the byte offset within the whole text.
pub fn parse_list(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_end_matches(['\n', '\r']);
        let lead = trimmed.len() - trimmed.trim_start().len();
        let content = trimmed.trim();
        if !content.is_empty() && !content.starts_with('#') {
            out.push(from_graph6(content).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::parse(offset + lead + o, message),
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}
