//! graph6 encoding for orders below 63.
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency matrix
//! read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! big-endian into 6-bit groups, zero padded, each group offset by 63.

use crate::error::{Error, Result};
use crate::tree::Tree;

const OFFSET: u8 = 63;
const MAX_SHORT: usize = 62;

fn parse_err(message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        message: message.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Tree> {
    let bytes = text.trim().as_bytes();
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| parse_err("empty graph6 string"))?;
    if first == 126 {
        return Err(Error::UnsupportedLongForm);
    }
    if !(OFFSET..126).contains(&first) {
        return Err(parse_err(format!("bad size byte {first}")));
    }
    let n = (first - OFFSET) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(format!(
            "expected {expected} data bytes for n={n}, got {}",
            body.len()
        )));
    }
    let mut data = Vec::with_capacity(body.len());
    for &c in body {
        if !(OFFSET..=OFFSET + 63).contains(&c) {
            return Err(parse_err(format!("byte {c} outside the graph6 range")));
        }
        data.push(c - OFFSET);
    }
    let bit = |k: usize| (data[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(parse_err("nonzero padding bits"));
    }
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
    if n == 0 {
        return Err(Error::NotATree("empty graph".into()));
    }
    Tree::new(n, &edges)
}

pub fn emit_graph6(t: &Tree) -> Result<String> {
    let n = t.order();
    if n > MAX_SHORT {
        return Err(Error::UnsupportedLongForm);
    }
    let bits = n * (n - 1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if t.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + data.len());
    out.push((n as u8 + OFFSET) as char);
    out.extend(data.into_iter().map(|d| (d + OFFSET) as char));
    Ok(out)
}
