//! graph6 encoding (short form, up to 62 vertices).
//!
//! The upper triangle is read column by column — `(0,1), (0,2), (1,2),
//! (0,3), ...` — six bits to a byte, each byte offset by 63.

use crate::error::{Error, Result};
use crate::subset::Subset;

use super::Graph;

const MAX_SHORT_N: usize = 62;
const HEADER: &str = ">>graph6<<";

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 { offset, reason: reason.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    let (&first, data) = bytes.split_first().ok_or_else(|| malformed(base, "empty input"))?;
    if first == 126 {
        return Err(malformed(base, "long form (n > 62) is not supported"));
    }
    if !(63..=125).contains(&first) {
        return Err(malformed(base, format!("byte {first} is not a size byte")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::EmptyGround);
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if data.len() < need {
        return Err(malformed(base + 1 + data.len(), format!("truncated: expected {need} data bytes")));
    }
    if data.len() > need {
        return Err(malformed(base + 1 + need, "trailing bytes"));
    }
    let mut adj = vec![Subset::EMPTY; n];
    let mut k = 0;
    for (pos, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(base + 1 + pos, format!("byte {b} out of range")));
        }
        let word = b - 63;
        for shift in (0..6).rev() {
            let set = (word >> shift) & 1 == 1;
            if k >= bits {
                if set {
                    return Err(malformed(base + 1 + pos, "nonzero padding bits"));
                }
                continue;
            }
            if set {
                let (i, j) = pair_at(k);
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

// k-th bit of the column-wise upper triangle
fn pair_at(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.len();
    assert!(n <= MAX_SHORT_N, "graph6 short form holds at most {MAX_SHORT_N} vertices");
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((word + 63) as char);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((word << (6 - filled)) + 63) as char);
    }
    out
}
