//! graph6 encoding for orders up to 62.
//!
//! Header byte `n + 63`, then the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed big-endian six bits per byte,
//! each byte offset by 63 and the last one zero-padded.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const PREFIX: &str = ">>graph6<<";

fn parse_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(PREFIX) {
        Some(rest) => (PREFIX.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !b.is_ascii()) {
        return Err(parse_err(skip + pos, "non-ASCII byte"));
    }
    let Some(&header) = bytes.first() else {
        return Err(parse_err(skip, "empty input"));
    };
    if !(63..=126).contains(&header) {
        return Err(parse_err(skip, format!("header byte {header} outside 63..=126")));
    }
    if header == 126 {
        return Err(Error::UnsupportedOrder { op: "from_graph6", n: MAX_ORDER + 1, max: MAX_ORDER });
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(parse_err(skip, "order 0 graph"));
    }

    let nbits = n * (n - 1) / 2;
    let want = nbits.div_ceil(6);
    let payload = &bytes[1..];
    if payload.len() < want {
        return Err(parse_err(skip + bytes.len(), format!("truncated payload: {} of {want} bytes", payload.len())));
    }
    if payload.len() > want {
        return Err(parse_err(skip + 1 + want, format!("trailing bytes after {want}-byte payload")));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for (idx, &b) in payload.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(skip + 1 + idx, format!("payload byte {b} outside 63..=126")));
        }
        let six = b - 63;
        for shift in (0..6).rev() {
            let bit = six >> shift & 1 == 1;
            if k >= nbits {
                if bit {
                    return Err(parse_err(skip + 1 + idx, "non-zero padding bit"));
                }
            } else if bit {
                let (i, j) = pair_at(k);
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedOrder { op: "to_graph6", n, max: MAX_ORDER });
    }
    let nbits = n * (n - 1) / 2;
    let mut out = String::with_capacity(1 + nbits.div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Position `k` of the column-major upper triangle as `(i, j)` with `i < j`.
fn pair_at(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}
