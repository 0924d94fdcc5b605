//! graph6 encoding and decoding.
//!
//! A record is the vertex count `N(n)` followed by the upper triangle of the
//! adjacency matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, most significant bit first, each byte offset by 63.
//! Padding bits must be zero so that decoding then encoding is the identity.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{Error, Result};

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;

fn err(offset: usize, reason: &'static str) -> Error {
    Error::Graph6 { offset, reason }
}

pub fn to_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= SHORT_MAX {
        out.push(BIAS + n as u8);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(BIAS + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(BIAS + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    out
}

pub fn to_graph6_string(g: &Graph) -> alloc::string::String {
    // All bytes are in 63..=126, so this is always ASCII.
    alloc::string::String::from_utf8(to_graph6(g)).expect("graph6 is ASCII")
}

/// Parse one graph6 record. Trailing `\n` / `\r\n` is accepted; anything else
/// after the payload is an error.
pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let mut text = text;
    while let Some((&last, rest)) = text.split_last() {
        if last == b'\n' || last == b'\r' {
            text = rest;
        } else {
            break;
        }
    }
    if text.is_empty() {
        return Err(err(0, "empty record"));
    }
    match text[0] {
        b':' => return Err(err(0, "sparse6 records are not supported")),
        b'&' => return Err(err(0, "digraph6 records are not supported")),
        _ => {}
    }
    for (i, &b) in text.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
    }

    let (n, header) = if text[0] != 126 {
        ((text[0] - BIAS) as usize, 1)
    } else if text.len() >= 2 && text[1] != 126 {
        if text.len() < 4 {
            return Err(err(text.len(), "truncated 18-bit vertex count"));
        }
        let n = text[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n <= SHORT_MAX {
            return Err(err(0, "vertex count below 63 must use the one-byte header"));
        }
        (n, 4)
    } else {
        if text.len() < 8 {
            return Err(err(text.len(), "truncated 36-bit vertex count"));
        }
        let n = text[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n <= MEDIUM_MAX || n > LONG_MAX {
            return Err(err(0, "vertex count does not match the 8-byte header"));
        }
        (n, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let payload = &text[header..];
    if payload.len() < need {
        return Err(err(text.len(), "truncated adjacency payload"));
    }
    if payload.len() > need {
        return Err(err(header + need, "trailing bytes after adjacency payload"));
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = payload[need - 1] - BIAS;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(header + need - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}
