//! The graph6 text encoding.
//!
//! A size prefix (one byte `63 + n` for `n <= 62`, or `~` followed by three
//! 6-bit bytes for `n <= 258047`), then the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian six bits per
//! byte, each byte offset by 63, zero padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the four-byte size prefix can express.
pub const MAX_ORDER: usize = 258_047;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { n, max: MAX_ORDER });
    }
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | row.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(format!(
            "byte {} at offset {pos} is outside the printable range 63..=126",
            bytes[pos]
        )));
    }

    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::TooLarge { n: MAX_ORDER + 1, max: MAX_ORDER });
    } else if bytes.len() < 4 {
        return Err(err("truncated size prefix"));
    } else {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() < want {
        return Err(err(format!(
            "truncated data: n={n} needs {want} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > want {
        return Err(err(format!(
            "trailing data: n={n} needs {want} data bytes, found {}",
            body.len()
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}
