//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order, six bits per printable byte (offset 63).

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 258_047;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(chunk + 63);
                chunk = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((chunk << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line; a leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn decode(line: &str) -> Result<Graph> {
    let mut bytes = line.trim_end().as_bytes();
    let mut base = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside graph6 range")));
        }
    }
    let (n, mut pos) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated vertex count"));
        }
        if bytes[1] == 126 {
            return Err(err(
                base + 1,
                format!("graphs with more than {MAX_N} vertices are not supported"),
            ));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    };
    if n == 0 {
        return Err(err(base, "graph with zero vertices"));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < need {
        return Err(err(
            base + bytes.len(),
            format!("truncated adjacency: need {need} bytes, found {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(err(base + pos + need, "trailing bytes after adjacency"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

/// Decodes every non-blank line of a graph6 file.
pub fn decode_all(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            out.push(decode(line).map_err(|e| match e {
                Error::Graph6 { offset: o, message } => Error::Graph6 {
                    offset: offset + o,
                    message,
                },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}
