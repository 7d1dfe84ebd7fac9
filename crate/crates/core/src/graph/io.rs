//! Edge-list and graph6 text formats.
//!
//! Edge lists hold one `u v` pair per line. `#` starts a comment; a line with
//! a single id declares that vertex (useful for trailing isolated vertices).
//! The graph has `1 + max id` vertices.

use std::collections::BTreeMap;

use super::{Graph, MAX_VERTICES};
use crate::{Error, Result};

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a nonnegative vertex id, found {tok:?}"),
    })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (line, toks) in content_lines(text) {
        match toks.as_slice() {
            [v] => {
                let v = parse_id(v, line)?;
                n = n.max(v + 1);
            }
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                n = n.max(u.max(v) + 1);
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `u v`, found {} tokens", toks.len()),
                })
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Edge list with arbitrary vertex labels. Labels are numbered in order of
/// first appearance; the returned vector maps new ids back to labels.
pub fn from_labeled_edge_list(text: &str) -> Result<(Graph, Vec<String>)> {
    let mut ids: BTreeMap<String, usize> = BTreeMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    let mut intern = |tok: &str| -> usize {
        *ids.entry(tok.to_string()).or_insert_with(|| {
            labels.push(tok.to_string());
            labels.len() - 1
        })
    };
    for (line, toks) in content_lines(text) {
        match toks.as_slice() {
            [v] => {
                intern(v);
            }
            [u, v] => {
                if u == v {
                    return Err(Error::Parse {
                        line,
                        msg: format!("self-loop at {u}"),
                    });
                }
                let (a, b) = (intern(u), intern(v));
                edges.push((a, b));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `u v`, found {} tokens", toks.len()),
                })
            }
        }
    }
    let g = Graph::from_edges(labels.len(), edges)?;
    Ok((g, labels))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let mut covered_last = false;
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
        covered_last |= v + 1 == g.n();
    }
    if g.n() > 0 && !covered_last {
        out.push_str(&format!("{}\n", g.n() - 1));
    }
    out
}

const G6_BIAS: u8 = 63;

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + G6_BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + G6_BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + G6_BIAS);
        }
    }
}

/// Standard graph6 encoding, without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + G6_BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + G6_BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn g6_value(b: u8) -> Result<usize> {
    if !(63..=126).contains(&b) {
        return Err(Error::Graph6(format!("invalid character {:?}", b as char)));
    }
    Ok((b - G6_BIAS) as usize)
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let (n, body) = if bytes[0] != 126 {
        (g6_value(bytes[0])?, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | g6_value(b)?;
        }
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | g6_value(b)?;
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::cap("vertex count", MAX_VERTICES as u64, n as u64));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Error::Graph6(format!(
            "truncated payload: {} of {need} data bytes",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after payload",
            body.len() - need
        )));
    }
    let values = body.iter().map(|&b| g6_value(b)).collect::<Result<Vec<_>>>()?;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}
