//! Plain-text edge lists: a header line `n m`, then `m` lines `u v`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses one edge list. `first_line` is the 1-based line number of the
/// header, used for error messages.
pub(crate) fn parse_edge_list<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<Option<Graph>> {
    let (hline, header) = match lines.find(|(_, l)| !l.trim().is_empty()) {
        Some(x) => x,
        None => return Ok(None),
    };
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let (lno, text) = lines.next().ok_or_else(|| Error::Parse {
            line: hline + k + 1,
            content: String::new(),
            message: format!("expected {m} edge lines after header, got {k}"),
        })?;
        let (u, v) = parse_pair(lno, text)?;
        edges.push((u, v));
    }
    Graph::new(n, edges)
        .map(Some)
        .map_err(|e| Error::Parse { line: hline, content: header.to_string(), message: e.to_string() })
}

pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    parse_edge_list(&mut lines)?.ok_or_else(|| Error::Parse {
        line: 1,
        content: String::new(),
        message: "empty edge list".into(),
    })
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let bad = |message: &str| Error::Parse { line, content: text.to_string(), message: message.to_string() };
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(bad("expected two non-negative integers")),
    }
}

/// Whether a line looks like an edge-list header rather than graph6.
pub(crate) fn looks_like_header(line: &str) -> bool {
    let mut it = line.split_whitespace();
    matches!(
        (it.next(), it.next(), it.next()),
        (Some(a), Some(b), None) if a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::petersen();
        assert_eq!(read_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = read_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = read_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = read_edge_list("3 1\n0 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");
    }
}
