//! Text encodings: graph6 and 1-based edge lists.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ..`) into 6-bit groups offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63].map(|b| b + 63));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!(
            "byte {b:#04x} is not a graph6 character"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [126, 126, ..] => {
            return Err(Error::Capacity {
                needed: 258048,
                limit: MAX_VERTICES,
            })
        }
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(Error::Parse("truncated graph6 size field".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            needed: n,
            limit: MAX_VERTICES,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {want} for {n} vertices",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    Graph::with_vertices(n, &edges)
}

/// One `u v` pair per line, 1-based.
pub fn to_edge_list(g: &Graph) -> String {
    g.edges()
        .iter()
        .map(|e| format!("{} {}\n", e.u + 1, e.v + 1))
        .collect()
}

/// Parses `u v` lines (1-based); blank lines and `#` comments are skipped.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Vec<&str> = line.split_whitespace().collect();
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {}: `{t}` is not a vertex label", no + 1)))
        };
        let [a, b] = nums[..] else {
            return Err(Error::Parse(format!(
                "line {}: expected two vertex labels",
                no + 1
            )));
        };
        let (a, b) = (parse(a)?, parse(b)?);
        if a == 0 || b == 0 {
            return Err(Error::Parse(format!("line {}: labels are 1-based", no + 1)));
        }
        if a == b {
            return Err(Error::Parse(format!("line {}: loop at {a}", no + 1)));
        }
        if a.max(b) > MAX_VERTICES {
            return Err(Error::Capacity {
                needed: a.max(b),
                limit: MAX_VERTICES,
            });
        }
        edges.push(Edge::new(a - 1, b - 1));
    }
    Graph::from_edges(&edges)
}

/// Reads either format, deciding by the first non-blank byte: a digit or
/// `#` means edge list, anything else graph6. Empty input is the empty graph.
pub fn parse_autodetect(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    match trimmed.bytes().next() {
        None => Graph::empty(0),
        Some(b) if b.is_ascii_digit() || b == b'#' => from_edge_list(trimmed),
        Some(_) => {
            let first = trimmed.lines().next().unwrap_or("").trim();
            from_graph6(first)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ext;

    #[test]
    fn graph6_reference_strings() {
        // Standard reference encodings.
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
        // 5 vertices, edges 0-2 0-4 1-3 3-4.
        let g = Graph::from_edges(&[
            Edge::new(0, 2),
            Edge::new(0, 4),
            Edge::new(1, 3),
            Edge::new(3, 4),
        ])
        .unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn graph6_long_size_field() {
        let g = Graph::path(63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn edge_list_round_trip_and_autodetect() {
        let g = ext(&[(1, 2), (1, 3), (2, 3), (1, 4)]);
        assert_eq!(to_edge_list(&g), "1 2\n1 3\n1 4\n2 3\n");
        assert_eq!(parse_autodetect(&to_edge_list(&g)).unwrap(), g);
        assert_eq!(parse_autodetect(&to_graph6(&g)).unwrap(), g);
        assert_eq!(
            parse_autodetect("# comment\n1 2\n").unwrap(),
            Graph::complete(2).unwrap()
        );
        assert!(from_edge_list("1 1\n").is_err());
        assert!(from_edge_list("0 1\n").is_err());
        assert!(from_edge_list("1 2\n2 1\n").is_err());
        assert!(from_edge_list("1 64\n").is_err());
    }
}
