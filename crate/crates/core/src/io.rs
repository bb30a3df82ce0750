//! Text formats: a plain edge list and graph6.
//!
//! Edge list: first non-blank line holds `n`, every following non-blank line
//! holds one `u v` pair (0-based, whitespace separated). Lines starting with
//! `#` are ignored.

use crate::error::{Error, Location, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::Argument(format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => write_edge_list(g),
        Format::Graph6 => write_graph6(g),
    }
}

/// Guesses the format: a first non-blank line that is a bare integer means
/// edge list, anything else is read as graph6.
pub fn detect_format(text: &str) -> Format {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.parse::<usize>().is_ok() => Format::EdgeList,
        _ => Format::Graph6,
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        location: Location::Line(line),
        message: message.into(),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing vertex count"))?;
    let n: usize = header.parse().map_err(|_| {
        parse_err(
            hline,
            format!("malformed header {header:?}, expected vertex count"),
        )
    })?;

    let mut g = Graph::new(n);
    for (lineno, line) in lines {
        let mut fields = line.split_whitespace();
        let mut vertex = || -> Result<usize> {
            let tok = fields
                .next()
                .ok_or_else(|| parse_err(lineno, "expected two vertex ids"))?;
            let v: usize = tok
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad vertex id {tok:?}")))?;
            if v >= n {
                return Err(parse_err(lineno, format!("vertex {v} out of range 0..{n}")));
            }
            Ok(v)
        };
        let u = vertex()?;
        let v = vertex()?;
        if fields.next().is_some() {
            return Err(parse_err(lineno, "trailing fields after edge"));
        }
        if u == v {
            return Err(parse_err(lineno, format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(lineno, format!("duplicate edge {u} {v}")));
        }
        g.insert_edge(u, v);
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        location: Location::Offset(offset),
        message: message.into(),
    }
}

/// Parses one graph6 record; an optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    if body.is_empty() {
        return Err(g6_err(base, "empty graph6 string"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=BIAS + 63).contains(&b) {
            return Err(g6_err(
                base + i,
                format!("byte {b:#04x} outside graph6 range"),
            ));
        }
    }
    let sixbits = |i: usize| (body[i] - BIAS) as usize;
    let need = |len: usize| -> Result<()> {
        if body.len() < len {
            Err(g6_err(base + body.len(), "truncated vertex count"))
        } else {
            Ok(())
        }
    };

    let (n, mut pos) = if body[0] != 126 {
        (sixbits(0), 1)
    } else if body.len() > 1 && body[1] == 126 {
        need(8)?;
        ((2..8).fold(0, |acc, i| acc << 6 | sixbits(i)), 8)
    } else {
        need(4)?;
        ((1..4).fold(0, |acc, i| acc << 6 | sixbits(i)), 4)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(
            base + body.len().min(expected),
            format!(
                "expected {} bytes for {n} vertices, found {}",
                expected,
                body.len()
            ),
        ));
    }

    let mut g = Graph::new(n);
    let mut k = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            if k == bits {
                break 'outer;
            }
            let byte = sixbits(pos + k / 6);
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(u, v);
            }
            k += 1;
        }
    }
    pos += bits.div_ceil(6);
    debug_assert_eq!(pos, body.len());
    Ok(g)
}

/// Encodes `g` as graph6 (no header, no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_path() {
        let g = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_list_edgeless() {
        let g = parse_edge_list("2\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        let cases = [
            ("x\n0 1", 1),
            ("3\n0 1\n0 3", 3),
            ("3\n0 1\n\n1 0", 4),
            ("3\n2 2", 2),
            ("3\n0", 2),
        ];
        for (text, line) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { location, .. }) => {
                    assert_eq!(location, Location::Line(line), "{text:?}")
                }
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(parse_edge_list("").is_err());
    }

    // Reference strings produced by networkx.to_graph6_bytes(header=False).
    #[test]
    fn graph6_reference_strings() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.n(), k4.edge_count()), (4, 6));
        assert!(k4.is_complete());
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");

        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6(">>graph6<<DQc\n").unwrap(), g);

        assert_eq!(write_graph6(&Graph::new(0)), "?");
        assert_eq!(write_graph6(&Graph::new(1)), "@");
    }

    #[test]
    fn graph6_large_vertex_count() {
        let mut g = Graph::new(100);
        g.insert_edge(0, 99);
        g.insert_edge(50, 51);
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(
            parse_graph6("C~~"),
            Err(Error::Parse {
                location: Location::Offset(_),
                ..
            })
        ));
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C\x01").is_err());
        assert!(parse_graph6("~?").is_err());
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("3\n0 1\n"), Format::EdgeList);
        assert_eq!(detect_format("C~\n"), Format::Graph6);
        // a single digit is both a valid header and a graph6 byte; the
        // edge list reading wins
        assert_eq!(detect_format("7"), Format::EdgeList);
    }
}
