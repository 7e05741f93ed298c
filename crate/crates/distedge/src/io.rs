//! File formats: DIMACS-style edge lists and colouring files.
//!
//! Edge list: a header `p edge <n> <m>` followed by `m` lines `e <u> <v>`
//! with 1-based vertex numbers. Comment lines starting with `c` are accepted
//! when reading and never emitted. The writer emits edges in id order, so a
//! round trip preserves edge ids exactly.
//!
//! Colouring file: one line `<edge-id> <colour>` per edge, 0-based.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                if fields.next() != Some("edge") {
                    return Err(parse_err(lineno, "expected `p edge <n> <m>`"));
                }
                let n = parse_field(lineno, fields.next(), "vertex count")?;
                let m = parse_field(lineno, fields.next(), "edge count")?;
                header = Some((n, m));
                pairs.reserve(m);
            }
            Some("e") => {
                if header.is_none() {
                    return Err(parse_err(lineno, "edge before the problem line"));
                }
                let u: usize = parse_field(lineno, fields.next(), "first endpoint")?;
                let v: usize = parse_field(lineno, fields.next(), "second endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(lineno, "vertices are 1-based"));
                }
                pairs.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(parse_err(lineno, format!("unknown line type `{other}`")));
            }
            None => unreachable!("trimmed line is non-empty"),
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err(0, "missing `p edge <n> <m>` header"));
    };
    if pairs.len() != m {
        return Err(parse_err(
            0,
            format!("header announces {m} edges but {} were listed", pairs.len()),
        ));
    }
    Graph::build(n, &pairs)
}

pub fn write_colouring<W: Write>(c: &Colouring, mut out: W) -> Result<()> {
    for (e, colour) in c.assignment().iter().enumerate() {
        writeln!(out, "{e} {colour}")?;
    }
    Ok(())
}

/// Reads `<edge-id> <colour>` lines into a map; completeness against a
/// particular graph is checked by [`Colouring::from_map`].
pub fn read_colouring<R: BufRead>(reader: R) -> Result<HashMap<usize, usize>> {
    let mut map = HashMap::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let edge: usize = parse_field(lineno, fields.next(), "edge id")?;
        let colour: usize = parse_field(lineno, fields.next(), "colour")?;
        if map.insert(edge, colour).is_some() {
            return Err(parse_err(lineno, format!("edge {edge} assigned twice")));
        }
    }
    Ok(map)
}

fn parse_field(line: usize, field: Option<&str>, what: &str) -> Result<usize> {
    let field = field.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    field
        .parse()
        .map_err(|_| parse_err(line, format!("{what} `{field}` is not a number")))
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip_preserves_ids() {
        let g = Graph::build(5, &[(0, 1), (3, 4), (1, 3), (0, 2)]).unwrap();
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = read_edge_list(buf.as_slice()).unwrap();
        assert_eq!(back.vertex_count(), 5);
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn edge_list_accepts_comments() {
        let text = "c a comment\np edge 3 2\nc another\ne 1 2\ne 2 3\n";
        let g = read_edge_list(text.as_bytes()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 2));
    }

    #[test]
    fn edge_list_parse_errors_name_the_line() {
        let missing_header = "e 1 2\n";
        match read_edge_list(missing_header.as_bytes()) {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
        let zero_based = "p edge 2 1\ne 0 1\n";
        assert!(read_edge_list(zero_based.as_bytes()).is_err());
        let count_mismatch = "p edge 3 5\ne 1 2\n";
        assert!(read_edge_list(count_mismatch.as_bytes()).is_err());
        let garbage = "p edge 2 1\ne 1 x\n";
        match read_edge_list(garbage.as_bytes()) {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected parse error at line 2, got {other:?}"),
        }
    }

    #[test]
    fn colouring_round_trip() {
        let c = Colouring::new(vec![2, 0, 1]);
        let mut buf = Vec::new();
        write_colouring(&c, &mut buf).unwrap();
        let map = read_colouring(buf.as_slice()).unwrap();
        let back = Colouring::from_map(&map, 3).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn colouring_rejects_duplicate_assignment() {
        let text = "0 1\n0 2\n";
        assert!(read_colouring(text.as_bytes()).is_err());
    }
}
