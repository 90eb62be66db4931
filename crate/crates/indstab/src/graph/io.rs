//! graph6 encoding plus a plain edge-list reader.
//!
//! graph6 packs the upper triangle column by column, x(0,1), x(0,2), x(1,2),
//! x(0,3)..., six bits per printable character offset by 63. Orders above 62
//! use the '~' long form.

use super::Graph;
use crate::error::{Error, Result};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        let x = n as u32;
        out.push((((x >> 12) & 63) as u8 + 63) as char);
        out.push((((x >> 6) & 63) as u8 + 63) as char);
        out.push(((x & 63) as u8 + 63) as char);
    }
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push((v + 63) as char);
    }
    out
}

/// Decodes one graph6 string (no header).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    parse_graph6_line(s.trim(), 1)
}

fn parse_graph6_line(s: &str, line: usize) -> Result<Graph> {
    let bad = |msg: String| Error::Parse { line, msg };
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty graph6 string".into()));
    }
    let (n, mut idx) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(bad("truncated graph6 size".into()));
        }
        if bytes[1] == b'~' {
            return Err(bad("graph6 orders above 258047 unsupported".into()));
        }
        let mut x = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(bad("invalid graph6 size byte".into()));
            }
            x = (x << 6) | (b - 63) as usize;
        }
        (x, 4)
    } else {
        let b = bytes[0];
        if !(63..=126).contains(&b) {
            return Err(bad(format!("invalid graph6 size byte {b}")));
        }
        ((b - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > super::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = (nbits + 5) / 6;
    if bytes.len() - idx < nbytes {
        return Err(bad(format!(
            "graph6 body too short: need {nbytes} bytes, have {}",
            bytes.len() - idx
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[idx + bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad(format!("invalid graph6 body byte {byte}")));
            }
            let v = byte - 63;
            if (v >> (5 - (bit % 6))) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit >= nbits {
                break 'outer;
            }
        }
    }
    idx += nbytes;
    if bytes.len() > idx {
        return Err(bad("trailing bytes after graph6 body".into()));
    }
    Graph::new(n, &edges)
}

/// Reads a graph6 file: optional ">>graph6<<" header, one graph per line.
/// Malformed lines are reported with their numbers; good lines still parse.
pub fn parse_graph6_file(text: &str) -> (Vec<Graph>, Vec<Error>) {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut line = raw.trim();
        if i == 0 && line.starts_with(">>graph6<<") {
            line = line[">>graph6<<".len()..].trim_start();
        }
        if line.is_empty() {
            continue;
        }
        match parse_graph6_line(line, i + 1) {
            Ok(g) => graphs.push(g),
            Err(e) => errors.push(e),
        }
    }
    (graphs, errors)
}

/// Plain edge list: vertex count on line 1, one "u v" pair per line after.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (i, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty edge list".into(),
    })?;
    let n: usize = first.trim().parse().map_err(|_| Error::Parse {
        line: i + 1,
        msg: format!("expected vertex count, got {first:?}"),
    })?;
    let mut edges = Vec::new();
    for (i, l) in lines {
        let mut it = l.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize> {
            t.and_then(|x| x.parse().ok()).ok_or(Error::Parse {
                line: i + 1,
                msg: format!("expected \"u v\", got {l:?}"),
            })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: i + 1,
                msg: format!("trailing tokens in {l:?}"),
            });
        }
        edges.push((u, v));
    }
    Graph::new(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn k2_is_a_underscore() {
        // 'A' encodes n=2, '_' encodes the single edge bit
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        let back = parse_graph6("A_").unwrap();
        assert_eq!(back, k2);
    }

    #[test]
    fn round_trip_families() {
        for spec in [
            FamilySpec::path(7),
            FamilySpec::cycle(9),
            FamilySpec::star(10),
            FamilySpec::complete(5),
            FamilySpec::empty(3),
            FamilySpec::complete_multipartite(vec![3, 3]),
        ] {
            let g = spec.build().unwrap();
            let enc = to_graph6(&g);
            assert_eq!(parse_graph6(&enc).unwrap(), g, "{spec}");
        }
        // above 62 vertices exercises the long form
        let big = FamilySpec::cycle(64).build().unwrap();
        let enc = to_graph6(&big);
        assert!(enc.starts_with('~'));
        assert_eq!(parse_graph6(&enc).unwrap(), big);
    }

    #[test]
    fn file_with_header_and_bad_lines() {
        let text = ">>graph6<<\nA_\nnot-a-graph\x07\nBw\n";
        let (gs, errs) = parse_graph6_file(text);
        assert_eq!(gs.len(), 2);
        assert_eq!(errs.len(), 1);
        assert_eq!(gs[0].n(), 2);
        assert_eq!(gs[1].n(), 3);
        let (gs, errs) = parse_graph6_file("");
        assert!(gs.is_empty() && errs.is_empty());
    }

    #[test]
    fn edge_list_p3() {
        let g = parse_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.degree_sequence(), vec![1, 1, 2]);
        assert!(parse_edge_list("3\n0 x\n").is_err());
        assert!(parse_edge_list("").is_err());
    }
}
