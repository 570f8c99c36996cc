//! Text formats: `xdg v1`, DIMACS `.col`, and coloring files.
//!
//! `xdg v1` is a header `xdg n=<order> loops=<0|1>` followed by one `e <u> <v>`
//! line per edge with 0-based endpoints and `u <= v`. Lines starting with `#`
//! are comments. DIMACS uses `p edge <n> <m>` and 1-based `e <u> <v>` lines.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn write_xdg(g: &Graph) -> String {
    let mut s = format!("xdg n={} loops={}\n", g.order(), u8::from(g.loops_allowed()));
    for (u, v) in g.edges() {
        writeln!(s, "e {u} {v}").expect("writing to a String");
    }
    s
}

pub fn read_xdg(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("xdg") {
        return Err(parse_err(hl, "header must start with `xdg`"));
    }
    let mut order = None;
    let mut loops = None;
    for kv in parts {
        match kv.split_once('=') {
            Some(("n", v)) => order = Some(v.parse::<usize>().map_err(|_| parse_err(hl, "bad order"))?),
            Some(("loops", "0")) => loops = Some(false),
            Some(("loops", "1")) => loops = Some(true),
            _ => return Err(parse_err(hl, format!("unexpected header field `{kv}`"))),
        }
    }
    let order = order.ok_or_else(|| parse_err(hl, "missing n="))?;
    let loops = loops.ok_or_else(|| parse_err(hl, "missing loops="))?;
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        match f.as_slice() {
            ["e", u, v] => {
                let u = u.parse::<usize>().map_err(|_| parse_err(ln, "bad vertex"))?;
                let v = v.parse::<usize>().map_err(|_| parse_err(ln, "bad vertex"))?;
                edges.push((u, v));
            }
            _ => return Err(parse_err(ln, format!("expected `e <u> <v>`, got `{line}`"))),
        }
    }
    Graph::from_edges(order, &edges, loops)
}

pub fn write_dimacs(g: &Graph) -> Result<String> {
    g.require_loop_free()?;
    let mut s = format!("p edge {} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(s, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    Ok(s)
}

pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let f: Vec<&str> = line.split_whitespace().collect();
        match f.as_slice() {
            [] | ["c", ..] => {}
            ["p", "edge" | "col", n, _m] => {
                if order.is_some() {
                    return Err(parse_err(ln, "second problem line"));
                }
                order = Some(n.parse::<usize>().map_err(|_| parse_err(ln, "bad vertex count"))?);
            }
            ["e", u, v] => {
                let n = order.ok_or_else(|| parse_err(ln, "edge before problem line"))?;
                let u = u.parse::<usize>().map_err(|_| parse_err(ln, "bad vertex"))?;
                let v = v.parse::<usize>().map_err(|_| parse_err(ln, "bad vertex"))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(ln, "vertex out of range (DIMACS is 1-based)"));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(parse_err(ln, format!("unrecognized line `{line}`"))),
        }
    }
    let order = order.ok_or_else(|| parse_err(1, "missing problem line"))?;
    Graph::from_edges(order, &edges, false)
}

/// Graph as JSON: order, loop flag, edge list with `u <= v`, and printed labels if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub order: usize,
    pub loops: bool,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

pub fn write_graph_json(g: &Graph) -> String {
    let file = GraphFile {
        order: g.order(),
        loops: g.loops_allowed(),
        edges: g.edges().collect(),
        labels: g.labels().map(|ls| ls.iter().map(ToString::to_string).collect()),
    };
    serde_json::to_string(&file).expect("graph serializes")
}

/// Labels in the file are informational and are not read back.
pub fn read_graph_json(text: &str) -> Result<Graph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    Graph::from_edges(file.order, &file.edges, file.loops)
}

/// Reads any of the three graph formats, chosen by the first meaningful line.
pub fn read_graph_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("c "))
        .unwrap_or("");
    if first.starts_with('{') {
        read_graph_json(text)
    } else if first.starts_with("p ") {
        read_dimacs(text)
    } else {
        read_xdg(text)
    }
}

/// Coloring file as JSON: `colors[v]` is the 1-based color of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub order: usize,
    pub count: usize,
    pub colors: Vec<u32>,
}

pub fn write_coloring_json(c: &Coloring) -> String {
    let file = ColoringFile {
        order: c.colors().len(),
        count: c.count(),
        colors: c.colors().to_vec(),
    };
    serde_json::to_string(&file).expect("coloring serializes")
}

pub fn read_coloring_json(text: &str) -> Result<Coloring> {
    let file: ColoringFile = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    if file.colors.len() != file.order {
        return Err(parse_err(1, "colors length differs from order"));
    }
    let c = Coloring::new(file.colors)?;
    if c.count() != file.count {
        return Err(parse_err(1, format!("count {} but {} distinct colors", file.count, c.count())));
    }
    Ok(c)
}

/// DIMACS-style solution lines: `s col <k>` then `l <vertex> <color>`, vertices 1-based.
pub fn write_coloring_dimacs(c: &Coloring) -> String {
    let mut s = format!("s col {}\n", c.count());
    for (v, col) in c.colors().iter().enumerate() {
        writeln!(s, "l {} {}", v + 1, col).expect("writing to a String");
    }
    s
}

pub fn read_coloring_dimacs(text: &str) -> Result<Coloring> {
    let mut pairs = Vec::new();
    let mut declared = None;
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let f: Vec<&str> = line.split_whitespace().collect();
        match f.as_slice() {
            [] | ["c", ..] => {}
            ["s", "col", k] => declared = Some(k.parse::<usize>().map_err(|_| parse_err(ln, "bad color count"))?),
            ["l", v, c] => {
                let v = v.parse::<usize>().map_err(|_| parse_err(ln, "bad vertex"))?;
                let c = c.parse::<u32>().map_err(|_| parse_err(ln, "bad color"))?;
                if v == 0 {
                    return Err(parse_err(ln, "vertices are 1-based"));
                }
                pairs.push((v - 1, c));
            }
            _ => return Err(parse_err(ln, format!("unrecognized line `{line}`"))),
        }
    }
    let n = pairs.iter().map(|&(v, _)| v + 1).max().unwrap_or(0);
    let mut colors = vec![0u32; n];
    for (v, c) in pairs {
        colors[v] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(Error::PartialColoring(v));
    }
    let c = Coloring::new(colors)?;
    if declared.is_some_and(|k| k != c.count()) {
        return Err(parse_err(1, "declared color count differs from colors used"));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, hypercube};
    use proptest::prelude::*;

    #[test]
    fn xdg_roundtrip_with_loops() {
        let g = Graph::from_edges(3, &[(0, 0), (0, 2)], true).unwrap();
        let text = write_xdg(&g);
        assert_eq!(text, "xdg n=3 loops=1\ne 0 0\ne 0 2\n");
        assert_eq!(read_xdg(&text).unwrap(), g);
    }

    #[test]
    fn q4_file_has_expected_size() {
        let text = write_xdg(&hypercube(4).unwrap());
        assert!(text.starts_with("xdg n=16 loops=0\n"));
        assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 32);
    }

    #[test]
    fn xdg_errors() {
        assert!(matches!(read_xdg(""), Err(Error::Parse { .. })));
        assert!(matches!(read_xdg("xdg n=2\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_xdg("xdg n=2 loops=0\ne 0\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(read_xdg("xdg n=2 loops=0\ne 0 5\n"), Err(Error::VertexOutOfRange { vertex: 5, order: 2 }));
        assert_eq!(read_xdg("xdg n=2 loops=0\ne 1 1\n"), Err(Error::ForbiddenLoop(1)));
    }

    #[test]
    fn dimacs_roundtrip() {
        let c5 = cycle(5).unwrap();
        let text = write_dimacs(&c5).unwrap();
        assert!(text.starts_with("p edge 5 5\n"));
        assert!(read_dimacs(&format!("c hello\n{text}")).unwrap().same_edges(&c5));
        assert!(read_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(write_dimacs(&Graph::all_loops(1)).is_err());
    }

    #[test]
    fn json_and_detection() {
        let g = Graph::from_edges(3, &[(0, 0), (1, 2)], true).unwrap();
        let json = write_graph_json(&g);
        assert_eq!(json, r#"{"order":3,"loops":true,"edges":[[0,0],[1,2]]}"#);
        assert_eq!(read_graph_auto(&json).unwrap(), g);
        let q = hypercube(2).unwrap();
        assert!(write_graph_json(&q).contains(r#""labels":["00","01","10","11"]"#));
        for text in [write_xdg(&q), write_dimacs(&q).unwrap(), write_graph_json(&q)] {
            assert!(read_graph_auto(&text).unwrap().same_edges(&q));
        }
    }

    #[test]
    fn coloring_files() {
        let c = Coloring::new(vec![1, 2, 1, 3]).unwrap();
        let json = write_coloring_json(&c);
        assert_eq!(json, r#"{"order":4,"count":3,"colors":[1,2,1,3]}"#);
        assert_eq!(read_coloring_json(&json).unwrap(), c);
        let dim = write_coloring_dimacs(&c);
        assert_eq!(read_coloring_dimacs(&dim).unwrap(), c);
        assert_eq!(read_coloring_dimacs("l 2 1\n"), Err(Error::PartialColoring(0)));
    }

    proptest! {
        #[test]
        fn formats_roundtrip(n in 1usize..20, raw in proptest::collection::vec((0usize..20, 0usize..20), 0..60)) {
            let edges: Vec<(usize, usize)> = raw.into_iter().filter(|(u, v)| u < &n && v < &n && u != v).collect();
            let g = Graph::from_edges(n, &edges, false).unwrap();
            prop_assert_eq!(read_xdg(&write_xdg(&g)).unwrap(), g.clone());
            prop_assert!(read_dimacs(&write_dimacs(&g).unwrap()).unwrap().same_edges(&g));
        }
    }
}
