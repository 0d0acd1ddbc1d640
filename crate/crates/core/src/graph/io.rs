use std::fmt::Write;

use super::{Graph, VertexLabel};
use crate::text::{fields, lines, number, ParseError};

impl Graph {
    /// Canonical text form: `g <n> <m>`, then `e <u> <v>` per edge in
    /// canonical order, then `l <v> <label>` per labeled vertex.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "g {} {}", self.vertex_count(), self.edge_count()).unwrap();
        for e in self.edges() {
            writeln!(out, "e {} {}", e.u, e.v).unwrap();
        }
        for (v, label) in self.labels() {
            writeln!(out, "l {v} {label}").unwrap();
        }
        out
    }

    pub fn from_text(input: &str) -> Result<Graph, ParseError> {
        parse_graph(input)
    }
}

/// Parses the canonical graph format. Non-canonical input (unsorted edges,
/// `u >= v`, stray whitespace) is rejected with the offending line number.
pub fn parse_graph(input: &str) -> Result<Graph, ParseError> {
    let mut it = lines(input);
    let (lineno, header) = it.next().ok_or_else(|| ParseError::new(1, "empty input"))?;
    let h = fields(header, lineno, "g", 2)?;
    let n: usize = number(h[0], lineno, "vertex count")?;
    let m: usize = number(h[1], lineno, "edge count")?;
    if n == 0 {
        return Err(ParseError::new(lineno, "graph must have at least one vertex"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut labels = Vec::new();
    let mut last_line = lineno;
    for (lineno, line) in it {
        last_line = lineno;
        if edges.len() < m {
            let f = fields(line, lineno, "e", 2)?;
            let u: usize = number(f[0], lineno, "vertex")?;
            let v: usize = number(f[1], lineno, "vertex")?;
            if u >= v {
                return Err(ParseError::new(lineno, format!("edge endpoints must satisfy u < v, got {u} {v}")));
            }
            if v >= n {
                return Err(ParseError::new(lineno, format!("vertex {v} out of range for n = {n}")));
            }
            if edges.last().is_some_and(|&prev| prev >= (u, v)) {
                return Err(ParseError::new(lineno, "edges must be strictly sorted"));
            }
            edges.push((u, v));
        } else {
            let Some(rest) = line.strip_prefix("l ") else {
                return Err(ParseError::new(lineno, format!("expected `l` record, found `{line}`")));
            };
            let (v, text) =
                rest.split_once(' ').ok_or_else(|| ParseError::new(lineno, "`l` record takes a vertex and a label"))?;
            let v: usize = number(v, lineno, "vertex")?;
            if v >= n {
                return Err(ParseError::new(lineno, format!("vertex {v} out of range for n = {n}")));
            }
            if labels.last().is_some_and(|&(prev, _)| prev >= v) {
                return Err(ParseError::new(lineno, "labels must be strictly sorted by vertex"));
            }
            let label: VertexLabel = text.parse().map_err(|e| ParseError::new(lineno, format!("{e}")))?;
            labels.push((v, label));
        }
    }
    if edges.len() < m {
        return Err(ParseError::new(last_line, format!("expected {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges).and_then(|g| g.with_labels(labels)).map_err(|e| ParseError::new(last_line, e.to_string()))
}
