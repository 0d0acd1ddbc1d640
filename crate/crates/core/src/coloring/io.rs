use std::fmt::Write;

use super::{Color, EdgeColoring};
use crate::graph::Graph;
use crate::text::{fields, lines, number, ParseError};

impl EdgeColoring {
    /// Canonical text form: `c <m>`, then `k <u> <v> <color>` per edge in the
    /// canonical edge order of `g`.
    pub fn to_text(&self, g: &Graph) -> String {
        debug_assert_eq!(self.len(), g.edge_count());
        let mut out = String::new();
        writeln!(out, "c {}", self.len()).unwrap();
        for (e, &color) in g.edges().iter().zip(self.colors()) {
            writeln!(out, "k {} {} {color}", e.u, e.v).unwrap();
        }
        out
    }
}

/// Parses a coloring of `g`. Every edge of `g` must appear exactly once, in
/// canonical order, with a positive color.
pub fn parse_coloring(g: &Graph, input: &str) -> Result<EdgeColoring, ParseError> {
    let mut it = lines(input);
    let (lineno, header) = it.next().ok_or_else(|| ParseError::new(1, "empty input"))?;
    let m: usize = number(fields(header, lineno, "c", 1)?[0], lineno, "edge count")?;
    if m != g.edge_count() {
        return Err(ParseError::new(lineno, format!("coloring lists {m} edges but the graph has {}", g.edge_count())));
    }
    let mut colors: Vec<Color> = Vec::with_capacity(m);
    let mut last_line = lineno;
    for (lineno, line) in it {
        last_line = lineno;
        let Some(edge) = g.edges().get(colors.len()) else {
            return Err(ParseError::new(lineno, "trailing content after the last edge"));
        };
        let f = fields(line, lineno, "k", 3)?;
        let u: usize = number(f[0], lineno, "vertex")?;
        let v: usize = number(f[1], lineno, "vertex")?;
        if (u, v) != (edge.u, edge.v) {
            return Err(ParseError::new(lineno, format!("expected edge {} {} here, found {u} {v}", edge.u, edge.v)));
        }
        let color: Color = number(f[2], lineno, "color")?;
        if color == 0 {
            return Err(ParseError::new(lineno, "colors must be positive"));
        }
        colors.push(color);
    }
    if colors.len() < m {
        return Err(ParseError::new(last_line, format!("expected {m} colored edges, found {}", colors.len())));
    }
    Ok(EdgeColoring::from_vec(colors))
}
