//! Edge colorings, vertex spectra, the interval-coloring validator and the
//! diameter and order bounds on the number of colors.

mod bounds;
mod io;
mod validate;

use std::collections::BTreeSet;

pub use bounds::{bounds, BoundsError, BoundsPreconditions, BoundsReport};
pub use io::parse_coloring;
pub use validate::{validate_interval, ValidationReport, Violation};

use crate::graph::{EdgeId, Graph, Vertex};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("coloring has {found} colors for a graph with {expected} edges")]
    NotTotal { expected: usize, found: usize },
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("empty coloring has no color count")]
    Empty,
}

/// Colors by edge id; a total assignment for the graph it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    /// Takes colors indexed by the edge ids of `g`.
    pub fn new(g: &Graph, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if colors.len() != g.edge_count() {
            return Err(ColoringError::NotTotal { expected: g.edge_count(), found: colors.len() });
        }
        Ok(EdgeColoring { colors })
    }

    /// Colors without an associated graph; checked against one at use.
    pub fn from_vec(colors: Vec<Color>) -> Self {
        EdgeColoring { colors }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub(crate) fn check_total(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() != g.edge_count() {
            return Err(ColoringError::NotTotal { expected: g.edge_count(), found: self.colors.len() });
        }
        Ok(())
    }

    /// Moves the coloring along an edge-id map such as the one returned by
    /// [`Graph::permuted`].
    pub fn transport(&self, edge_map: &[EdgeId]) -> EdgeColoring {
        let mut colors = vec![0; self.colors.len()];
        for (old, &new) in edge_map.iter().enumerate() {
            colors[new] = self.colors[old];
        }
        EdgeColoring { colors }
    }

    /// The mirror coloring `c -> t + 1 - c` where `t` is the largest color.
    pub fn mirrored(&self) -> EdgeColoring {
        let t = self.colors.iter().copied().max().unwrap_or(0);
        EdgeColoring { colors: self.colors.iter().map(|&c| t + 1 - c).collect() }
    }

    /// Shifts a coloring whose smallest color is `a` down so that it starts
    /// at 1. Zero colors are left alone.
    pub fn normalize_to_one(&self) -> EdgeColoring {
        let low = self.colors.iter().copied().filter(|&c| c > 0).min().unwrap_or(1);
        EdgeColoring { colors: self.colors.iter().map(|&c| if c == 0 { 0 } else { c - low + 1 }).collect() }
    }
}

/// Read access to a possibly partial coloring.
pub trait ColorLookup {
    fn color_of(&self, e: EdgeId) -> Option<Color>;
}

impl ColorLookup for EdgeColoring {
    fn color_of(&self, e: EdgeId) -> Option<Color> {
        self.colors.get(e).copied()
    }
}

/// Partial coloring: `None` marks an uncolored edge.
impl ColorLookup for [Option<Color>] {
    fn color_of(&self, e: EdgeId) -> Option<Color> {
        self.get(e).copied().flatten()
    }
}

impl ColorLookup for Vec<Option<Color>> {
    fn color_of(&self, e: EdgeId) -> Option<Color> {
        self.as_slice().color_of(e)
    }
}

/// The set of colors on colored edges at a vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Spectrum(pub BTreeSet<Color>);

impl Spectrum {
    pub fn min(&self) -> Option<Color> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<Color> {
        self.0.last().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive integers. Empty and singleton spectra qualify.
    pub fn is_interval(&self) -> bool {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize + 1 == self.0.len(),
            _ => true,
        }
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

pub fn spectrum<C: ColorLookup + ?Sized>(g: &Graph, c: &C, v: Vertex) -> Result<Spectrum, ColoringError> {
    if v >= g.vertex_count() {
        return Err(ColoringError::UnknownVertex(v));
    }
    Ok(Spectrum(g.incident(v).iter().filter_map(|&(_, e)| c.color_of(e)).collect()))
}

/// `t` of a coloring: its largest color.
pub fn color_count(c: &EdgeColoring) -> Result<Color, ColoringError> {
    c.colors.iter().copied().max().ok_or(ColoringError::Empty)
}
