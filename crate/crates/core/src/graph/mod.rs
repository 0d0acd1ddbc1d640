//! Simple undirected graphs with dense vertex ids and a canonical edge order.

mod builders;
mod io;
mod label;
mod stats;

use std::collections::BTreeMap;

pub use builders::{cartesian_product, make_complete, make_complete_bipartite, make_cycle, make_path};
pub use io::parse_graph;
pub use label::{LabelParseError, Tag, VertexLabel};
pub use stats::{stats, stats_with, Diameter, GraphStats};

pub type Vertex = usize;

/// Position of an edge in its graph's canonical edge sequence.
pub type EdgeId = usize;

/// Unordered vertex pair stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    /// Normalizes the pair so that `u < v`. Loops are not rejected here.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Edge { u: a.min(b), v: a.max(b) }
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(Vertex, Vertex, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("label for vertex {0} which does not exist")]
    LabelOutOfRange(Vertex),
    #[error("{0}")]
    InvalidParameter(String),
}

/// A finite simple undirected graph.
///
/// Vertices are `0..n`. Edges are kept strictly sorted by `(u, v)` with
/// `u < v`, so the edge id of an edge is its rank in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    labels: BTreeMap<Vertex, VertexLabel>,
    // (neighbor, edge id), sorted by neighbor
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Duplicate pairs are an error,
    /// not silently merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange(a, b, n));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].u, w[0].v));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in list.iter().enumerate() {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Ok(Graph { n, edges: list, labels: BTreeMap::new(), adjacency })
    }

    /// Attaches vertex labels, replacing any existing ones.
    pub fn with_labels<I>(mut self, labels: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, VertexLabel)>,
    {
        let mut map = BTreeMap::new();
        for (v, label) in labels {
            if v >= self.n {
                return Err(GraphError::LabelOutOfRange(v));
            }
            map.insert(v, label);
        }
        self.labels = map;
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, VertexLabel> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Option<&VertexLabel> {
        self.labels.get(&v)
    }

    /// Vertex carrying `label`, if any.
    pub fn find_label(&self, label: &VertexLabel) -> Option<Vertex> {
        self.labels.iter().find(|(_, l)| *l == label).map(|(v, _)| *v)
    }

    /// `(neighbor, edge id)` pairs of `v`, sorted by neighbor.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_id(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        let e = Edge::new(a, b);
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_id(a, b).is_some()
    }

    /// Renames vertex `x` to `perm[x]`.
    ///
    /// Returns the relabeled graph and, for each old edge id, its new edge id.
    /// Labels travel with their vertices.
    pub fn permuted(&self, perm: &[Vertex]) -> Result<(Graph, Vec<EdgeId>), GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameter(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::InvalidParameter("not a permutation".into()));
            }
        }
        let g = Graph::new(self.n, self.edges.iter().map(|e| (perm[e.u], perm[e.v])))?
            .with_labels(self.labels.iter().map(|(v, l)| (perm[*v], *l)))?;
        let map =
            self.edges.iter().map(|e| g.edge_id(perm[e.u], perm[e.v]).expect("edge survives relabeling")).collect();
        Ok((g, map))
    }
}
