use super::{Graph, GraphError, Tag, VertexLabel};

fn positive(name: &str, value: usize, min: usize) -> Result<(), GraphError> {
    if value < min {
        return Err(GraphError::InvalidParameter(format!("{name} must be at least {min}, got {value}")));
    }
    Ok(())
}

/// Path `0 - 1 - ... - (n-1)` on `n` vertices.
pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    positive("path length", n, 1)?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle on `n >= 3` vertices.
pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    positive("cycle length", n, 3)?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    positive("clique size", n, 1)?;
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{m,n}` with the u-side on ids `0..m` labeled `u_1..u_m` and the v-side
/// on `m..m+n` labeled `v_1..v_n`.
pub fn make_complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    positive("part size", m, 1)?;
    positive("part size", n, 1)?;
    let labels = (0..m)
        .map(|i| (i, VertexLabel::indexed(Tag::U, i as u32 + 1)))
        .chain((0..n).map(|j| (m + j, VertexLabel::indexed(Tag::V, j as u32 + 1))));
    Graph::new(m + n, (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))))?.with_labels(labels)
}

/// Cartesian product `g □ h`. Vertex `(x, y)` becomes `x * |V(h)| + y`.
/// Labels of the factors are dropped.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let nh = h.vertex_count();
    let id = |x: usize, y: usize| x * nh + y;
    let mut edges = Vec::with_capacity(g.vertex_count() * h.edge_count() + nh * g.edge_count());
    for x in 0..g.vertex_count() {
        for e in h.edges() {
            edges.push((id(x, e.u), id(x, e.v)));
        }
    }
    for e in g.edges() {
        for y in 0..nh {
            edges.push((id(e.u, y), id(e.v, y)));
        }
    }
    Graph::new(g.vertex_count() * nh, edges)
}
