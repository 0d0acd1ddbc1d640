use crate::graph::{stats, Graph, GraphStats};

/// Which structural preconditions held for the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsPreconditions {
    pub connected: bool,
    pub bipartite: bool,
    pub triangle_free: bool,
}

/// Upper bounds on the number of colors of any interval coloring of a
/// connected graph with diameter `d`, max degree `Δ` and `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsReport {
    pub diameter: usize,
    pub max_degree: usize,
    pub vertices: usize,
    /// `(d + 1)(Δ - 1) + 1`
    pub general_diameter_bound: u64,
    /// `d(Δ - 1) + 1`, bipartite graphs only.
    pub bipartite_diameter_bound: Option<u64>,
    /// `n - 1`, triangle-free graphs only.
    pub triangle_free_bound: Option<u64>,
    /// `2n - 4`, only when `n >= 3`.
    pub general_vertex_bound: Option<u64>,
    pub applicable: BoundsPreconditions,
}

impl BoundsReport {
    /// The diameter bound used as a search cutoff: the bipartite one when it
    /// applies, the general one otherwise.
    pub fn diameter_cutoff(&self) -> u64 {
        self.bipartite_diameter_bound.unwrap_or(self.general_diameter_bound)
    }

    /// Smallest of all present bounds.
    pub fn tightest(&self) -> u64 {
        [
            Some(self.general_diameter_bound),
            self.bipartite_diameter_bound,
            self.triangle_free_bound,
            self.general_vertex_bound,
        ]
        .into_iter()
        .flatten()
        .min()
        .expect("general bound is always present")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("graph is disconnected; the diameter bounds require a connected graph")]
    Disconnected,
}

pub fn bounds(g: &Graph) -> Result<BoundsReport, BoundsError> {
    bounds_from_stats(g.vertex_count(), &stats(g))
}

pub(crate) fn bounds_from_stats(n: usize, s: &GraphStats) -> Result<BoundsReport, BoundsError> {
    let d = s.diameter.finite().ok_or(BoundsError::Disconnected)? as i64;
    let delta = s.max_degree as i64;
    // Δ = 0 only for the single vertex, where both formulas stay non-negative
    let general = (d + 1) * (delta - 1) + 1;
    let bipartite = d * (delta - 1) + 1;
    let n64 = n as u64;
    Ok(BoundsReport {
        diameter: d as usize,
        max_degree: s.max_degree,
        vertices: n,
        general_diameter_bound: general.max(0) as u64,
        bipartite_diameter_bound: s.bipartite.then_some(bipartite.max(0) as u64),
        triangle_free_bound: s.triangle_free.then(|| n64 - 1),
        general_vertex_bound: (n >= 3).then(|| 2 * n64 - 4),
        applicable: BoundsPreconditions {
            connected: s.connected,
            bipartite: s.bipartite,
            triangle_free: s.triangle_free,
        },
    })
}
