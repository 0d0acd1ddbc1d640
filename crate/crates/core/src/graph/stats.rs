use std::collections::VecDeque;
use std::fmt;

use super::{Graph, Vertex};
use crate::exec::Exec;

/// Graph diameter; disconnected graphs have no finite diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphStats {
    pub diameter: Diameter,
    pub max_degree: usize,
    pub bipartite: bool,
    pub connected: bool,
    pub triangle_free: bool,
}

pub fn stats(g: &Graph) -> GraphStats {
    stats_with(g, Exec::default())
}

/// Exact statistics. The diameter comes from a BFS out of every vertex; the
/// sources are distributed according to `exec`.
pub fn stats_with(g: &Graph, exec: Exec) -> GraphStats {
    let eccentricities = exec.map((0..g.vertex_count()).collect(), |s| eccentricity(g, s));
    let diameter = eccentricities
        .into_iter()
        .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
        .map_or(Diameter::Infinite, Diameter::Finite);
    GraphStats {
        diameter,
        max_degree: g.max_degree(),
        bipartite: is_bipartite(g),
        connected: diameter != Diameter::Infinite,
        triangle_free: is_triangle_free(g),
    }
}

/// Largest BFS distance from `source`, or `None` if some vertex is unreachable.
fn eccentricity(g: &Graph, source: Vertex) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    let mut reached = 1;
    let mut far = 0;
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.incident(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                far = dist[y];
                reached += 1;
                queue.push_back(y);
            }
        }
    }
    (reached == g.vertex_count()).then_some(far)
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side: Vec<Option<bool>> = vec![None; g.vertex_count()];
    for start in 0..g.vertex_count() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].unwrap();
            for &(y, _) in g.incident(x) {
                match side[y] {
                    None => {
                        side[y] = Some(!sx);
                        queue.push_back(y);
                    }
                    Some(sy) if sy == sx => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

fn is_triangle_free(g: &Graph) -> bool {
    // sorted neighbor lists: merge-intersect the two endpoints of every edge
    g.edges().iter().all(|e| {
        let (mut a, mut b) = (g.incident(e.u).iter().peekable(), g.incident(e.v).iter().peekable());
        while let (Some(&&(x, _)), Some(&&(y, _))) = (a.peek(), b.peek()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => {
                    a.next();
                }
                std::cmp::Ordering::Greater => {
                    b.next();
                }
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    })
}
