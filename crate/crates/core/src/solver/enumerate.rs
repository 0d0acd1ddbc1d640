//! Brute-force oracle: walks every proper assignment of colors `1..=t` in
//! lexicographic order and keeps those the validator accepts with exactly
//! `t` colors. Shares nothing with the pruned search beyond the graph type.
//!
//! The walk cuts a partial assignment only when the colors already placed at
//! some vertex span more than its degree, which no interval spectrum allows.

use super::SolveError;
use crate::coloring::{validate_interval, Color, EdgeColoring};
use crate::graph::Graph;

/// Default edge limit for [`enumerate_all_interval_colorings`].
pub const ENUMERATION_EDGE_CAP: usize = 12;

pub fn enumerate_all_interval_colorings(g: &Graph, t: u32) -> Result<IntervalColorings<'_>, SolveError> {
    enumerate_with_cap(g, t, ENUMERATION_EDGE_CAP)
}

pub fn enumerate_with_cap(g: &Graph, t: u32, cap: usize) -> Result<IntervalColorings<'_>, SolveError> {
    if t == 0 {
        return Err(SolveError::ZeroColors);
    }
    if g.edge_count() > cap {
        return Err(SolveError::EnumerationCap { cap, edges: g.edge_count() });
    }
    // earlier[e]: edges before e sharing an endpoint with it
    let earlier = (0..g.edge_count())
        .map(|e| {
            let edge = g.edge(e);
            (0..e)
                .filter(|&f| {
                    let other = g.edge(f);
                    other.u == edge.u || other.u == edge.v || other.v == edge.u || other.v == edge.v
                })
                .collect()
        })
        .collect();
    Ok(IntervalColorings { g, t, earlier, colors: Vec::with_capacity(g.edge_count()), done: false })
}

/// Lazy iterator over all interval `t`-colorings, in lexicographic order of
/// the color vector.
pub struct IntervalColorings<'g> {
    g: &'g Graph,
    t: u32,
    earlier: Vec<Vec<usize>>,
    colors: Vec<Color>,
    done: bool,
}

impl IntervalColorings<'_> {
    fn proper_at(&self, e: usize, c: Color) -> bool {
        self.earlier[e].iter().all(|&f| self.colors[f] != c)
    }

    /// Colors placed so far at each endpoint of `e`, together with `c`,
    /// span at most the endpoint's degree.
    fn span_ok(&self, e: usize, c: Color) -> bool {
        let edge = self.g.edge(e);
        [edge.u, edge.v].into_iter().all(|x| {
            let (mut lo, mut hi) = (c, c);
            for &f in &self.earlier[e] {
                let other = self.g.edge(f);
                if other.u == x || other.v == x {
                    lo = lo.min(self.colors[f]);
                    hi = hi.max(self.colors[f]);
                }
            }
            ((hi - lo) as usize) < self.g.degree(x)
        })
    }

    /// Smallest admissible color `>= from` for the next edge.
    fn next_color(&self, from: Color) -> Option<Color> {
        let e = self.colors.len();
        (from..=self.t).find(|&c| self.proper_at(e, c) && self.span_ok(e, c))
    }

    /// Advances to the next complete proper assignment.
    fn step(&mut self) -> bool {
        let m = self.g.edge_count();
        // on entry either nothing is placed yet, or a complete assignment
        // was just reported and must be advanced
        let mut from = if self.colors.len() == m {
            match self.colors.pop() {
                Some(c) => c + 1,
                None => return false,
            }
        } else {
            1
        };
        loop {
            match self.next_color(from) {
                Some(c) => {
                    self.colors.push(c);
                    if self.colors.len() == m {
                        return true;
                    }
                    from = 1;
                }
                None => match self.colors.pop() {
                    Some(c) => from = c + 1,
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for IntervalColorings<'_> {
    type Item = EdgeColoring;

    fn next(&mut self) -> Option<EdgeColoring> {
        if self.done {
            return None;
        }
        if self.g.edge_count() == 0 {
            // the empty assignment uses no colors, so it never has t >= 1
            self.done = true;
            return None;
        }
        while self.step() {
            let c = EdgeColoring::from_vec(self.colors.clone());
            let report = validate_interval(self.g, &c).expect("assignment is total");
            if report.t == Some(self.t) {
                return Some(c);
            }
        }
        self.done = true;
        None
    }
}
