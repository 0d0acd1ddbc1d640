//! Backtracking engine over `u128` color masks (bit `c - 1` is color `c`).

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use crate::coloring::Color;
use crate::graph::{Graph, Vertex};

pub(crate) const MAX_COLORS: u32 = 127;

/// Why a search stopped before exhausting its subtree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Halt {
    /// The visitor asked to stop.
    Stopped,
    OutOfNodes,
    OutOfTime,
    Cancelled,
}

/// Bits `lo..=hi` (1-based colors) set.
fn range_mask(lo: u32, hi: u32) -> u128 {
    if lo > hi {
        return 0;
    }
    let width = hi - lo + 1;
    let ones = if width >= 128 { u128::MAX } else { (1u128 << width) - 1 };
    ones << (lo - 1)
}

fn lowest(mask: u128) -> u32 {
    mask.trailing_zeros() + 1
}

fn highest(mask: u128) -> u32 {
    128 - mask.leading_zeros()
}

#[derive(Clone)]
pub(crate) struct Search<'g> {
    g: &'g Graph,
    t: u32,
    full: u128,
    degree: Vec<u32>,
    color: Vec<Color>,
    at_vertex: Vec<u128>,
    colored_at: Vec<u32>,
    usage: Vec<u32>,
    unused: u32,
    uncolored: usize,
    pub(crate) nodes: u64,
    node_limit: u64,
    deadline: Option<Instant>,
    cancel: Option<(&'g AtomicUsize, usize)>,
}

impl<'g> Search<'g> {
    pub(crate) fn new(g: &'g Graph, t: u32) -> Self {
        debug_assert!((1..=MAX_COLORS).contains(&t));
        Search {
            g,
            t,
            full: range_mask(1, t),
            degree: (0..g.vertex_count()).map(|v| g.degree(v) as u32).collect(),
            color: vec![0; g.edge_count()],
            at_vertex: vec![0; g.vertex_count()],
            colored_at: vec![0; g.vertex_count()],
            usage: vec![0; t as usize + 1],
            unused: t,
            uncolored: g.edge_count(),
            nodes: 0,
            node_limit: u64::MAX,
            deadline: None,
            cancel: None,
        }
    }

    pub(crate) fn limits(mut self, node_limit: u64, deadline: Option<Instant>) -> Self {
        self.node_limit = node_limit;
        self.deadline = deadline;
        self
    }

    /// Abort once a branch with a smaller index than `mine` has succeeded.
    pub(crate) fn cancel_on(mut self, best: &'g AtomicUsize, mine: usize) -> Self {
        self.cancel = Some((best, mine));
        self
    }

    pub(crate) fn assign(&mut self, e: usize, c: Color) {
        let edge = self.g.edge(e);
        let bit = 1u128 << (c - 1);
        self.color[e] = c;
        for v in [edge.u, edge.v] {
            self.at_vertex[v] |= bit;
            self.colored_at[v] += 1;
        }
        if self.usage[c as usize] == 0 {
            self.unused -= 1;
        }
        self.usage[c as usize] += 1;
        self.uncolored -= 1;
    }

    fn unassign(&mut self, e: usize) {
        let edge = self.g.edge(e);
        let c = std::mem::replace(&mut self.color[e], 0);
        let bit = 1u128 << (c - 1);
        for v in [edge.u, edge.v] {
            self.at_vertex[v] &= !bit;
            self.colored_at[v] -= 1;
        }
        self.usage[c as usize] -= 1;
        if self.usage[c as usize] == 0 {
            self.unused += 1;
        }
        self.uncolored += 1;
    }

    /// Colors `v` may still receive so that its spectrum can become an
    /// interval of length `deg(v)` inside `1..=t`.
    fn window(&self, v: Vertex) -> u128 {
        let used = self.at_vertex[v];
        if used == 0 {
            return self.full;
        }
        let d = self.degree[v];
        let lo = highest(used).saturating_sub(d - 1).max(1);
        let hi = (lowest(used) + d - 1).min(self.t);
        range_mask(lo, hi) & !used
    }

    fn domain(&self, e: usize) -> u128 {
        let edge = self.g.edge(e);
        self.window(edge.u) & self.window(edge.v)
    }

    /// Next edge to branch on and its domain, `Ok(None)` when every edge is
    /// colored, `Err(())` when the partial coloring cannot be completed.
    ///
    /// Edge choice: smallest domain, then most colored edges around its
    /// endpoints, then canonical order.
    #[allow(clippy::result_unit_err)]
    pub(crate) fn pick(&self) -> Result<Option<(usize, u128)>, ()> {
        if self.uncolored == 0 {
            return if self.unused == 0 { Ok(None) } else { Err(()) };
        }
        if self.unused as usize > self.uncolored {
            return Err(());
        }
        let mut best: Option<(u32, std::cmp::Reverse<u32>, usize, u128)> = None;
        let mut reachable = 0u128;
        for e in 0..self.color.len() {
            if self.color[e] != 0 {
                continue;
            }
            let dom = self.domain(e);
            if dom == 0 {
                return Err(());
            }
            reachable |= dom;
            let edge = self.g.edge(e);
            let key = (dom.count_ones(), std::cmp::Reverse(self.colored_at[edge.u] + self.colored_at[edge.v]), e, dom);
            if best.is_none_or(|b| (key.0, key.1, key.2) < (b.0, b.1, b.2)) {
                best = Some(key);
            }
        }
        // every color not yet used must still fit on some uncolored edge
        let missing = (1..=self.t).filter(|&c| self.usage[c as usize] == 0).fold(0u128, |m, c| m | (1u128 << (c - 1)));
        if missing & !reachable != 0 {
            return Err(());
        }
        Ok(best.map(|(_, _, e, dom)| (e, dom)))
    }

    fn tick(&mut self) -> Result<(), Halt> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Halt::OutOfNodes);
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Halt::OutOfTime);
                }
            }
            if let Some((best, mine)) = self.cancel {
                if best.load(Ordering::Relaxed) < mine {
                    return Err(Halt::Cancelled);
                }
            }
        }
        Ok(())
    }

    /// Depth-first search below the current partial coloring. `visit` sees
    /// every completed interval coloring in search order.
    pub(crate) fn run<F>(&mut self, visit: &mut F) -> Result<(), Halt>
    where
        F: FnMut(&[Color]) -> ControlFlow<()>,
    {
        self.tick()?;
        let (e, dom) = match self.pick() {
            Err(()) => return Ok(()),
            Ok(None) => {
                return match visit(&self.color) {
                    ControlFlow::Continue(()) => Ok(()),
                    ControlFlow::Break(()) => Err(Halt::Stopped),
                }
            }
            Ok(Some(choice)) => choice,
        };
        let mut rest = dom;
        while rest != 0 {
            let c = lowest(rest);
            rest &= rest - 1;
            self.assign(e, c);
            let r = self.run(visit);
            self.unassign(e);
            r?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks() {
        assert_eq!(range_mask(1, 3), 0b111);
        assert_eq!(range_mask(2, 3), 0b110);
        assert_eq!(range_mask(3, 2), 0);
        assert_eq!(range_mask(1, 128), u128::MAX);
        assert_eq!((lowest(0b1100), highest(0b1100)), (3, 4));
    }

    #[test]
    fn window_tracks_partial_spectrum() {
        // star K_{1,3}, t = 5: center colored 3 may still take 1..=5
        // but after 2 and 3 only 1 or 4 remain
        let g = crate::graph::make_complete_bipartite(1, 3).unwrap();
        let mut s = Search::new(&g, 5);
        s.assign(0, 3);
        assert_eq!(s.window(0), range_mask(1, 5) & !(1 << 2));
        s.assign(1, 2);
        assert_eq!(s.window(0), 0b1001);
        // leaves have degree 1: nothing more fits
        assert_eq!(s.window(1), 0);
    }
}
