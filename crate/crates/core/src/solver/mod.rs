//! Exact search for interval colorings of small graphs.
//!
//! [`find_interval_coloring`] is a pruned backtracking search that stays
//! sound under a node budget: when the budget runs out the answer is
//! [`SolveStatus::Unknown`], never `Infeasible`. [`enumerate_all_interval_colorings`]
//! is a deliberately naive enumerator used as an independent oracle.

mod enumerate;
mod search;

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

pub use enumerate::{enumerate_all_interval_colorings, enumerate_with_cap, IntervalColorings, ENUMERATION_EDGE_CAP};

use crate::coloring::{bounds, validate_interval, BoundsError, Color, EdgeColoring};
use crate::exec::Exec;
use crate::graph::Graph;
use search::{Halt, Search, MAX_COLORS};

/// Limits for one search. Node counts make outcomes reproducible; the
/// optional wall-clock limit does not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveBudget {
    pub max_nodes: u64,
    pub max_seconds: Option<f64>,
}

impl SolveBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SolveBudget { max_nodes: max_nodes.max(1), max_seconds: None }
    }

    fn deadline(&self, start: Instant) -> Option<Instant> {
        self.max_seconds.map(|s| start + Duration::from_secs_f64(s.max(0.0)))
    }
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget::nodes(10_000_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    Feasible,
    Infeasible,
    Unknown,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Feasible => "feasible",
            SolveStatus::Infeasible => "infeasible",
            SolveStatus::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Present iff `status` is `Feasible`.
    pub certificate: Option<EdgeColoring>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("number of colors must be positive")]
    ZeroColors,
    #[error("at most {max} colors are supported, asked for {0}", max = MAX_COLORS)]
    TooManyColors(u32),
    #[error("enumeration is limited to {cap} edges, graph has {edges}")]
    EnumerationCap { cap: usize, edges: usize },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

fn check_t(t: u32) -> Result<(), SolveError> {
    match t {
        0 => Err(SolveError::ZeroColors),
        t if t > MAX_COLORS => Err(SolveError::TooManyColors(t)),
        _ => Ok(()),
    }
}

/// Cases settled without search: fewer colors than the max degree, or more
/// colors than edges.
fn trivially_infeasible(g: &Graph, t: u32) -> bool {
    (t as usize) < g.max_degree() || t as usize > g.edge_count()
}

pub fn find_interval_coloring(g: &Graph, t: u32, budget: SolveBudget) -> Result<SolveOutcome, SolveError> {
    find_interval_coloring_with(g, t, budget, Exec::default())
}

/// Searches for an interval `t`-coloring of `g`.
///
/// The first edge is restricted to colors `<= ceil(t / 2)`; the mirror
/// `c -> t + 1 - c` maps any solution into that range. The values of that
/// first edge form the root branches, searched in increasing color order.
/// In parallel mode all root branches run concurrently with the full node
/// budget and the sequential schedule is then replayed over their recorded
/// node counts, so outcome, certificate and `nodes_explored` do not depend
/// on `exec` (as long as no wall-clock limit fires).
pub fn find_interval_coloring_with(
    g: &Graph,
    t: u32,
    budget: SolveBudget,
    exec: Exec,
) -> Result<SolveOutcome, SolveError> {
    check_t(t)?;
    let start = Instant::now();
    let done = |status, certificate, nodes_explored| SolveOutcome {
        status,
        certificate,
        nodes_explored,
        elapsed: start.elapsed(),
    };
    if trivially_infeasible(g, t) {
        return Ok(done(SolveStatus::Infeasible, None, 0));
    }
    let deadline = budget.deadline(start);

    let root = Search::new(g, t);
    let (first, dom) = match root.pick() {
        Ok(Some(choice)) => choice,
        // m >= t >= 1 here, so the root always branches
        _ => return Ok(done(SolveStatus::Infeasible, None, 1)),
    };
    let half = t.div_ceil(2);
    let branches: Vec<Color> = (1..=half).filter(|&c| dom & (1u128 << (c - 1)) != 0).collect();

    let budget_after_root = budget.max_nodes.saturating_sub(1);
    let run_branch = |index: usize, c: Color, limit: u64, best: Option<&AtomicUsize>| -> BranchResult {
        let mut s = Search::new(g, t).limits(limit, deadline);
        if let Some(best) = best {
            s = s.cancel_on(best, index);
        }
        s.assign(first, c);
        let mut found: Option<Vec<Color>> = None;
        let r = s.run(&mut |colors: &[Color]| {
            found = Some(colors.to_vec());
            ControlFlow::Break(())
        });
        match r {
            Ok(()) => BranchResult::Exhausted(s.nodes),
            Err(Halt::Stopped) => {
                if let Some(best) = best {
                    best.fetch_min(index, Ordering::Relaxed);
                }
                BranchResult::Found(s.nodes, found.expect("visitor stored the coloring"))
            }
            Err(Halt::OutOfNodes) => BranchResult::OutOfBudget,
            Err(Halt::OutOfTime) => BranchResult::OutOfTime,
            Err(Halt::Cancelled) => BranchResult::Cancelled,
        }
    };

    let finish = |status, colors: Option<Vec<Color>>, nodes| {
        let certificate = colors.map(EdgeColoring::from_vec);
        if let Some(c) = &certificate {
            debug_assert_eq!(validate_interval(g, c).unwrap().t, Some(t));
        }
        done(status, certificate, nodes)
    };

    let mut remaining = budget_after_root;
    let mut nodes = 1u64;
    match exec {
        Exec::Parallel if branches.len() > 1 && cfg!(feature = "parallel") => {
            let best = AtomicUsize::new(usize::MAX);
            let items: Vec<(usize, Color)> = branches.iter().copied().enumerate().collect();
            let results = exec.map(items, |(i, c)| run_branch(i, c, budget_after_root, Some(&best)));
            // replay the sequential schedule against the recorded counts
            for r in results {
                match r {
                    BranchResult::Exhausted(n) if n <= remaining => {
                        remaining -= n;
                        nodes += n;
                    }
                    BranchResult::Found(n, colors) if n <= remaining => {
                        return Ok(finish(SolveStatus::Feasible, Some(colors), nodes + n));
                    }
                    BranchResult::OutOfTime => return Ok(finish(SolveStatus::Unknown, None, nodes)),
                    BranchResult::Cancelled => unreachable!("only branches after a success are cancelled"),
                    _ => return Ok(finish(SolveStatus::Unknown, None, budget.max_nodes)),
                }
            }
        }
        _ => {
            for (i, &c) in branches.iter().enumerate() {
                match run_branch(i, c, remaining, None) {
                    BranchResult::Exhausted(n) => {
                        remaining -= n;
                        nodes += n;
                    }
                    BranchResult::Found(n, colors) => {
                        return Ok(finish(SolveStatus::Feasible, Some(colors), nodes + n));
                    }
                    BranchResult::OutOfBudget => return Ok(finish(SolveStatus::Unknown, None, budget.max_nodes)),
                    BranchResult::OutOfTime | BranchResult::Cancelled => {
                        return Ok(finish(SolveStatus::Unknown, None, nodes))
                    }
                }
            }
        }
    }
    Ok(finish(SolveStatus::Infeasible, None, nodes))
}

enum BranchResult {
    Exhausted(u64),
    Found(u64, Vec<Color>),
    OutOfBudget,
    OutOfTime,
    Cancelled,
}

/// Visits every interval `t`-coloring of `g` found by the pruned search,
/// without symmetry breaking, until `visit` breaks or the budget runs out.
///
/// Returns `Feasible` if anything was visited, `Infeasible` if the search
/// finished without a coloring, `Unknown` if the budget ran out first, plus
/// the number of search nodes.
pub fn for_each_interval_coloring<F>(
    g: &Graph,
    t: u32,
    budget: SolveBudget,
    mut visit: F,
) -> Result<(SolveStatus, u64), SolveError>
where
    F: FnMut(&EdgeColoring) -> ControlFlow<()>,
{
    check_t(t)?;
    if trivially_infeasible(g, t) {
        return Ok((SolveStatus::Infeasible, 0));
    }
    let start = Instant::now();
    let mut s = Search::new(g, t).limits(budget.max_nodes, budget.deadline(start));
    let mut any = false;
    let r = s.run(&mut |colors: &[Color]| {
        any = true;
        visit(&EdgeColoring::from_vec(colors.to_vec()))
    });
    let status = match r {
        Ok(()) | Err(Halt::Stopped) if any => SolveStatus::Feasible,
        Ok(()) => SolveStatus::Infeasible,
        _ => SolveStatus::Unknown,
    };
    Ok((status, s.nodes))
}

/// All-solutions mode of the pruned search: the exact number of interval
/// `t`-colorings, or `None` if the budget ran out.
pub fn count_interval_colorings(g: &Graph, t: u32, budget: SolveBudget) -> Result<Option<u64>, SolveError> {
    let mut count = 0u64;
    let (status, _) = for_each_interval_coloring(g, t, budget, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok((status != SolveStatus::Unknown).then_some(count))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WStatus {
    /// `w` is the largest `t` with an interval `t`-coloring.
    Exact,
    /// No `t` between the max degree and the diameter bound works.
    NotIntervalColorable,
    /// Some value of `t` above the reported `w` (if any) was left undecided.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WOutcome {
    /// Largest feasible `t` found. With `Unknown` status it is only a lower
    /// bound.
    pub w: Option<u32>,
    pub status: WStatus,
    pub certificate: Option<EdgeColoring>,
    /// The diameter bound the downward scan started from.
    pub cutoff: u32,
    /// Status of every `t` tried, from the cutoff downwards.
    pub trials: Vec<(u32, SolveStatus)>,
}

pub fn compute_w_exact(g: &Graph, budget: SolveBudget) -> Result<WOutcome, SolveError> {
    compute_w_exact_with(g, budget, Exec::default())
}

/// Scans `t` downward from the diameter bound (the bipartite one when it
/// applies) to the max degree; each `t` is decided separately because
/// feasibility is not monotone in `t`. The budget applies to each `t`.
pub fn compute_w_exact_with(g: &Graph, budget: SolveBudget, exec: Exec) -> Result<WOutcome, SolveError> {
    let report = bounds(g)?;
    let cutoff = report.diameter_cutoff().min(u64::from(MAX_COLORS)) as u32;
    let low = (report.max_degree as u32).max(1);
    let mut trials = Vec::new();
    let mut undecided = false;
    for t in (low..=cutoff).rev() {
        let outcome = find_interval_coloring_with(g, t, budget, exec)?;
        trials.push((t, outcome.status));
        match outcome.status {
            SolveStatus::Feasible => {
                let status = if undecided { WStatus::Unknown } else { WStatus::Exact };
                return Ok(WOutcome { w: Some(t), status, certificate: outcome.certificate, cutoff, trials });
            }
            SolveStatus::Unknown => undecided = true,
            SolveStatus::Infeasible => {}
        }
    }
    let status = if undecided { WStatus::Unknown } else { WStatus::NotIntervalColorable };
    Ok(WOutcome { w: None, status, certificate: None, cutoff, trials })
}
