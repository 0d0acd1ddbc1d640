use std::collections::BTreeMap;
use std::fmt;

use super::{spectrum, Color, ColoringError, EdgeColoring, Spectrum};
use crate::graph::{EdgeId, Graph, Vertex};

/// One way a coloring fails to be an interval coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ColorNonPositive { edge: EdgeId },
    AdjacentEdgesSameColor { vertex: Vertex, e1: EdgeId, e2: EdgeId, color: Color },
    SpectrumNotInterval { vertex: Vertex, spectrum: Spectrum },
    ColorUnused { color: Color },
}

impl Violation {
    /// Stable machine-readable name of the violated clause.
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::ColorNonPositive { .. } => "color-nonpositive",
            Violation::AdjacentEdgesSameColor { .. } => "adjacent-edges-same-color",
            Violation::SpectrumNotInterval { .. } => "spectrum-not-interval",
            Violation::ColorUnused { .. } => "color-unused",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColorNonPositive { edge } => write!(f, "{} edge={edge}", self.kind()),
            Violation::AdjacentEdgesSameColor { vertex, e1, e2, color } => {
                write!(f, "{} vertex={vertex} e1={e1} e2={e2} color={color}", self.kind())
            }
            Violation::SpectrumNotInterval { vertex, spectrum } => {
                write!(f, "{} vertex={vertex} spectrum={spectrum}", self.kind())
            }
            Violation::ColorUnused { color } => write!(f, "{} color={color}", self.kind()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// Largest color, reported only for valid colorings.
    pub t: Option<Color>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three clauses of an interval `t`-coloring with `t` the largest
/// color: incident edges get distinct colors, every spectrum is a run of
/// consecutive integers, and every color in `1..=t` is used.
///
/// All violations are collected: non-positive colors by edge, then per
/// vertex (repeated colors ordered by color, then the spectrum), then unused
/// colors in increasing order.
pub fn validate_interval(g: &Graph, c: &EdgeColoring) -> Result<ValidationReport, ColoringError> {
    c.check_total(g)?;
    let mut violations: Vec<Violation> = c
        .colors()
        .iter()
        .enumerate()
        .filter(|(_, &col)| col == 0)
        .map(|(edge, _)| Violation::ColorNonPositive { edge })
        .collect();

    for v in 0..g.vertex_count() {
        let mut by_color: BTreeMap<Color, Vec<EdgeId>> = BTreeMap::new();
        for &(_, e) in g.incident(v) {
            by_color.entry(c.color(e)).or_default().push(e);
        }
        for (&color, edges) in &by_color {
            for (i, &e1) in edges.iter().enumerate() {
                for &e2 in &edges[i + 1..] {
                    violations.push(Violation::AdjacentEdgesSameColor { vertex: v, e1, e2, color });
                }
            }
        }
        let s = spectrum(g, c, v)?;
        if !s.is_interval() {
            violations.push(Violation::SpectrumNotInterval { vertex: v, spectrum: s });
        }
    }

    let t = c.colors().iter().copied().max().unwrap_or(0);
    let mut used = vec![false; t as usize + 1];
    for &col in c.colors() {
        used[col as usize] = true;
    }
    violations.extend((1..=t).filter(|&i| !used[i as usize]).map(|color| Violation::ColorUnused { color }));

    let t = violations.is_empty().then_some(t);
    Ok(ValidationReport { t, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path};

    #[test]
    fn cycle_coloring_is_interval() {
        // C_6 as v1..v6: (v1,v6)=1, then 2,3,4 going round both ways
        let g = make_cycle(6).unwrap();
        let colors = g
            .edges()
            .iter()
            .map(|e| match (e.u, e.v) {
                (0, 5) => 1,
                (0, 1) | (4, 5) => 2,
                (1, 2) | (3, 4) => 3,
                (2, 3) => 4,
                _ => unreachable!(),
            })
            .collect();
        let report = validate_interval(&g, &EdgeColoring::new(&g, colors).unwrap()).unwrap();
        assert!(report.is_valid(), "{:?}", report.violations);
        assert_eq!(report.t, Some(4));
    }

    #[test]
    fn gap_at_path_center() {
        let g = make_path(3).unwrap();
        let report = validate_interval(&g, &EdgeColoring::new(&g, vec![1, 3]).unwrap()).unwrap();
        assert_eq!(report.t, None);
        assert_eq!(
            report.violations,
            vec![
                Violation::SpectrumNotInterval { vertex: 1, spectrum: Spectrum([1, 3].into()) },
                Violation::ColorUnused { color: 2 },
            ]
        );
    }

    #[test]
    fn colors_must_start_at_one() {
        let g = make_path(2).unwrap();
        let report = validate_interval(&g, &EdgeColoring::new(&g, vec![2]).unwrap()).unwrap();
        assert_eq!(report.violations, vec![Violation::ColorUnused { color: 1 }]);
        let shifted = EdgeColoring::new(&g, vec![2]).unwrap().normalize_to_one();
        assert!(validate_interval(&g, &shifted).unwrap().is_valid());
    }

    #[test]
    fn reports_every_violation() {
        // star with center 0: colors 1,1,4 and a zero elsewhere
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        let c = EdgeColoring::new(&g, vec![1, 1, 4, 0]).unwrap();
        let report = validate_interval(&g, &c).unwrap();
        let kinds: Vec<_> = report.violations.iter().map(|v| v.to_string()).collect();
        assert_eq!(
            kinds,
            vec![
                "color-nonpositive edge=3",
                "adjacent-edges-same-color vertex=0 e1=0 e2=1 color=1",
                "spectrum-not-interval vertex=0 spectrum={1,4}",
                "spectrum-not-interval vertex=3 spectrum={0,4}",
                "color-unused color=2",
                "color-unused color=3",
            ]
        );
    }

    #[test]
    fn non_total_is_an_error() {
        let g = make_path(3).unwrap();
        assert!(validate_interval(&g, &EdgeColoring::from_vec(vec![1])).is_err());
    }

    #[test]
    fn edgeless_graph_is_vacuously_valid() {
        let g = make_path(1).unwrap();
        let report = validate_interval(&g, &EdgeColoring::new(&g, vec![]).unwrap()).unwrap();
        assert_eq!(report.t, Some(0));
    }

    mod props {
        use proptest::prelude::*;

        use crate::coloring::{spectrum, validate_interval, EdgeColoring, Violation};
        use crate::graph::strategy::graph_and_perm;
        use crate::graph::Graph;

        fn colored(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>, EdgeColoring)> {
            graph_and_perm(max_n).prop_flat_map(|(g, perm)| {
                let m = g.edge_count();
                let colors = proptest::collection::vec(0u32..6, m).prop_map(EdgeColoring::from_vec);
                (Just(g), Just(perm), colors)
            })
        }

        /// Each edge in turn takes the first color above its seed that no
        /// earlier adjacent edge uses.
        fn greedy_proper(g: &Graph, seeds: &EdgeColoring) -> EdgeColoring {
            let mut colors: Vec<u32> = Vec::with_capacity(g.edge_count());
            for (e, edge) in g.edges().iter().enumerate() {
                let taken = |x: u32| {
                    (0..e).any(|f| {
                        let o = g.edge(f);
                        colors[f] == x && (o.u == edge.u || o.u == edge.v || o.v == edge.u || o.v == edge.v)
                    })
                };
                let first = (seeds.color(e) + 1..).find(|&x| !taken(x)).unwrap();
                colors.push(first);
            }
            EdgeColoring::from_vec(colors)
        }

        fn kinds(v: &[Violation]) -> Vec<&'static str> {
            let mut k: Vec<_> = v.iter().map(Violation::kind).collect();
            k.sort_unstable();
            k
        }

        proptest! {
            #[test]
            fn equivariant_under_relabeling((g, perm, c) in colored(7)) {
                let (h, map) = g.permuted(&perm).unwrap();
                let mut moved = vec![0; c.len()];
                for (old, &new) in map.iter().enumerate() {
                    moved[new] = c.color(old);
                }
                let a = validate_interval(&g, &c).unwrap();
                let b = validate_interval(&h, &EdgeColoring::from_vec(moved)).unwrap();
                prop_assert_eq!(a.is_valid(), b.is_valid());
                prop_assert_eq!(a.t, b.t);
                prop_assert_eq!(kinds(&a.violations), kinds(&b.violations));
            }

            #[test]
            fn proper_spectra_have_degree_size((g, _, c) in colored(7)) {
                let c = greedy_proper(&g, &c);
                for v in 0..g.vertex_count() {
                    prop_assert_eq!(spectrum(&g, &c, v).unwrap().len(), g.degree(v));
                }
            }

            #[test]
            fn deleting_an_edge_keeps_properness((g, _, c) in colored(7), pick in any::<prop::sample::Index>()) {
                prop_assume!(g.edge_count() > 0);
                let c = greedy_proper(&g, &c);
                let gone = pick.index(g.edge_count());
                let kept: Vec<usize> = (0..g.edge_count()).filter(|&e| e != gone).collect();
                let h = Graph::new(g.vertex_count(), kept.iter().map(|&e| (g.edge(e).u, g.edge(e).v))).unwrap();
                let sub = EdgeColoring::from_vec(kept.iter().map(|&e| c.color(e)).collect());
                for report in [validate_interval(&g, &c).unwrap(), validate_interval(&h, &sub).unwrap()] {
                    let clash = report.violations.iter().any(|v| matches!(v, Violation::AdjacentEdgesSameColor { .. }));
                    prop_assert!(!clash, "{:?}", report.violations);
                }
            }
        }
    }
}
