//! Extremal graph families together with their closed-form interval
//! colorings.
//!
//! Every builder computes the expected diameter, max degree and number of
//! colors from closed formulas in the parameters; [`FamilyInstance::check`]
//! then compares them with the object that was actually built.

mod bipartite;
mod clique_layers;
mod k2q;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

pub use bipartite::{bipartite_extremal, build_cycle_family, build_gdd_3, build_gdd_even, build_gdd_odd, build_kbb};
pub use clique_layers::{build_gdq, theorem5_expected, GdqExpected};
pub use k2q::{
    certificate_text, certify_k2q, color_k2q, color_k2q_with, k2q_colors, parse_certificate, CertificateSource,
    K2Q_CACHE_ENV,
};

use crate::coloring::{validate_interval, Color, ColoringError, EdgeColoring, Violation};
use crate::graph::{stats, Diameter, Graph, GraphError, VertexLabel};
use crate::solver::SolveError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyId {
    Cycle,
    Kbb,
    K2q,
    Gdq,
    GddEven,
    Gdd3,
    GddOdd,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::Cycle,
        FamilyId::Kbb,
        FamilyId::K2q,
        FamilyId::Gdq,
        FamilyId::GddEven,
        FamilyId::Gdd3,
        FamilyId::GddOdd,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::Cycle => "cycle",
            FamilyId::Kbb => "kbb",
            FamilyId::K2q => "k2q",
            FamilyId::Gdq => "gdq",
            FamilyId::GddEven => "gdd-even",
            FamilyId::Gdd3 => "gdd-3",
            FamilyId::GddOdd => "gdd-odd",
        }
    }

    /// Families whose color count equals the bipartite diameter bound.
    pub fn is_bipartite_extremal(self) -> bool {
        !matches!(self, FamilyId::K2q | FamilyId::Gdq)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| ConstructionError::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// Parameters a family was built with; unused ones are `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub d: Option<u32>,
    pub q: Option<u32>,
    pub delta: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("{0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("certificate for K_{{2^{q}}}: {message}")]
    Certificate { q: u32, message: String },
    #[error("no interval coloring of K_{{2^{q}}} with {t} colors found within the search budget")]
    BudgetExhausted { q: u32, t: u32 },
    #[error("built instance does not match its formulas: {0}")]
    Mismatch(#[from] InstanceMismatch),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InstanceMismatch {
    #[error("coloring is not an interval coloring ({} violations, first: {})", .0.len(), .0[0])]
    NotInterval(Vec<Violation>),
    #[error("expected {expected} colors, coloring uses {found}")]
    Colors { expected: u64, found: u64 },
    #[error("expected diameter {expected}, graph has {found}")]
    Diameter { expected: u64, found: Diameter },
    #[error("expected max degree {expected}, graph has {found}")]
    MaxDegree { expected: u64, found: u64 },
}

/// A built family member with its coloring and formula-derived statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: FamilyId,
    pub params: FamilyParams,
    pub graph: Graph,
    pub coloring: EdgeColoring,
    pub expected_diameter: u64,
    pub expected_max_degree: u64,
    pub expected_colors: u64,
}

impl FamilyInstance {
    /// Validates the coloring and compares color count, diameter and max
    /// degree of the built object with the expected values.
    pub fn check(&self) -> Result<(), InstanceMismatch> {
        let report = validate_interval(&self.graph, &self.coloring).expect("builders produce total colorings");
        if !report.is_valid() {
            return Err(InstanceMismatch::NotInterval(report.violations));
        }
        let t = u64::from(report.t.unwrap_or(0));
        if t != self.expected_colors {
            return Err(InstanceMismatch::Colors { expected: self.expected_colors, found: t });
        }
        let s = stats(&self.graph);
        if s.diameter != Diameter::Finite(self.expected_diameter as usize) {
            return Err(InstanceMismatch::Diameter { expected: self.expected_diameter, found: s.diameter });
        }
        if s.max_degree as u64 != self.expected_max_degree {
            return Err(InstanceMismatch::MaxDegree { expected: self.expected_max_degree, found: s.max_degree as u64 });
        }
        Ok(())
    }
}

/// Collects labeled vertices and colored edges, then hands out dense ids in
/// first-mention order.
#[derive(Default)]
struct LabeledBuilder {
    labels: Vec<VertexLabel>,
    ids: HashMap<VertexLabel, usize>,
    edges: Vec<(usize, usize, Color)>,
}

impl LabeledBuilder {
    fn vertex(&mut self, label: VertexLabel) -> usize {
        *self.ids.entry(label).or_insert_with(|| {
            self.labels.push(label);
            self.labels.len() - 1
        })
    }

    fn edge(&mut self, a: VertexLabel, b: VertexLabel, color: Color) {
        let (a, b) = (self.vertex(a), self.vertex(b));
        self.edges.push((a, b, color));
    }

    fn finish(self) -> Result<(Graph, EdgeColoring), ConstructionError> {
        let g = Graph::new(self.labels.len(), self.edges.iter().map(|&(a, b, _)| (a, b)))?
            .with_labels(self.labels.into_iter().enumerate())?;
        let mut colors = vec![0; g.edge_count()];
        for (a, b, c) in self.edges {
            colors[g.edge_id(a, b).expect("edge was inserted")] = c;
        }
        let coloring = EdgeColoring::new(&g, colors)?;
        Ok((g, coloring))
    }
}

pub(crate) fn require(cond: bool, message: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if cond {
        Ok(())
    } else {
        Err(ConstructionError::InvalidParameter(message()))
    }
}

/// Builds any family from its id and parameters.
pub fn build_family(family: FamilyId, params: FamilyParams) -> Result<FamilyInstance, ConstructionError> {
    let need = |v: Option<u32>, name: &str| {
        v.ok_or_else(|| ConstructionError::InvalidParameter(format!("family {family} needs --{name}")))
    };
    match family {
        FamilyId::Cycle => build_cycle_family(need(params.d, "d")?),
        FamilyId::Kbb => build_kbb(need(params.delta, "delta")?),
        FamilyId::K2q => color_k2q(need(params.q, "q")?),
        FamilyId::Gdq => build_gdq(need(params.d, "d")?, need(params.q, "q")?),
        FamilyId::GddEven => build_gdd_even(need(params.d, "d")?, need(params.delta, "delta")?),
        FamilyId::Gdd3 => build_gdd_3(need(params.delta, "delta")?),
        FamilyId::GddOdd => build_gdd_odd(need(params.d, "d")?, need(params.delta, "delta")?),
    }
}
