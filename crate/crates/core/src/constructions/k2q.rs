//! Interval colorings of `K_{2^q}` with `2^{q+1} - 2 - q` colors.
//!
//! No closed form is used. Colorings found offline by the solver are
//! shipped as certificate files (`data/k2q/q<q>.col`, coloring text format
//! preceded by a `# sha256 <hex>` line over the rest of the file) and are
//! re-validated whenever they are loaded. Setting [`K2Q_CACHE_ENV`] to a
//! directory makes the loader read `q<q>.col` from there instead.

use std::ops::ControlFlow;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::clique_layers::build_gdq_from;
use super::{require, ConstructionError, FamilyId, FamilyInstance, FamilyParams};
use crate::coloring::{parse_coloring, validate_interval, EdgeColoring};
use crate::graph::{make_complete, Graph, Tag, VertexLabel};
use crate::solver::{for_each_interval_coloring, SolveBudget, SolveStatus};

/// Environment variable naming a directory of `q<q>.col` certificates.
pub const K2Q_CACHE_ENV: &str = "IVC_K2Q_DIR";

const EMBEDDED: &[(u32, &str)] = &[
    (1, include_str!("../../data/k2q/q1.col")),
    (2, include_str!("../../data/k2q/q2.col")),
    (3, include_str!("../../data/k2q/q3.col")),
];

/// Where [`color_k2q_with`] looks for a certificate before searching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateSource {
    Embedded,
    Directory(PathBuf),
}

impl CertificateSource {
    /// `Directory` if [`K2Q_CACHE_ENV`] is set, `Embedded` otherwise.
    pub fn from_env() -> Self {
        match std::env::var_os(K2Q_CACHE_ENV) {
            Some(dir) if !dir.is_empty() => CertificateSource::Directory(dir.into()),
            _ => CertificateSource::Embedded,
        }
    }

    fn load(&self, q: u32) -> Result<Option<String>, ConstructionError> {
        match self {
            CertificateSource::Embedded => Ok(EMBEDDED.iter().find(|(k, _)| *k == q).map(|(_, s)| s.to_string())),
            CertificateSource::Directory(dir) => {
                let path = certificate_path(dir, q);
                match std::fs::read_to_string(&path) {
                    Ok(s) => Ok(Some(s)),
                    Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
                    Err(e) => Err(ConstructionError::Certificate {
                        q,
                        message: format!("cannot read {}: {e}", path.display()),
                    }),
                }
            }
        }
    }
}

pub fn certificate_path(dir: &Path, q: u32) -> PathBuf {
    dir.join(format!("q{q}.col"))
}

/// `2^{q+1} - 2 - q`.
pub fn k2q_colors(q: u32) -> u32 {
    (1u32 << (q + 1)) - 2 - q
}

fn clique(q: u32) -> Result<Graph, ConstructionError> {
    let k = 1usize << q;
    let g = make_complete(k)?.with_labels((0..k).map(|j| (j, VertexLabel::indexed(Tag::V, j as u32 + 1))))?;
    Ok(g)
}

pub fn color_k2q(q: u32) -> Result<FamilyInstance, ConstructionError> {
    color_k2q_with(q, &CertificateSource::from_env(), SolveBudget::default())
}

/// Loads the certificate for `q` from `source`, or searches for one with
/// `budget` when none is stored.
pub fn color_k2q_with(
    q: u32,
    source: &CertificateSource,
    budget: SolveBudget,
) -> Result<FamilyInstance, ConstructionError> {
    require((1..=6).contains(&q), || format!("k2q supports 1 <= q <= 6, got {q}"))?;
    let g = clique(q)?;
    let coloring = match source.load(q)? {
        Some(text) => parse_certificate(&g, q, &text)?,
        None => certify_k2q(q, budget)?,
    };
    let k = 1u64 << q;
    let inst = FamilyInstance {
        family: FamilyId::K2q,
        params: FamilyParams { q: Some(q), ..Default::default() },
        graph: g,
        coloring,
        expected_diameter: 1,
        expected_max_degree: k - 1,
        expected_colors: k2q_colors(q).into(),
    };
    inst.check()?;
    Ok(inst)
}

/// Certificate file contents for a coloring of `K_{2^q}`.
pub fn certificate_text(g: &Graph, coloring: &EdgeColoring) -> String {
    let body = coloring.to_text(g);
    format!("# sha256 {}\n{body}", hex::encode(Sha256::digest(body.as_bytes())))
}

/// Checks the digest line, parses the coloring and validates it as an
/// interval coloring with `2^{q+1} - 2 - q` colors.
pub fn parse_certificate(g: &Graph, q: u32, text: &str) -> Result<EdgeColoring, ConstructionError> {
    let fail = |message: String| ConstructionError::Certificate { q, message };
    let (first, body) = text.split_once('\n').ok_or_else(|| fail("missing digest line".into()))?;
    let digest = first.strip_prefix("# sha256 ").ok_or_else(|| fail("first line must be `# sha256 <hex>`".into()))?;
    let actual = hex::encode(Sha256::digest(body.as_bytes()));
    if digest != actual {
        return Err(fail(format!("digest mismatch: file says {digest}, content hashes to {actual}")));
    }
    // line numbers in errors refer to the file, which has the digest first
    let coloring = parse_coloring(g, body).map_err(|e| fail(format!("line {}: {}", e.line + 1, e.message)))?;
    let report = validate_interval(g, &coloring)?;
    if report.t != Some(k2q_colors(q)) {
        return Err(fail(format!(
            "not an interval {}-coloring ({} violations)",
            k2q_colors(q),
            report.violations.len()
        )));
    }
    Ok(coloring)
}

/// Searches for an interval `(2^{q+1} - 2 - q)`-coloring `α` of `K_{2^q}`
/// such that the layered colorings built from it for two and three layers
/// are interval colorings as well. Candidates come in search order; the
/// first that passes is returned.
pub fn certify_k2q(q: u32, budget: SolveBudget) -> Result<EdgeColoring, ConstructionError> {
    require((1..=6).contains(&q), || format!("k2q supports 1 <= q <= 6, got {q}"))?;
    let g = clique(q)?;
    let t = k2q_colors(q);
    let mut chosen = None;
    let mut failure = None;
    let (status, _) = for_each_interval_coloring(&g, t, budget, |alpha| {
        let layered_ok = [2, 3].into_iter().all(|d| match build_gdq_from(d, q, alpha) {
            Ok(inst) => inst.check().is_ok(),
            Err(e) => {
                failure = Some(e);
                false
            }
        });
        if failure.is_some() {
            return ControlFlow::Break(());
        }
        if layered_ok {
            chosen = Some(alpha.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    match (chosen, status) {
        (Some(c), _) => Ok(c),
        (None, SolveStatus::Unknown) => Err(ConstructionError::BudgetExhausted { q, t }),
        (None, _) => Err(ConstructionError::Certificate {
            q,
            message: format!("search space exhausted without a usable interval {t}-coloring"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_counts() {
        assert_eq!((k2q_colors(1), k2q_colors(2), k2q_colors(3), k2q_colors(4)), (1, 4, 11, 26));
    }

    #[test]
    fn embedded_certificates_load() {
        for (q, t) in [(1, 1), (2, 4), (3, 11)] {
            let inst = color_k2q_with(q, &CertificateSource::Embedded, SolveBudget::nodes(1)).unwrap();
            assert_eq!(inst.expected_colors, t);
            assert_eq!(inst.graph.edge_count(), (1 << q) * ((1 << q) - 1) / 2);
        }
    }

    #[test]
    fn single_edge_is_forced() {
        let inst = color_k2q_with(1, &CertificateSource::Embedded, SolveBudget::nodes(1)).unwrap();
        assert_eq!(inst.coloring.colors(), &[1]);
    }

    #[test]
    fn search_finds_k4_certificate() {
        let c = certify_k2q(2, SolveBudget::default()).unwrap();
        assert_eq!(validate_interval(&clique(2).unwrap(), &c).unwrap().t, Some(4));
    }

    #[test]
    fn certificate_text_round_trip() {
        let g = clique(2).unwrap();
        let c = certify_k2q(2, SolveBudget::default()).unwrap();
        let text = certificate_text(&g, &c);
        assert!(text.starts_with("# sha256 "));
        assert_eq!(parse_certificate(&g, 2, &text).unwrap(), c);
    }

    #[test]
    fn tampered_certificates_are_rejected() {
        let g = clique(2).unwrap();
        let text = certificate_text(&g, &certify_k2q(2, SolveBudget::default()).unwrap());
        let flipped = text.replacen("k 0 1 ", "k 0 1 9", 1);
        assert!(matches!(parse_certificate(&g, 2, &flipped), Err(ConstructionError::Certificate { .. })));
        // a consistent digest over a coloring that is not interval
        let bad = EdgeColoring::new(&g, vec![1, 2, 3, 4, 5, 6]).unwrap();
        let err = parse_certificate(&g, 2, &certificate_text(&g, &bad)).unwrap_err();
        assert!(err.to_string().contains("not an interval"), "{err}");
        assert!(parse_certificate(&g, 2, "c 6\n").is_err());
    }

    #[test]
    fn directory_source_falls_back_to_search() {
        let dir = tempfile::tempdir().unwrap();
        let source = CertificateSource::Directory(dir.path().to_path_buf());
        let inst = color_k2q_with(2, &source, SolveBudget::default()).unwrap();
        assert_eq!(inst.expected_colors, 4);

        std::fs::write(certificate_path(dir.path(), 2), "garbage\n").unwrap();
        assert!(color_k2q_with(2, &source, SolveBudget::default()).is_err());
    }

    #[test]
    fn tiny_budget_reports_exhaustion() {
        let err = certify_k2q(3, SolveBudget::nodes(10)).unwrap_err();
        assert_eq!(err, ConstructionError::BudgetExhausted { q: 3, t: 11 });
    }
}
