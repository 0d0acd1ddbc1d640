//! `P_d □ K_{2^q}`: `d` layers of `K_{2^q}` joined by perfect matchings
//! between consecutive layers.

use super::k2q::{color_k2q, k2q_colors};
use super::{require, ConstructionError, FamilyId, FamilyInstance, FamilyParams};
use crate::coloring::{spectrum, Color, EdgeColoring};
use crate::graph::{cartesian_product, make_complete, make_path, Tag, VertexLabel};

/// Max degree and guaranteed number of colors of `P_d □ K_{2^q}`, in the
/// form `(d+1)(Δ-1) - q + {2, 1, -2}` for `d = 1`, `d = 2`, `d >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GdqExpected {
    pub max_degree: u64,
    pub w_lower: u64,
}

pub fn theorem5_expected(d: u32, q: u32) -> GdqExpected {
    assert!(d >= 1 && (1..62).contains(&q), "need d >= 1 and 1 <= q < 62");
    let k = 1i64 << q;
    let (d, q) = (i64::from(d), i64::from(q));
    let (delta, offset) = match d {
        1 => (k - 1, 2),
        2 => (k, 1),
        _ => (k + 1, -2),
    };
    GdqExpected { max_degree: delta as u64, w_lower: ((d + 1) * (delta - 1) - q + offset) as u64 }
}

/// Number of colors of the layered coloring: `2^{q+1} - 2 - q` for one
/// layer, then `2^q` more per extra layer.
fn layered_colors(d: u32, q: u32) -> u64 {
    let k = 1u64 << q;
    match d {
        1 => u64::from(k2q_colors(q)),
        2 => 3 * k - 2 - u64::from(q),
        _ => (u64::from(d) + 1) * k - 2 - u64::from(q),
    }
}

pub fn build_gdq(d: u32, q: u32) -> Result<FamilyInstance, ConstructionError> {
    require(d >= 1, || format!("gdq needs d >= 1, got {d}"))?;
    let alpha = color_k2q(q)?;
    let inst = build_gdq_from(d, q, &alpha.coloring)?;
    inst.check()?;
    Ok(inst)
}

/// Layer `i` (1-based) gets `alpha` shifted by `(i-1)2^q`; the matching edge
/// from `v_j^(i)` up to `v_j^(i+1)` gets one more than the largest layer
/// color at `v_j^(i)`. Not validated here.
pub(crate) fn build_gdq_from(d: u32, q: u32, alpha: &EdgeColoring) -> Result<FamilyInstance, ConstructionError> {
    require(d >= 1, || format!("gdq needs d >= 1, got {d}"))?;
    require((1..=6).contains(&q), || format!("gdq supports 1 <= q <= 6, got {q}"))?;
    let k = 1usize << q;
    let clique = make_complete(k)?;
    let g = cartesian_product(&make_path(d as usize)?, &clique)?;
    let labels =
        (0..g.vertex_count()).map(|x| (x, VertexLabel::layered(Tag::V, (x % k) as u32 + 1, (x / k) as u32 + 1)));
    let g = g.with_labels(labels)?;

    // colors on the layer cliques only
    let layer_colors: Vec<Option<Color>> = g
        .edges()
        .iter()
        .map(|e| {
            let layer = e.u / k;
            (layer == e.v / k).then(|| {
                let inner = clique.edge_id(e.u % k, e.v % k).expect("layer edge is a clique edge");
                alpha.color(inner) + (layer * k) as Color
            })
        })
        .collect();
    let mut colors = Vec::with_capacity(g.edge_count());
    for (id, e) in g.edges().iter().enumerate() {
        let c = match layer_colors[id] {
            Some(c) => c,
            // e.u is the endpoint in the lower layer
            None => spectrum(&g, &layer_colors, e.u)?.max().unwrap_or(0) + 1,
        };
        colors.push(c);
    }
    let expected = theorem5_expected(d, q);
    Ok(FamilyInstance {
        family: FamilyId::Gdq,
        params: FamilyParams { d: Some(d), q: Some(q), delta: None },
        coloring: EdgeColoring::new(&g, colors)?,
        graph: g,
        expected_diameter: d.into(),
        expected_max_degree: expected.max_degree,
        expected_colors: layered_colors(d, q),
    })
}
