//! Bipartite families of diameter `d` and max degree `Δ` whose interval
//! colorings use exactly `d(Δ - 1) + 1` colors.

use super::{require, ConstructionError, FamilyId, FamilyInstance, FamilyParams, LabeledBuilder};
use crate::graph::{Tag, VertexLabel};

fn tight_colors(d: u32, delta: u32) -> u64 {
    u64::from(d) * u64::from(delta - 1) + 1
}

fn instance(
    family: FamilyId,
    params: FamilyParams,
    builder: LabeledBuilder,
    d: u32,
    delta: u32,
) -> Result<FamilyInstance, ConstructionError> {
    let (graph, coloring) = builder.finish()?;
    Ok(FamilyInstance {
        family,
        params,
        graph,
        coloring,
        expected_diameter: d.into(),
        expected_max_degree: delta.into(),
        expected_colors: tight_colors(d, delta),
    })
}

fn u(j: u32, i: u32) -> VertexLabel {
    VertexLabel::layered(Tag::U, j, i)
}

fn v(j: u32, i: u32) -> VertexLabel {
    VertexLabel::layered(Tag::V, j, i)
}

/// `C_{2d}` on `v_1..v_{2d}`: `(v_1, v_{2d})` gets 1, and both
/// `(v_i, v_{i+1})` and `(v_{2d-i+1}, v_{2d-i})` get `i + 1` for `i = 1..d`.
pub fn build_cycle_family(d: u32) -> Result<FamilyInstance, ConstructionError> {
    require(d >= 2, || format!("cycle family needs d >= 2, got {d}"))?;
    let n = 2 * d;
    let vx = |i: u32| VertexLabel::indexed(Tag::V, i);
    let mut b = LabeledBuilder::default();
    for i in 1..=n {
        b.vertex(vx(i));
    }
    b.edge(vx(1), vx(n), 1);
    for i in 1..=d {
        b.edge(vx(i), vx(i + 1), i + 1);
        if i < d {
            // for i = d both rules name the same middle edge
            b.edge(vx(n - i + 1), vx(n - i), i + 1);
        }
    }
    instance(FamilyId::Cycle, FamilyParams { d: Some(d), ..Default::default() }, b, d, 2)
}

/// `K_{Δ,Δ}` with `(u_i, v_j)` colored `i + j - 1`.
pub fn build_kbb(delta: u32) -> Result<FamilyInstance, ConstructionError> {
    require(delta >= 2, || format!("kbb needs delta >= 2, got {delta}"))?;
    let mut b = LabeledBuilder::default();
    let (ux, vx) = (|i| VertexLabel::indexed(Tag::U, i), |j| VertexLabel::indexed(Tag::V, j));
    for i in 1..=delta {
        b.vertex(ux(i));
    }
    for i in 1..=delta {
        for j in 1..=delta {
            b.edge(ux(i), vx(j), i + j - 1);
        }
    }
    instance(FamilyId::Kbb, FamilyParams { delta: Some(delta), ..Default::default() }, b, 2, delta)
}

/// Declares block `i` (`u_1..u_Δ`, then `v_1..v_Δ`) and adds its edges
/// except the pairs in `skip`, colored by `color(j, k)`.
fn block(b: &mut LabeledBuilder, i: u32, delta: u32, skip: &[(u32, u32)], color: impl Fn(u32, u32) -> u32) {
    for j in 1..=delta {
        b.vertex(u(j, i));
    }
    for j in 1..=delta {
        b.vertex(v(j, i));
    }
    for j in 1..=delta {
        for k in 1..=delta {
            if !skip.contains(&(j, k)) {
                b.edge(u(j, i), v(k, i), color(j, k));
            }
        }
    }
}

/// Even diameter `d >= 4`, `Δ >= 3`: a chain of `d/2` blocks, each
/// `K_{Δ,Δ}` minus one or two corner edges, joined by crossing connectors.
///
/// Block `i` edge `(u_j, v_k)` gets `(i-1)(2Δ-1) + j + k - i`; both
/// connectors into block `i` get `(i-1)(2Δ-1) - i + 2`.
pub fn build_gdd_even(d: u32, delta: u32) -> Result<FamilyInstance, ConstructionError> {
    require(d >= 4 && d.is_multiple_of(2), || format!("gdd-even needs an even d >= 4, got {d}"))?;
    require(delta >= 3, || format!("gdd-even needs delta >= 3, got {delta}"))?;
    let h = d / 2;
    let span = 2 * delta - 1;
    let mut b = LabeledBuilder::default();
    for i in 1..=h {
        let skip: &[(u32, u32)] = if i == 1 {
            &[(delta, delta)]
        } else if i == h {
            &[(1, 1)]
        } else {
            &[(1, 1), (delta, delta)]
        };
        block(&mut b, i, delta, skip, |j, k| (i - 1) * span + j + k - i);
    }
    for i in 2..=h {
        let c = (i - 1) * span + 2 - i;
        b.edge(u(delta, i - 1), v(1, i), c);
        b.edge(v(delta, i - 1), u(1, i), c);
    }
    let params = FamilyParams { d: Some(d), delta: Some(delta), ..Default::default() };
    instance(FamilyId::GddEven, params, b, d, delta)
}

/// Diameter 3, `Δ >= 3`: `K_{Δ-1,Δ}` on `u, v`, a second copy on `u', v'`,
/// and the matching `(v_i, v'_i)`.
pub fn build_gdd_3(delta: u32) -> Result<FamilyInstance, ConstructionError> {
    require(delta >= 3, || format!("gdd-3 needs delta >= 3, got {delta}"))?;
    let lab = VertexLabel::indexed;
    let mut b = LabeledBuilder::default();
    for (tag, count) in [(Tag::U, delta - 1), (Tag::UPrime, delta - 1), (Tag::V, delta), (Tag::VPrime, delta)] {
        for i in 1..=count {
            b.vertex(lab(tag, i));
        }
    }
    for i in 1..delta {
        for j in 1..=delta {
            b.edge(lab(Tag::U, i), lab(Tag::V, j), i + j - 1);
            b.edge(lab(Tag::UPrime, i), lab(Tag::VPrime, j), delta + i + j - 1);
        }
    }
    for i in 1..=delta {
        b.edge(lab(Tag::V, i), lab(Tag::VPrime, i), delta + i - 1);
    }
    let params = FamilyParams { d: Some(3), delta: Some(delta), ..Default::default() };
    instance(FamilyId::Gdd3, params, b, 3, delta)
}

/// Odd diameter `d >= 5`, `Δ >= 3`: `⌊d/2⌋` blocks as in the even case,
/// except that blocks 1 and 2 are joined through the adjacent hubs `a`
/// and `c`, each carrying `Δ - 3` pendant vertices.
pub fn build_gdd_odd(d: u32, delta: u32) -> Result<FamilyInstance, ConstructionError> {
    require(d >= 5 && d % 2 == 1, || format!("gdd-odd needs an odd d >= 5, got {d}"))?;
    require(delta >= 3, || format!("gdd-odd needs delta >= 3, got {delta}"))?;
    let h = d / 2;
    let span = 2 * delta - 1;
    let (a, c) = (VertexLabel::new(Tag::A), VertexLabel::new(Tag::C));
    let pend_a = |i| VertexLabel::indexed(Tag::PendA, i);
    let pend_c = |i| VertexLabel::indexed(Tag::PendC, i);

    let mut b = LabeledBuilder::default();
    b.vertex(a);
    for i in 1..=delta - 3 {
        b.vertex(pend_a(i));
    }
    b.vertex(c);
    for i in 1..=delta - 3 {
        b.vertex(pend_c(i));
    }

    block(&mut b, 1, delta, &[(delta, delta)], |j, k| j + k - 1);

    b.edge(u(delta, 1), a, 2 * delta - 1);
    b.edge(v(delta, 1), c, 2 * delta - 1);
    b.edge(a, c, 2 * delta);
    for i in 1..=delta - 3 {
        b.edge(a, pend_a(i), 2 * delta + i);
        b.edge(c, pend_c(i), 2 * delta + i);
    }

    for i in 2..=h {
        let skip: &[(u32, u32)] = if i == h { &[(1, 1)] } else { &[(1, 1), (delta, delta)] };
        block(&mut b, i, delta, skip, |j, k| (i - 1) * span + j + k - i + delta - 1);
    }
    b.edge(a, u(1, 2), 3 * delta - 2);
    b.edge(c, v(1, 2), 3 * delta - 2);
    for i in 3..=h {
        let col = (i - 1) * span + delta + 1 - i;
        b.edge(u(delta, i - 1), v(1, i), col);
        b.edge(v(delta, i - 1), u(1, i), col);
    }
    let params = FamilyParams { d: Some(d), delta: Some(delta), ..Default::default() };
    instance(FamilyId::GddOdd, params, b, d, delta)
}

/// The tight bipartite family for diameter `d >= 2` and max degree
/// `Δ >= 2`, picking the construction by case: `C_{2d}` when `Δ = 2`,
/// `K_{Δ,Δ}` when `d = 2`, otherwise by the parity of `d`.
pub fn bipartite_extremal(d: u32, delta: u32) -> Result<FamilyInstance, ConstructionError> {
    require(d >= 2 && delta >= 2, || format!("need d >= 2 and delta >= 2, got d={d}, delta={delta}"))?;
    match (d, delta) {
        (_, 2) => build_cycle_family(d),
        (2, _) => build_kbb(delta),
        (3, _) => build_gdd_3(delta),
        (d, _) if d.is_multiple_of(2) => build_gdd_even(d, delta),
        _ => build_gdd_odd(d, delta),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{bounds, color_count, spectrum};
    use crate::graph::stats;

    fn color_between(inst: &FamilyInstance, a: VertexLabel, b: VertexLabel) -> u32 {
        let g = &inst.graph;
        let e = g.edge_id(g.find_label(&a).unwrap(), g.find_label(&b).unwrap()).unwrap();
        inst.coloring.color(e)
    }

    #[test]
    fn four_cycle_colors() {
        let inst = build_cycle_family(2).unwrap();
        let vx = |i| VertexLabel::indexed(Tag::V, i);
        assert_eq!(color_between(&inst, vx(1), vx(4)), 1);
        assert_eq!(color_between(&inst, vx(1), vx(2)), 2);
        assert_eq!(color_between(&inst, vx(2), vx(3)), 3);
        assert_eq!(color_between(&inst, vx(4), vx(3)), 2);
        inst.check().unwrap();
        assert_eq!(inst.expected_colors, 3);
    }

    #[test]
    fn longer_cycles() {
        let c6 = build_cycle_family(3).unwrap();
        c6.check().unwrap();
        assert_eq!(color_count(&c6.coloring), Ok(4));
        let c10 = build_cycle_family(5).unwrap();
        c10.check().unwrap();
        assert_eq!(color_count(&c10.coloring), Ok(6));
        assert_eq!(bounds(&c10.graph).unwrap().bipartite_diameter_bound, Some(6));
        assert!(build_cycle_family(1).is_err());
    }

    #[test]
    fn kbb_examples() {
        let k2 = build_kbb(2).unwrap();
        k2.check().unwrap();
        let u1 = k2.graph.find_label(&VertexLabel::indexed(Tag::U, 1)).unwrap();
        let u2 = k2.graph.find_label(&VertexLabel::indexed(Tag::U, 2)).unwrap();
        assert_eq!(spectrum(&k2.graph, &k2.coloring, u1).unwrap().0, [1, 2].into());
        assert_eq!(spectrum(&k2.graph, &k2.coloring, u2).unwrap().0, [2, 3].into());
        assert_eq!(build_kbb(3).unwrap().expected_colors, 5);
        let k5 = build_kbb(5).unwrap();
        k5.check().unwrap();
        for x in 0..k5.graph.vertex_count() {
            let s = spectrum(&k5.graph, &k5.coloring, x).unwrap();
            assert!(s.is_interval() && s.len() == 5);
        }
        assert!(build_kbb(1).is_err());
    }

    #[test]
    fn even_diameter_four() {
        let inst = build_gdd_even(4, 3).unwrap();
        inst.check().unwrap();
        assert_eq!(inst.graph.edge_count(), 8 + 8 + 2);
        assert_eq!(color_count(&inst.coloring), Ok(9));
        assert_eq!(color_between(&inst, u(3, 1), v(1, 2)), 5);
        assert_eq!(color_between(&inst, v(3, 1), u(1, 2)), 5);
    }

    #[test]
    fn even_diameter_six_is_regular() {
        let inst = build_gdd_even(6, 4).unwrap();
        inst.check().unwrap();
        assert_eq!(inst.expected_colors, 19);
        let g = &inst.graph;
        assert!((0..g.vertex_count()).all(|x| g.degree(x) == 4));
        assert!(stats(g).bipartite);
    }

    #[test]
    fn even_rejects_bad_parameters() {
        assert!(build_gdd_even(5, 3).is_err());
        assert!(build_gdd_even(2, 3).is_err());
        assert!(build_gdd_even(4, 2).is_err());
    }

    #[test]
    fn diameter_three() {
        let inst = build_gdd_3(3).unwrap();
        inst.check().unwrap();
        assert_eq!((inst.graph.vertex_count(), inst.graph.edge_count()), (10, 15));
        assert_eq!(inst.expected_colors, 7);
        let lab = VertexLabel::indexed;
        assert_eq!(color_between(&inst, lab(Tag::V, 2), lab(Tag::VPrime, 2)), 4);
        let five = build_gdd_3(5).unwrap();
        five.check().unwrap();
        assert_eq!(five.expected_colors, 13);
        assert!((0..five.graph.vertex_count()).all(|x| five.graph.degree(x) == 5));
        assert!(build_gdd_3(2).is_err());
    }

    #[test]
    fn odd_diameter_five() {
        let inst = build_gdd_odd(5, 3).unwrap();
        inst.check().unwrap();
        assert_eq!(inst.expected_colors, 11);
        assert!(inst.graph.labels().values().all(|l| !matches!(l.tag, Tag::PendA | Tag::PendC)));

        let four = build_gdd_odd(5, 4).unwrap();
        four.check().unwrap();
        let (a, c) = (VertexLabel::new(Tag::A), VertexLabel::new(Tag::C));
        assert_eq!(color_between(&four, a, c), 8);
        assert_eq!(color_between(&four, a, VertexLabel::indexed(Tag::PendA, 1)), 9);
        assert_eq!(color_between(&four, a, u(1, 2)), 10);
        assert_eq!(color_between(&four, c, v(1, 2)), 10);
    }

    #[test]
    fn odd_diameter_seven() {
        let inst = build_gdd_odd(7, 4).unwrap();
        inst.check().unwrap();
        assert_eq!(inst.expected_colors, 22);
        let g = &inst.graph;
        assert_eq!((0..g.vertex_count()).map(|x| g.degree(x)).min(), Some(1));
        assert!(build_gdd_odd(7, 2).is_err());
        assert!(build_gdd_odd(6, 3).is_err());
        assert!(build_gdd_odd(3, 3).is_err());
    }

    #[test]
    fn case_routing() {
        assert_eq!(bipartite_extremal(4, 2).unwrap().family, FamilyId::Cycle);
        assert_eq!(bipartite_extremal(2, 5).unwrap().family, FamilyId::Kbb);
        assert_eq!(bipartite_extremal(3, 4).unwrap().family, FamilyId::Gdd3);
        assert_eq!(bipartite_extremal(8, 3).unwrap().family, FamilyId::GddEven);
        assert_eq!(bipartite_extremal(9, 3).unwrap().family, FamilyId::GddOdd);
        assert!(bipartite_extremal(1, 3).is_err());
    }
}
