use proptest::prelude::*;

use interval_coloring::coloring::{bounds, validate_interval, EdgeColoring};
use interval_coloring::constructions::{bipartite_extremal, build_gdq, FamilyInstance};

fn relabeled_reversed(inst: &FamilyInstance) -> (interval_coloring::Graph, EdgeColoring) {
    let n = inst.graph.vertex_count();
    let perm: Vec<usize> = (0..n).rev().collect();
    let (g, map) = inst.graph.permuted(&perm).unwrap();
    (g, inst.coloring.transport(&map))
}

fn check(inst: &FamilyInstance) -> Result<(), TestCaseError> {
    prop_assert!(inst.check().is_ok(), "{:?}", inst.check());
    let t = validate_interval(&inst.graph, &inst.coloring).unwrap().t;
    prop_assert_eq!(t.map(u64::from), Some(inst.expected_colors));
    prop_assert!(inst.expected_colors <= bounds(&inst.graph).unwrap().tightest());

    let mirrored = validate_interval(&inst.graph, &inst.coloring.mirrored()).unwrap();
    prop_assert_eq!(mirrored.t, t);
    let (g, c) = relabeled_reversed(inst);
    prop_assert_eq!(validate_interval(&g, &c).unwrap().t, t);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bipartite_families(d in 2u32..=11, delta in 2u32..=7) {
        let inst = bipartite_extremal(d, delta).unwrap();
        prop_assert_eq!(inst.expected_colors, u64::from(d * (delta - 1) + 1));
        prop_assert_eq!(bounds(&inst.graph).unwrap().bipartite_diameter_bound, Some(inst.expected_colors));
        check(&inst)?;
    }

    #[test]
    fn layered_cliques(d in 1u32..=9, q in 1u32..=3) {
        check(&build_gdq(d, q).unwrap())?;
    }
}

#[test]
fn parameter_preconditions() {
    assert!(bipartite_extremal(1, 3).is_err());
    assert!(bipartite_extremal(3, 1).is_err());
    assert!(build_gdq(0, 2).is_err());
    assert!(build_gdq(2, 0).is_err());
}
