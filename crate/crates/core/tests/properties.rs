mod common;

use common::props::*;
use proptest::prelude::*;
use proptest::sample::Index;

use spectra::coloring::{apply_color_permutation, color_vizing, validate_coloring, ColorPermutation, EdgeColoring};
use spectra::graph::Graph;
use spectra::spectrum::{analyze, spectrum_of};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn permuting_colors_keeps_validity((g, p) in graph_with_permutation()) {
        permutation_keeps_validity(&g, &p)?;
    }

    #[test]
    fn kempe_swap_is_proper_and_involutive(g in connected_graph(), v in any::<Index>(), a in any::<Index>(), b in any::<Index>()) {
        kempe_involution(&g, v, a, b)?;
    }

    #[test]
    fn transpositions_and_shifts_are_bijections(t in 2usize..=40, j in any::<Index>(), i in any::<Index>()) {
        remaps_are_bijections(t, j, i)?;
    }

    #[test]
    fn construction_remaps_are_bijections_on_biregular((g, b, _) in biregular()) {
        construction_remaps_are_bijections(&g, &b)?;
    }

    #[test]
    fn deficiency_classes_partition_domain((g, b, k) in biregular(), s in steps(8)) {
        deficiency_partition(&g, &b, k, &s)?;
    }

    #[test]
    fn divisibility_on_generated_graphs((g, b, k) in biregular()) {
        side_divisibility(&g, &b, k)?;
    }

    #[test]
    fn y_side_is_persistent_under_any_k_coloring(((g, b, k), p) in biregular_with_permutation(), s in steps(12)) {
        y_side_persistent(&g, &b, k, &p, &s)?;
    }

    #[test]
    fn reversal_keeps_interval_count(g in connected_graph()) {
        let c = color_vizing(&g);
        let r = apply_color_permutation(&c, &ColorPermutation::reversal(c.t())).unwrap();
        prop_assert_eq!(analyze(&g, &c).unwrap().f_i, analyze(&g, &r).unwrap().f_i);
    }

    #[test]
    fn relabeling_transports_spectra((g, perm) in connected_graph().prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })) {
        let c = color_vizing(&g);
        let h = g.relabel(&perm).unwrap();
        prop_assert!(validate_coloring(&h, &c).is_valid());
        let (rg, rh) = (analyze(&g, &c).unwrap(), analyze(&h, &c).unwrap());
        prop_assert_eq!((rg.f_i, rg.f_pi), (rh.f_i, rh.f_pi));
        for (v, &w) in perm.iter().enumerate() {
            prop_assert_eq!(spectrum_of(&g, &c, v), spectrum_of(&h, &c, w));
        }
    }

    #[test]
    fn text_round_trips(g in connected_graph()) {
        let back = Graph::parse(&g.to_text()).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
        let c = color_vizing(&g);
        let cb = EdgeColoring::parse(&c.to_text()).unwrap();
        prop_assert_eq!(cb.colors(), c.colors());
        prop_assert_eq!(cb.t(), c.t());
        let r = analyze(&g, &c).unwrap();
        prop_assert_eq!(common::counts_of(&g, &c), (r.f_i, r.f_pi));
    }
}
