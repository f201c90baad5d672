use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::TestCaseError;

use spectra::bounds::verify_remark2;
use spectra::coloring::{
    apply_color_permutation, color_bipartite_delta, color_vizing, kempe_swap, validate_coloring, ColorPermutation,
    ColoringError, EdgeColoring,
};
use spectra::construct::{orient_biregular, thm5_biregular_interval, thm6_biregular_persistent};
use spectra::graph::{bipartition, gen_biregular, Bipartition, Graph};
use spectra::spectrum::{deficiency_classes, is_persistent_interval, spectrum_of};

pub type Outcome = Result<(), TestCaseError>;
pub type Steps = Vec<(Index, Index, Index)>;

/// Connected graph on `2..=8` vertices: a random spanning tree plus extra edges.
pub fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            (
                Just(n),
                parents,
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

/// `gen_biregular` outputs, oriented with X as the degree-`(k-1)` side.
pub fn biregular() -> impl Strategy<Value = (Graph, Bipartition, usize)> {
    (3usize..=5, 1usize..=3, any::<u64>()).prop_filter_map("generation failed", |(k, m, seed)| {
        if k * m > 10 {
            return None;
        }
        let g = gen_biregular(k, m, seed).ok()?;
        let b = orient_biregular(&g, &bipartition(&g).unwrap()).unwrap();
        Some((g, b, k))
    })
}

pub fn permutation(t: usize) -> impl Strategy<Value = ColorPermutation> {
    Just((1..=t).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|m| ColorPermutation::new(m).unwrap())
}

pub fn graph_with_permutation() -> impl Strategy<Value = (Graph, ColorPermutation)> {
    connected_graph().prop_flat_map(|g| {
        let t = color_vizing(&g).t();
        (Just(g), permutation(t))
    })
}

pub fn biregular_with_permutation() -> impl Strategy<Value = ((Graph, Bipartition, usize), ColorPermutation)> {
    biregular().prop_flat_map(|f| {
        let k = f.2;
        (Just(f), permutation(k))
    })
}

pub fn steps(max: usize) -> impl Strategy<Value = Steps> {
    proptest::collection::vec(any::<(Index, Index, Index)>(), 0..max)
}

/// Random walk of Kempe swaps; every step stays a proper coloring.
pub fn kempe_walk(g: &Graph, mut c: EdgeColoring, steps: &[(Index, Index, Index)]) -> EdgeColoring {
    for (v, a, b) in steps {
        let t = c.t();
        let (v, a, b) = (v.index(g.vertex_count()), a.index(t) + 1, b.index(t) + 1);
        if a == b {
            continue;
        }
        if let Ok(s) = kempe_swap(g, &c, v, a, b) {
            c = s.coloring;
        }
    }
    c
}

fn is_bijection(p: &ColorPermutation) -> bool {
    let mut image: Vec<_> = (1..=p.t()).map(|c| p.image(c)).collect();
    image.sort_unstable();
    image == (1..=p.t()).collect::<Vec<_>>()
}

pub fn permutation_keeps_validity(g: &Graph, p: &ColorPermutation) -> Outcome {
    let c = color_vizing(g);
    prop_assert!(validate_coloring(g, &c).is_valid());
    let q = apply_color_permutation(&c, p).unwrap();
    prop_assert!(validate_coloring(g, &q).is_valid());
    Ok(())
}

pub fn kempe_involution(g: &Graph, v: Index, a: Index, b: Index) -> Outcome {
    let c = color_vizing(g);
    let t = c.t();
    let (v, a, b) = (v.index(g.vertex_count()), a.index(t) + 1, b.index(t) + 1);
    if a == b {
        return Ok(());
    }
    match kempe_swap(g, &c, v, a, b) {
        Ok(s) => {
            prop_assert!(validate_coloring(g, &s.coloring).is_proper());
            prop_assert_eq!(s.path.len(), s.edges.len() + 1);
            let back = kempe_swap(g, &s.coloring, v, a, b).unwrap();
            prop_assert_eq!(back.coloring.colors(), c.colors());
            let from_far = kempe_swap(g, &s.coloring, s.far_end(), a, b).unwrap();
            prop_assert_eq!(from_far.coloring.colors(), c.colors());
            prop_assert_eq!(from_far.far_end(), v);
        }
        Err(e) => {
            let expected = matches!(
                e,
                ColoringError::StartHasBoth { .. } | ColoringError::StartHasNeither { .. }
            );
            prop_assert!(expected, "unexpected error {:?}", e);
        }
    }
    Ok(())
}

/// Transposition `j0 <-> t` and pair shifts for every admissible pair index.
pub fn remaps_are_bijections(t: usize, j: Index, i: Index) -> Outcome {
    let j0 = j.index(t) + 1;
    let i0 = i.index(t.div_ceil(2)) + 1;
    prop_assert!(is_bijection(&ColorPermutation::transposition(t, j0, t).unwrap()));
    if 2 * i0 <= t {
        prop_assert!(is_bijection(
            &ColorPermutation::cyclic_shift(t, t + 1 - 2 * i0, 2 * i0 - 1).unwrap()
        ));
    }
    Ok(())
}

pub fn construction_remaps_are_bijections(g: &Graph, b: &Bipartition) -> Outcome {
    for r in [thm6_biregular_persistent(g, b).ok(), thm5_biregular_interval(g, b).ok()]
        .into_iter()
        .flatten()
    {
        if let Some(p) = &r.remap {
            prop_assert!(is_bijection(p));
        }
    }
    Ok(())
}

pub fn deficiency_partition(g: &Graph, b: &Bipartition, k: usize, steps: &Steps) -> Outcome {
    let c = kempe_walk(g, color_bipartite_delta(g, b), steps);
    let d = deficiency_classes(g, &c, b.x_side()).unwrap();
    let mut all: Vec<_> = (1..=k).flat_map(|j| d.class(j).to_vec()).collect();
    all.sort_unstable();
    let mut domain = b.x_side().to_vec();
    domain.sort_unstable();
    prop_assert_eq!(all, domain);
    Ok(())
}

pub fn side_divisibility(g: &Graph, b: &Bipartition, k: usize) -> Outcome {
    let r = verify_remark2(g, b).unwrap();
    prop_assert!(r.holds());
    prop_assert_eq!(r.k, k);
    prop_assert_eq!(b.x_side().len() % k, 0);
    prop_assert_eq!(b.y_side().len() % (k - 1), 0);
    prop_assert_eq!(g.vertex_count() % (2 * k - 1), 0);
    Ok(())
}

pub fn y_side_persistent(g: &Graph, b: &Bipartition, k: usize, p: &ColorPermutation, steps: &Steps) -> Outcome {
    let base = color_bipartite_delta(g, b);
    prop_assert_eq!(base.t(), k);
    let c = kempe_walk(g, apply_color_permutation(&base, p).unwrap(), steps);
    prop_assert!(validate_coloring(g, &c).is_valid());
    for &y in b.y_side() {
        prop_assert!(is_persistent_interval(&spectrum_of(g, &c, y), g.degree(y)));
    }
    Ok(())
}
