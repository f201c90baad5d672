//! Constructive colorings that are interval or persistent-interval on a
//! guaranteed vertex set.
//!
//! Every construction re-validates its output and checks the predicate on the
//! whole guaranteed set before returning.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{
    apply_color_permutation, chromatic_index, color_bipartite_delta, color_vizing, kempe_swap, validate_coloring,
    Color, ColorPermutation, ColoringError, EdgeColoring, ProperSearch,
};
use crate::graph::{degree_profile, Bipartition, Graph, Side, Vertex};
use crate::spectrum::{
    analyze, deficiency_classes, largest_class, largest_pair, paired_classes, spectrum_of, Mode, SpectrumError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    PY,
}

impl TheoremId {
    pub fn mode(self) -> Mode {
        match self {
            TheoremId::T2 | TheoremId::T3 | TheoremId::T5 => Mode::Interval,
            TheoremId::T1 | TheoremId::T4 | TheoremId::T6 | TheoremId::PY => Mode::Persistent,
        }
    }
}

impl std::str::FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "T1" => TheoremId::T1,
            "T2" => TheoremId::T2,
            "T3" => TheoremId::T3,
            "T4" => TheoremId::T4,
            "T5" => TheoremId::T5,
            "T6" => TheoremId::T6,
            "PY" => TheoremId::PY,
            other => return Err(format!("unknown theorem `{other}`")),
        })
    }
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is class 1 (chromatic index equals max degree {delta}); theorem does not apply")]
    ClassOne { delta: usize },
    #[error("graph is not (k-1, k)-biregular with the X side of degree k-1")]
    NotBiregular,
    #[error("k = {k} is below the minimum {min}")]
    KTooSmall { k: usize, min: usize },
    #[error("edge {{{x}, {y}}} has d(x) = {dx} > d(y) = {dy}")]
    DegreeCondition { x: Vertex, y: Vertex, dx: usize, dy: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("postcondition failed for {theorem}: {detail}")]
    Postcondition { theorem: TheoremId, detail: String },
    #[error("no coloring persistent-interval on Y found within the swap cap and search budget")]
    SearchFailed,
    #[error("search budget exhausted after {nodes} node expansions")]
    BudgetExhausted { nodes: u64 },
    #[error(transparent)]
    Coloring(ColoringError),
    #[error(transparent)]
    Spectrum(SpectrumError),
}

impl ConstructionError {
    /// Short code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            ConstructionError::NotRegular => "not-regular",
            ConstructionError::ClassOne { .. } => "class-1",
            ConstructionError::NotBiregular => "not-biregular",
            ConstructionError::KTooSmall { .. } => "k-too-small",
            ConstructionError::DegreeCondition { .. } => "degree-condition",
            ConstructionError::Precondition(_) => "precondition",
            ConstructionError::Postcondition { .. } => "postcondition",
            ConstructionError::SearchFailed => "search-failed",
            ConstructionError::BudgetExhausted { .. } => "budget-exhausted",
            ConstructionError::Coloring(_) => "coloring",
            ConstructionError::Spectrum(_) => "spectrum",
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, ConstructionError::BudgetExhausted { .. })
    }
}

impl From<ColoringError> for ConstructionError {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::BudgetExhausted { nodes } => ConstructionError::BudgetExhausted { nodes },
            other => ConstructionError::Coloring(other),
        }
    }
}

impl From<SpectrumError> for ConstructionError {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::Coloring(c) => c.into(),
            other => ConstructionError::Spectrum(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub theorem: TheoremId,
    pub mode: Mode,
    pub coloring: EdgeColoring,
    /// Sorted vertex set on which `mode` is guaranteed.
    pub guaranteed_set: Vec<Vertex>,
    /// The color remap applied to the base coloring, if any.
    pub remap: Option<ColorPermutation>,
    /// Kempe swaps performed.
    pub swaps: usize,
    /// For the extension: `|S(x0) \ [1, d(x0)]|` after each swap.
    pub excess_trace: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Node budget for exact searches (chromatic index, fallbacks).
    pub search_budget: u64,
    /// Kempe-descent swap cap, as a multiple of `|E|`.
    pub swap_cap_factor: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search_budget: crate::coloring::DEFAULT_SEARCH_BUDGET,
            swap_cap_factor: 10,
        }
    }
}

fn finish(
    g: &Graph,
    theorem: TheoremId,
    coloring: EdgeColoring,
    mut guaranteed_set: Vec<Vertex>,
    remap: Option<ColorPermutation>,
) -> Result<ConstructionResult, ConstructionError> {
    guaranteed_set.sort_unstable();
    guaranteed_set.dedup();
    let result = ConstructionResult {
        theorem,
        mode: theorem.mode(),
        coloring,
        guaranteed_set,
        remap,
        swaps: 0,
        excess_trace: Vec::new(),
    };
    verify_result(g, &result)?;
    Ok(result)
}

/// Validate the coloring and the predicate on every guaranteed vertex.
pub fn verify_result(g: &Graph, r: &ConstructionResult) -> Result<(), ConstructionError> {
    let report = validate_coloring(g, &r.coloring);
    if !report.is_valid() {
        return Err(ConstructionError::Postcondition {
            theorem: r.theorem,
            detail: format!("coloring is not valid: {report:?}"),
        });
    }
    let spectra = analyze(g, &r.coloring)?;
    if let Some(&v) = r.guaranteed_set.iter().find(|&&v| !spectra.holds(v, r.mode)) {
        return Err(ConstructionError::Postcondition {
            theorem: r.theorem,
            detail: format!(
                "vertex {v} with spectrum {:?} is not {}",
                spectra.vertices[v].spectrum,
                match r.mode {
                    Mode::Interval => "interval",
                    Mode::Persistent => "persistent-interval",
                }
            ),
        });
    }
    Ok(())
}

/// A class-2 regular graph and a proper `(Δ+1)`-coloring of it.
fn class_two_base(g: &Graph, limits: &Limits) -> Result<EdgeColoring, ConstructionError> {
    if !degree_profile(g, None).is_regular {
        return Err(ConstructionError::NotRegular);
    }
    let delta = g.max_degree();
    if chromatic_index(g, limits.search_budget)? == delta {
        return Err(ConstructionError::ClassOne { delta });
    }
    let beta = color_vizing(g);
    debug_assert_eq!(beta.t(), delta + 1);
    Ok(beta)
}

/// Regular class-2 graph: persistent-interval on the largest class of
/// vertices missing a common color, after moving that color to `Δ+1`.
pub fn thm1_persistent_regular(g: &Graph, limits: &Limits) -> Result<ConstructionResult, ConstructionError> {
    let beta = class_two_base(g, limits)?;
    let t = beta.t();
    let all: Vec<Vertex> = g.vertices().collect();
    let classes = deficiency_classes(g, &beta, &all)?;
    let (j0, _) = largest_class(&classes)?;
    let r0 = classes.class(j0).to_vec();
    if j0 == t {
        return finish(g, TheoremId::T1, beta, r0, None);
    }
    let swap = ColorPermutation::transposition(t, j0, t)?;
    let phi = apply_color_permutation(&beta, &swap)?;
    finish(g, TheoremId::T1, phi, r0, Some(swap))
}

/// Which pair to keep and how to rotate colors so that pair becomes interval,
/// for paired deficiency classes over `t` colors.
///
/// The last pair is `{t-1, t}` when `t` is even and `{t}` alone when odd.
fn pair_shift(t: Color, i0: usize) -> Result<Option<ColorPermutation>, ColoringError> {
    let last = t.div_ceil(2);
    if i0 == last {
        if t % 2 == 1 {
            Ok(None)
        } else {
            ColorPermutation::cyclic_shift(t, 1, t - 1).map(Some)
        }
    } else {
        ColorPermutation::cyclic_shift(t, t + 1 - 2 * i0, 2 * i0 - 1).map(Some)
    }
}

fn apply_pair_shift(
    g: &Graph,
    theorem: TheoremId,
    beta: EdgeColoring,
    i0: usize,
    r0: Vec<Vertex>,
) -> Result<ConstructionResult, ConstructionError> {
    match pair_shift(beta.t(), i0)? {
        None => finish(g, theorem, beta, r0, None),
        Some(p) => {
            let phi = apply_color_permutation(&beta, &p)?;
            finish(g, theorem, phi, r0, Some(p))
        }
    }
}

/// Regular class-2 graph: interval on the largest union of two consecutive
/// deficiency classes, after a cyclic color shift.
pub fn thm2_interval_regular(g: &Graph, limits: &Limits) -> Result<ConstructionResult, ConstructionError> {
    let beta = class_two_base(g, limits)?;
    let all: Vec<Vertex> = g.vertices().collect();
    let classes = deficiency_classes(g, &beta, &all)?;
    let pairs = paired_classes(&classes);
    let (i0, _) = largest_pair(&pairs).ok_or(SpectrumError::EmptyDomain)?;
    let r0 = pairs[i0 - 1].clone();
    apply_pair_shift(g, TheoremId::T2, beta, i0, r0)
}

/// Every edge gets its own color; the chosen side receives consecutive runs.
pub fn thm3_interval_side(g: &Graph, b: &Bipartition, side: Side) -> Result<ConstructionResult, ConstructionError> {
    let mut colors = vec![0; g.edge_count()];
    let mut next = 1;
    for &v in b.side(side) {
        for &e in g.incident(v) {
            colors[e] = next;
            next += 1;
        }
    }
    let coloring = EdgeColoring::new(colors, g.edge_count());
    finish(g, TheoremId::T3, coloring, b.side(side).to_vec(), None)
}

/// `d(x) <= d(y)` for every edge with `x` on the X side.
pub fn check_degree_condition(g: &Graph, b: &Bipartition) -> Result<(), ConstructionError> {
    for &(u, v) in g.edges() {
        let (x, y) = if b.side_of(u) == Side::X { (u, v) } else { (v, u) };
        if g.degree(x) > g.degree(y) {
            return Err(ConstructionError::DegreeCondition {
                x,
                y,
                dx: g.degree(x),
                dy: g.degree(y),
            });
        }
    }
    Ok(())
}

fn first_non_persistent(g: &Graph, c: &EdgeColoring, vs: &[Vertex]) -> Option<(Vertex, Vec<Color>)> {
    vs.iter().find_map(|&v| {
        let s = spectrum_of(g, c, v);
        (s.last().is_some_and(|&hi| hi > g.degree(v))).then_some((v, s))
    })
}

/// A Δ-coloring persistent-interval on every Y vertex, assuming
/// `d(x) <= d(y)` along every edge.
///
/// Starts from the König coloring and repairs Y vertices by Kempe swaps
/// (smallest missing color in `[1, d(y)]` against the largest present color
/// above `d(y)`); after `swap_cap_factor * |E|` swaps it falls back to an
/// exact search over Δ-colorings with every Y edge limited to `[1, d(y)]`.
pub fn persistent_on_y(g: &Graph, b: &Bipartition, limits: &Limits) -> Result<ConstructionResult, ConstructionError> {
    check_degree_condition(g, b)?;
    let mut phi = color_bipartite_delta(g, b);
    let cap = limits.swap_cap_factor * g.edge_count();
    let mut swaps = 0;
    while let Some((y, spectrum)) = first_non_persistent(g, &phi, b.y_side()) {
        if swaps == cap {
            break;
        }
        let d = g.degree(y);
        let missing = (1..=d)
            .find(|c| spectrum.binary_search(c).is_err())
            .expect("an interval slot is empty");
        let above = *spectrum.last().expect("y has edges");
        phi = kempe_swap(g, &phi, y, above, missing)?.coloring;
        swaps += 1;
    }
    if first_non_persistent(g, &phi, b.y_side()).is_some() {
        phi = persistent_y_search(g, b, limits.search_budget)?;
    }
    let mut result = finish(g, TheoremId::PY, phi, b.y_side().to_vec(), None)?;
    result.swaps = swaps;
    Ok(result)
}

fn persistent_y_search(g: &Graph, b: &Bipartition, budget: u64) -> Result<EdgeColoring, ConstructionError> {
    let delta = g.max_degree();
    let mut search = ProperSearch::new(g, delta, budget);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let y = if b.side_of(u) == Side::Y { u } else { v };
        search.restrict(e, g.degree(y));
    }
    match search.run()? {
        (Some(colors), _) => Ok(EdgeColoring::new(colors, delta)),
        (None, _) => Err(ConstructionError::SearchFailed),
    }
}

fn excess(spectrum: &[Color], degree: usize) -> usize {
    spectrum.iter().filter(|&&c| c > degree).count()
}

/// Extend a Δ-coloring persistent-interval on Y to one that is also
/// persistent-interval at `x0`, by swapping the largest excess color of `x0`
/// with its smallest missing slot along alternating paths.
pub fn thm4_extend(
    g: &Graph,
    b: &Bipartition,
    phi0: &EdgeColoring,
    x0: Vertex,
) -> Result<ConstructionResult, ConstructionError> {
    let delta = g.max_degree();
    if phi0.t() != delta {
        return Err(ConstructionError::Precondition(format!(
            "coloring uses t = {}, expected Δ = {delta}",
            phi0.t()
        )));
    }
    if !validate_coloring(g, phi0).is_valid() {
        return Err(ConstructionError::Precondition("input coloring is not valid".into()));
    }
    if x0 >= g.vertex_count() || b.side_of(x0) != Side::X {
        return Err(ConstructionError::Precondition(format!(
            "vertex {x0} is not on the X side"
        )));
    }
    if let Some((y, _)) = first_non_persistent(g, phi0, b.y_side()) {
        return Err(ConstructionError::Precondition(format!(
            "input is not persistent-interval at Y vertex {y}"
        )));
    }

    let d = g.degree(x0);
    let mut theta = phi0.clone();
    let nu0 = excess(&spectrum_of(g, &theta, x0), d);
    let mut trace = Vec::with_capacity(nu0);
    for k in 0..nu0 {
        let s = spectrum_of(g, &theta, x0);
        let t_k = *s.iter().filter(|&&c| c > d).max().expect("excess is positive");
        let s_k = (1..=d)
            .find(|c| s.binary_search(c).is_err())
            .expect("a slot below d(x0) is free");
        theta = kempe_swap(g, &theta, x0, t_k, s_k)?.coloring;
        let now = excess(&spectrum_of(g, &theta, x0), d);
        if now != nu0 - k - 1 {
            return Err(ConstructionError::Postcondition {
                theorem: TheoremId::T4,
                detail: format!("excess at x0 = {x0} is {now} after swap {k}, expected {}", nu0 - k - 1),
            });
        }
        trace.push(now);
    }
    let mut set = b.y_side().to_vec();
    set.push(x0);
    let mut result = finish(g, TheoremId::T4, theta, set, None)?;
    result.swaps = nu0;
    result.excess_trace = trace;
    Ok(result)
}

/// `k` for a `(k-1, k)`-biregular graph whose X side has degree `k-1`.
pub fn biregular_k(g: &Graph, b: &Bipartition) -> Result<usize, ConstructionError> {
    match degree_profile(g, Some(b)).biregular {
        Some((a, k)) if a + 1 == k => Ok(k),
        _ => Err(ConstructionError::NotBiregular),
    }
}

/// The bipartition with X as the degree-`(k-1)` side, if the graph is
/// `(k-1, k)`-biregular in either orientation.
pub fn orient_biregular(g: &Graph, b: &Bipartition) -> Result<Bipartition, ConstructionError> {
    if biregular_k(g, b).is_ok() {
        return Ok(b.clone());
    }
    let swapped = b.swapped();
    biregular_k(g, &swapped).map(|_| swapped)
}

/// `(k-1, k)`-biregular, `k >= 4`: interval on Y plus the largest pair of
/// X deficiency classes.
pub fn thm5_biregular_interval(g: &Graph, b: &Bipartition) -> Result<ConstructionResult, ConstructionError> {
    let k = biregular_k(g, b)?;
    if k < 4 {
        return Err(ConstructionError::KTooSmall { k, min: 4 });
    }
    let beta = color_bipartite_delta(g, b);
    let classes = deficiency_classes(g, &beta, b.x_side())?;
    let pairs = paired_classes(&classes);
    let (i0, _) = largest_pair(&pairs).ok_or(SpectrumError::EmptyDomain)?;
    let mut r0 = pairs[i0 - 1].clone();
    r0.extend_from_slice(b.y_side());
    apply_pair_shift(g, TheoremId::T5, beta, i0, r0)
}

/// `(k-1, k)`-biregular, `k >= 3`: persistent-interval on Y plus the largest
/// X deficiency class, after moving its color to `k`.
pub fn thm6_biregular_persistent(g: &Graph, b: &Bipartition) -> Result<ConstructionResult, ConstructionError> {
    let k = biregular_k(g, b)?;
    if k < 3 {
        return Err(ConstructionError::KTooSmall { k, min: 3 });
    }
    let beta = color_bipartite_delta(g, b);
    let classes = deficiency_classes(g, &beta, b.x_side())?;
    let (j0, _) = largest_class(&classes)?;
    let mut r0 = classes.class(j0).to_vec();
    r0.extend_from_slice(b.y_side());
    if j0 == k {
        return finish(g, TheoremId::T6, beta, r0, None);
    }
    let swap = ColorPermutation::transposition(k, j0, k)?;
    let phi = apply_color_permutation(&beta, &swap)?;
    finish(g, TheoremId::T6, phi, r0, Some(swap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, gen_biregular, gen_complete_bipartite, gen_petersen};

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn thm1_petersen_and_c5() {
        let r = thm1_persistent_regular(&gen_petersen(), &limits()).unwrap();
        assert!(r.guaranteed_set.len() >= 3);
        assert_eq!(r.coloring.t(), 4);
        let c5 = Graph::cycle(5).unwrap();
        let r = thm1_persistent_regular(&c5, &limits()).unwrap();
        assert!(r.guaranteed_set.len() >= 2);
    }

    #[test]
    fn thm1_rejects_class_one_and_irregular() {
        assert_eq!(
            thm1_persistent_regular(&Graph::complete(4).unwrap(), &limits()),
            Err(ConstructionError::ClassOne { delta: 3 })
        );
        assert_eq!(
            thm1_persistent_regular(&Graph::path(3).unwrap(), &limits()),
            Err(ConstructionError::NotRegular)
        );
        let tiny = Limits {
            search_budget: 2,
            ..Limits::default()
        };
        assert!(thm1_persistent_regular(&gen_petersen(), &tiny).unwrap_err().is_budget());
    }

    #[test]
    fn thm2_petersen_and_c5() {
        let r = thm2_interval_regular(&gen_petersen(), &limits()).unwrap();
        assert!(r.guaranteed_set.len() >= 5);
        let r = thm2_interval_regular(&Graph::cycle(5).unwrap(), &limits()).unwrap();
        assert!(r.guaranteed_set.len() >= 3);
    }

    #[test]
    fn pair_shifts_are_bijections_with_interval_images() {
        for t in 2..=12usize {
            for i0 in 1..=t.div_ceil(2) {
                let p = pair_shift(t, i0).unwrap();
                let image = |c: Color| p.as_ref().map_or(c, |p| p.image(c));
                let missing_image = |j: Color| {
                    let mut s: Vec<Color> = (1..=t).filter(|&c| c != j).map(image).collect();
                    s.sort_unstable();
                    s
                };
                let pair: Vec<Color> = [2 * i0 - 1, 2 * i0].into_iter().filter(|&j| j <= t).collect();
                for j in pair {
                    let s = missing_image(j);
                    assert!(crate::spectrum::is_interval(&s, t - 1), "t={t} i0={i0} j={j} -> {s:?}");
                }
            }
        }
    }

    #[test]
    fn thm3_examples() {
        let k32 = gen_complete_bipartite(3, 2).unwrap();
        let b = bipartition(&k32).unwrap();
        let r = thm3_interval_side(&k32, &b, Side::X).unwrap();
        assert_eq!(r.coloring.t(), 6);
        assert_eq!(analyze(&k32, &r.coloring).unwrap().f_i, 3.max(r.guaranteed_set.len()));

        let k2 = Graph::path(2).unwrap();
        let b = bipartition(&k2).unwrap();
        for side in [Side::X, Side::Y] {
            let r = thm3_interval_side(&k2, &b, side).unwrap();
            assert_eq!(analyze(&k2, &r.coloring).unwrap().f_i, 2);
        }

        let p3 = Graph::path(3).unwrap();
        let b = Bipartition::from_x_side(&p3, &[1]).unwrap();
        let r = thm3_interval_side(&p3, &b, Side::X).unwrap();
        assert_eq!(spectrum_of(&p3, &r.coloring, 1), vec![1, 2]);
    }

    #[test]
    fn persistent_on_y_examples() {
        let k32 = gen_complete_bipartite(3, 2).unwrap();
        let b = bipartition(&k32).unwrap();
        let r = persistent_on_y(&k32, &b, &limits()).unwrap();
        assert_eq!(r.swaps, 0);
        for &y in b.y_side() {
            assert_eq!(spectrum_of(&k32, &r.coloring, y), vec![1, 2, 3]);
        }

        let p3 = Graph::path(3).unwrap();
        let b = Bipartition::from_x_side(&p3, &[0, 2]).unwrap();
        let r = persistent_on_y(&p3, &b, &limits()).unwrap();
        assert_eq!(spectrum_of(&p3, &r.coloring, 1), vec![1, 2]);

        let g = gen_biregular(4, 2, 5).unwrap();
        let b = bipartition(&g).unwrap();
        assert_eq!(persistent_on_y(&g, &b, &limits()).unwrap().swaps, 0);

        let b = bipartition(&k32).unwrap().swapped();
        assert!(matches!(
            persistent_on_y(&k32, &b, &limits()),
            Err(ConstructionError::DegreeCondition { .. })
        ));
    }

    #[test]
    fn persistent_on_y_repairs_by_swaps() {
        // Y = {1, 3}. Insertion order leaves y = 1 with spectrum {1, 3}, and
        // one swap along 1-2-3-5 repairs it.
        let g = Graph::new(6, vec![(3, 4), (3, 2), (0, 1), (1, 2), (3, 5)]).unwrap();
        let b = Bipartition::from_x_side(&g, &[0, 2, 4, 5]).unwrap();
        assert_eq!(spectrum_of(&g, &color_bipartite_delta(&g, &b), 1), vec![1, 3]);
        let r = persistent_on_y(&g, &b, &limits()).unwrap();
        assert_eq!(r.swaps, 1);
        for &y in b.y_side() {
            let s = spectrum_of(&g, &r.coloring, y);
            assert_eq!(s, (1..=g.degree(y)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn thm4_on_k34() {
        let g = gen_complete_bipartite(4, 3).unwrap();
        let b = bipartition(&g).unwrap();
        let phi0 = color_bipartite_delta(&g, &b);
        let x0 = *b
            .x_side()
            .iter()
            .find(|&&x| spectrum_of(&g, &phi0, x) != vec![1, 2, 3])
            .expect("König coloring leaves some x non-persistent");
        let nu0 = excess(&spectrum_of(&g, &phi0, x0), 3);
        let r = thm4_extend(&g, &b, &phi0, x0).unwrap();
        assert_eq!(r.swaps, nu0);
        assert_eq!(r.excess_trace, (0..nu0).rev().collect::<Vec<_>>());
        assert!(analyze(&g, &r.coloring).unwrap().f_pi >= 4);

        let persistent = *b
            .x_side()
            .iter()
            .find(|&&x| spectrum_of(&g, &r.coloring, x) == vec![1, 2, 3])
            .unwrap();
        let again = thm4_extend(&g, &b, &r.coloring, persistent).unwrap();
        assert_eq!((again.swaps, &again.coloring), (0, &r.coloring));
    }

    #[test]
    fn thm4_preconditions() {
        let g = gen_complete_bipartite(4, 3).unwrap();
        let b = bipartition(&g).unwrap();
        let phi0 = color_bipartite_delta(&g, &b);
        assert!(matches!(
            thm4_extend(&g, &b, &phi0, 5),
            Err(ConstructionError::Precondition(_))
        ));
        let wide = thm3_interval_side(&g, &b, Side::X).unwrap().coloring;
        assert!(matches!(
            thm4_extend(&g, &b, &wide, 0),
            Err(ConstructionError::Precondition(_))
        ));
    }

    #[test]
    fn thm5_examples() {
        let g = gen_complete_bipartite(4, 3).unwrap();
        let b = bipartition(&g).unwrap();
        let r = thm5_biregular_interval(&g, &b).unwrap();
        assert!(r.guaranteed_set.len() >= 5);

        let g = gen_biregular(5, 1, 11).unwrap();
        let b = bipartition(&g).unwrap();
        let r = thm5_biregular_interval(&g, &b).unwrap();
        assert!(r.guaranteed_set.len() >= 6);

        let k23 = gen_complete_bipartite(3, 2).unwrap();
        let b = bipartition(&k23).unwrap();
        assert_eq!(
            thm5_biregular_interval(&k23, &b),
            Err(ConstructionError::KTooSmall { k: 3, min: 4 })
        );
        let c6 = Graph::cycle(6).unwrap();
        let b = bipartition(&c6).unwrap();
        assert_eq!(thm5_biregular_interval(&c6, &b), Err(ConstructionError::NotBiregular));
    }

    #[test]
    fn thm6_examples() {
        let g = gen_complete_bipartite(4, 3).unwrap();
        let b = bipartition(&g).unwrap();
        let r = thm6_biregular_persistent(&g, &b).unwrap();
        assert!(r.guaranteed_set.len() >= 4);

        let k23 = gen_complete_bipartite(3, 2).unwrap();
        let b = bipartition(&k23).unwrap();
        let r = thm6_biregular_persistent(&k23, &b).unwrap();
        assert!(r.guaranteed_set.len() >= 3);
        if let Some(p) = &r.remap {
            let j0 = (1..=3).find(|&c| p.image(c) == 3 && c != 3).unwrap();
            let beta = color_bipartite_delta(&k23, &b);
            for &x in b.x_side() {
                if !spectrum_of(&k23, &beta, x).contains(&j0) {
                    assert_eq!(spectrum_of(&k23, &r.coloring, x), vec![1, 2]);
                }
            }
        }
    }

    #[test]
    fn orientation_helper() {
        let g = gen_complete_bipartite(3, 4).unwrap();
        let b = bipartition(&g).unwrap();
        assert_eq!(biregular_k(&g, &b), Err(ConstructionError::NotBiregular));
        let o = orient_biregular(&g, &b).unwrap();
        assert_eq!(biregular_k(&g, &o), Ok(4));
    }
}
