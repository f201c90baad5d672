//! Vertex spectra, interval / persistent-interval counts, deficiency classes
//! and the exhaustive oracle for the best achievable counts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{
    chromatic_index, color_vizing, search_order, validate_coloring, Color, ColoringError, EdgeColoring,
    DEFAULT_SEARCH_BUDGET,
};
use crate::graph::{Graph, Vertex};

/// Largest edge count the oracle enumerates under its default budget.
pub const ORACLE_EDGE_GUARD: usize = 9;

/// Budget used when the edge guard is exceeded and no explicit budget was given.
pub const GUARDED_BUDGET: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("coloring is not valid for this graph")]
    InvalidColoring,
    #[error("vertex {vertex} has degree {degree}, expected t - 1 = {expected}")]
    DegreeMismatch {
        vertex: Vertex,
        degree: usize,
        expected: usize,
    },
    #[error("deficiency domain is empty")]
    EmptyDomain,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "i")]
    Interval,
    #[serde(rename = "pi")]
    Persistent,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Interval => "i",
            Mode::Persistent => "pi",
        }
    }
}

/// True iff `spectrum` (sorted, distinct) is an interval of length `degree`.
pub fn is_interval(spectrum: &[Color], degree: usize) -> bool {
    match (spectrum.first(), spectrum.last()) {
        (Some(&lo), Some(&hi)) => spectrum.len() == degree && hi - lo + 1 == degree,
        _ => degree == 0,
    }
}

/// True iff `spectrum` (sorted, distinct) equals `[1, degree]`.
pub fn is_persistent_interval(spectrum: &[Color], degree: usize) -> bool {
    is_interval(spectrum, degree) && spectrum.first().is_none_or(|&lo| lo == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexSpectrum {
    pub vertex: Vertex,
    pub degree: usize,
    pub spectrum: Vec<Color>,
    pub interval: bool,
    pub persistent_interval: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub vertices: Vec<VertexSpectrum>,
    pub f_i: usize,
    pub f_pi: usize,
}

impl SpectrumReport {
    pub fn count(&self, mode: Mode) -> usize {
        match mode {
            Mode::Interval => self.f_i,
            Mode::Persistent => self.f_pi,
        }
    }

    pub fn holds(&self, v: Vertex, mode: Mode) -> bool {
        let s = &self.vertices[v];
        match mode {
            Mode::Interval => s.interval,
            Mode::Persistent => s.persistent_interval,
        }
    }
}

pub fn spectrum_of(g: &Graph, c: &EdgeColoring, v: Vertex) -> Vec<Color> {
    let mut s: Vec<Color> = g.incident(v).iter().map(|&e| c.color(e)).collect();
    s.sort_unstable();
    s
}

pub fn analyze(g: &Graph, c: &EdgeColoring) -> Result<SpectrumReport, SpectrumError> {
    if !validate_coloring(g, c).is_valid() {
        return Err(SpectrumError::InvalidColoring);
    }
    Ok(analyze_unchecked(g, c))
}

fn analyze_unchecked(g: &Graph, c: &EdgeColoring) -> SpectrumReport {
    let vertices: Vec<VertexSpectrum> = g
        .vertices()
        .map(|v| {
            let spectrum = spectrum_of(g, c, v);
            let degree = g.degree(v);
            VertexSpectrum {
                vertex: v,
                degree,
                interval: is_interval(&spectrum, degree),
                persistent_interval: is_persistent_interval(&spectrum, degree),
                spectrum,
            }
        })
        .collect();
    let f_i = vertices.iter().filter(|s| s.interval).count();
    let f_pi = vertices.iter().filter(|s| s.persistent_interval).count();
    SpectrumReport { vertices, f_i, f_pi }
}

/// Vertices of a degree-`(t-1)` domain grouped by the one color they miss.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeficiencyClasses {
    pub t: Color,
    pub domain: Vec<Vertex>,
    /// `classes[j - 1]` holds the vertices missing color `j`, sorted.
    pub classes: Vec<Vec<Vertex>>,
}

impl DeficiencyClasses {
    pub fn class(&self, j: Color) -> &[Vertex] {
        &self.classes[j - 1]
    }
}

pub fn deficiency_classes(g: &Graph, c: &EdgeColoring, domain: &[Vertex]) -> Result<DeficiencyClasses, SpectrumError> {
    if !validate_coloring(g, c).is_proper() {
        return Err(SpectrumError::InvalidColoring);
    }
    let t = c.t();
    let mut classes = vec![Vec::new(); t];
    let mut domain: Vec<Vertex> = domain.to_vec();
    domain.sort_unstable();
    domain.dedup();
    for &v in &domain {
        if g.degree(v) + 1 != t {
            return Err(SpectrumError::DegreeMismatch {
                vertex: v,
                degree: g.degree(v),
                expected: t.saturating_sub(1),
            });
        }
        let spectrum = spectrum_of(g, c, v);
        let missing = (1..=t)
            .find(|j| spectrum.binary_search(j).is_err())
            .expect("t-1 colors miss one of t");
        classes[missing - 1].push(v);
    }
    Ok(DeficiencyClasses { t, domain, classes })
}

/// The color with the largest class; ties go to the smallest color.
pub fn largest_class(d: &DeficiencyClasses) -> Result<(Color, usize), SpectrumError> {
    if d.domain.is_empty() {
        return Err(SpectrumError::EmptyDomain);
    }
    let (idx, class) = d
        .classes
        .iter()
        .enumerate()
        .rev()
        .max_by_key(|(_, class)| class.len())
        .expect("t >= 1 when the domain is nonempty");
    Ok((idx + 1, class.len()))
}

/// `result[i - 1] = V_{2i-1} ∪ V_{2i}` for `i` in `[1, ceil(t/2)]`; for odd
/// `t` the last entry is `V_t` alone.
pub fn paired_classes(d: &DeficiencyClasses) -> Vec<Vec<Vertex>> {
    d.classes
        .chunks(2)
        .map(|pair| {
            let mut merged: Vec<Vertex> = pair.concat();
            merged.sort_unstable();
            merged
        })
        .collect()
}

/// Index `i0` in `[1, ceil(t/2)]` of the largest pair; ties go to the smallest.
pub fn largest_pair(pairs: &[Vec<Vertex>]) -> Option<(usize, usize)> {
    pairs
        .iter()
        .enumerate()
        .rev()
        .max_by_key(|(_, p)| p.len())
        .map(|(i, p)| (i + 1, p.len()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaResult {
    pub mode: Mode,
    pub eta: usize,
    pub witness: EdgeColoring,
    /// False when the budget ran out; `eta` is then only a lower bound.
    pub exact: bool,
    pub nodes: u64,
}

#[derive(Serialize)]
struct EtaJson<'a> {
    mode: Mode,
    eta: usize,
    exact: bool,
    lower_bound_only: bool,
    nodes: u64,
    t: Color,
    witness: &'a str,
}

impl EtaResult {
    pub fn to_json(&self) -> serde_json::Value {
        let witness = self.witness.to_text();
        serde_json::to_value(EtaJson {
            mode: self.mode,
            eta: self.eta,
            exact: self.exact,
            lower_bound_only: !self.exact,
            nodes: self.nodes,
            t: self.witness.t(),
            witness: &witness,
        })
        .expect("plain struct serializes")
    }
}

/// Exact `max f` over every proper surjective `t`-coloring, `χ′ <= t <= |E|`.
///
/// Without an explicit budget, graphs above [`ORACLE_EDGE_GUARD`] edges are
/// searched with [`GUARDED_BUDGET`] nodes only. Subtrees that cannot beat the
/// current best are cut, so the witness is the first maximizer in
/// enumeration order (`t` ascending, then colors in search order).
pub fn brute_force_eta(g: &Graph, mode: Mode, budget: Option<u64>) -> Result<EtaResult, SpectrumError> {
    let budget = budget.unwrap_or(if g.edge_count() <= ORACLE_EDGE_GUARD {
        DEFAULT_SEARCH_BUDGET
    } else {
        GUARDED_BUDGET
    });
    let (t_min, mut nodes) = match chromatic_index(g, budget) {
        Ok(chi) => (chi.max(1), 0),
        Err(ColoringError::BudgetExhausted { nodes }) => (g.max_degree() + 1, nodes),
        Err(e) => return Err(e.into()),
    };
    let mut best: Option<(usize, Vec<Color>, Color)> = None;
    let mut exact = true;
    for t in t_min..=g.edge_count() {
        if best.as_ref().is_some_and(|(f, _, _)| *f == g.vertex_count()) {
            break;
        }
        let mut search = EtaSearch::new(g, mode, t, budget.saturating_sub(nodes), best.as_ref().map(|b| b.0));
        let outcome = search.run();
        nodes += search.nodes;
        if let Some((f, colors)) = search.best {
            best = Some((f, colors, t));
        }
        if outcome.is_err() {
            exact = false;
            break;
        }
    }
    let (eta, witness) = match best {
        Some((f, colors, t)) => (f, EdgeColoring::new(colors, t)),
        None => {
            // Budget ran out before any coloring was completed.
            let c = color_vizing(g);
            (analyze_unchecked(g, &c).count(mode), c)
        }
    };
    Ok(EtaResult {
        mode,
        eta,
        witness,
        exact,
        nodes,
    })
}

struct Exhausted;

struct EtaSearch<'g> {
    g: &'g Graph,
    mode: Mode,
    t: Color,
    order: Vec<usize>,
    colors: Vec<Color>,
    used: Vec<bool>,
    color_uses: Vec<usize>,
    unused: usize,
    lo: Vec<Color>,
    hi: Vec<Color>,
    dead: usize,
    nodes: u64,
    budget: u64,
    floor: Option<usize>,
    best: Option<(usize, Vec<Color>)>,
}

impl<'g> EtaSearch<'g> {
    fn new(g: &'g Graph, mode: Mode, t: Color, budget: u64, floor: Option<usize>) -> Self {
        EtaSearch {
            g,
            mode,
            t,
            order: search_order(g, &[]),
            colors: vec![0; g.edge_count()],
            used: vec![false; g.vertex_count() * (t + 1)],
            color_uses: vec![0; t + 1],
            unused: t,
            lo: vec![Color::MAX; g.vertex_count()],
            hi: vec![0; g.vertex_count()],
            dead: 0,
            nodes: 0,
            budget,
            floor,
            best: None,
        }
    }

    fn is_dead(&self, v: Vertex) -> bool {
        let d = self.g.degree(v);
        match self.mode {
            Mode::Interval => self.hi[v] != 0 && self.hi[v] - self.lo[v] >= d,
            Mode::Persistent => self.hi[v] > d,
        }
    }

    fn target(&self) -> usize {
        self.best.as_ref().map(|b| b.0).or(self.floor).map_or(0, |f| f + 1)
    }

    fn run(&mut self) -> Result<(), Exhausted> {
        self.extend(0)
    }

    fn extend(&mut self, pos: usize) -> Result<(), Exhausted> {
        let n = self.g.vertex_count();
        if n - self.dead < self.target() {
            return Ok(());
        }
        let Some(&e) = self.order.get(pos) else {
            // Complete: every vertex is settled and the dead ones are exactly
            // those failing the predicate.
            self.best = Some((n - self.dead, self.colors.clone()));
            return Ok(());
        };
        let remaining = self.order.len() - pos;
        let (u, v) = self.g.edge(e);
        let stride = self.t + 1;
        for col in 1..=self.t {
            if self.used[u * stride + col] || self.used[v * stride + col] {
                continue;
            }
            let newly_used = self.color_uses[col] == 0;
            if remaining - 1 < self.unused - usize::from(newly_used) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Exhausted);
            }
            let saved = [(self.lo[u], self.hi[u]), (self.lo[v], self.hi[v])];
            let dead_before = usize::from(self.is_dead(u)) + usize::from(self.is_dead(v));
            for w in [u, v] {
                self.used[w * stride + col] = true;
                self.lo[w] = self.lo[w].min(col);
                self.hi[w] = self.hi[w].max(col);
            }
            let dead_after = usize::from(self.is_dead(u)) + usize::from(self.is_dead(v));
            self.dead = self.dead + dead_after - dead_before;
            self.colors[e] = col;
            self.color_uses[col] += 1;
            if newly_used {
                self.unused -= 1;
            }

            let res = self.extend(pos + 1);

            if newly_used {
                self.unused += 1;
            }
            self.color_uses[col] -= 1;
            self.colors[e] = 0;
            self.dead = self.dead + dead_before - dead_after;
            for (w, (lo, hi)) in [u, v].into_iter().zip(saved) {
                self.used[w * stride + col] = false;
                self.lo[w] = lo;
                self.hi[w] = hi;
            }
            res?;
            if self.best.as_ref().is_some_and(|b| b.0 == n) {
                return Ok(());
            }
        }
        Ok(())
    }
}
