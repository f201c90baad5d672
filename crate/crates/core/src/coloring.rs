//! Proper edge colorings: validation, König and Misra–Gries constructions,
//! exact chromatic index, color permutations and Kempe-chain swaps.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Bipartition, EdgeId, Graph, Vertex};

pub type Color = usize;

/// Default node-expansion budget for exact searches.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("coloring covers {got} edges, graph has {expected}")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error("edges {first} and {second} share color {color} at vertex {vertex}")]
    Improper {
        vertex: Vertex,
        first: EdgeId,
        second: EdgeId,
        color: Color,
    },
    #[error("kempe swap needs two distinct colors, got {0} twice")]
    SameColors(Color),
    #[error("vertex {vertex} carries both colors {a} and {b}; no alternating path starts there")]
    StartHasBoth { vertex: Vertex, a: Color, b: Color },
    #[error("vertex {vertex} carries neither color {a} nor {b}")]
    StartHasNeither { vertex: Vertex, a: Color, b: Color },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("permutation acts on [1, {permutation}] but coloring uses t = {coloring}")]
    PermutationDomainMismatch { permutation: Color, coloring: Color },
    #[error("mapping is not a bijection on [1, {t}]: {mapping:?}")]
    NotBijective { t: Color, mapping: Vec<Color> },
    #[error("search budget exhausted after {nodes} node expansions")]
    BudgetExhausted { nodes: u64 },
}

/// A total map from edge ids to colors, together with the palette size `t`.
///
/// Construction does not validate; see [`validate_coloring`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeColoring {
    colors: Vec<Color>,
    t: Color,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>, t: Color) -> Self {
        EdgeColoring { colors, t }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn t(&self) -> Color {
        self.t
    }

    /// Squeeze out unused colors, renumbering the rest in order.
    pub fn compacted(&self) -> EdgeColoring {
        let used: BTreeMap<Color, Color> = {
            let mut set: Vec<Color> = self.colors.clone();
            set.sort_unstable();
            set.dedup();
            set.into_iter().enumerate().map(|(i, c)| (c, i + 1)).collect()
        };
        EdgeColoring {
            colors: self.colors.iter().map(|c| used[c]).collect(),
            t: used.len(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("t {}\n", self.t);
        for (e, c) in self.colors.iter().enumerate() {
            let _ = writeln!(out, "c {e} {c}");
        }
        out
    }

    /// Parse `t <t>` followed by one `c <edge_id> <color>` line per edge.
    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let mut t = None;
        let mut assigned: BTreeMap<EdgeId, Color> = BTreeMap::new();
        let mut last_line = 1;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: &str| ColoringError::Syntax {
                line: line_no,
                message: message.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| syntax("expected a non-negative integer"))
            };
            match (fields[..].first().copied(), t) {
                (Some("t"), None) if fields.len() == 2 => t = Some(num(fields[1])?),
                (Some("t"), _) => return Err(syntax("expected a single `t <t>` line")),
                (Some("c"), Some(_)) if fields.len() == 3 => {
                    if assigned.insert(num(fields[1])?, num(fields[2])?).is_some() {
                        return Err(syntax("edge colored twice"));
                    }
                }
                (Some("c"), _) => return Err(syntax("expected `c <edge> <color>` after the `t` line")),
                _ => return Err(syntax("unknown record")),
            }
        }
        let t = t.ok_or(ColoringError::Syntax {
            line: last_line,
            message: "missing `t <t>` line".into(),
        })?;
        if let Some((pos, _)) = assigned.keys().enumerate().find(|&(i, &e)| i != e) {
            return Err(ColoringError::Syntax {
                line: last_line,
                message: format!("edge {pos} has no color"),
            });
        }
        Ok(EdgeColoring {
            colors: assigned.into_values().collect(),
            t,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub vertex: Vertex,
    pub edges: (EdgeId, EdgeId),
    pub color: Color,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    /// `(graph edges, colored edges)` when the two differ.
    pub edge_count_mismatch: Option<(usize, usize)>,
    /// Edges whose color lies outside `[1, t]`.
    pub out_of_range: Vec<(EdgeId, Color)>,
    pub conflicts: Vec<Conflict>,
    pub unused_colors: Vec<Color>,
    pub t_exceeds_edge_count: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.edge_count_mismatch.is_none()
            && self.out_of_range.is_empty()
            && self.conflicts.is_empty()
            && self.unused_colors.is_empty()
            && !self.t_exceeds_edge_count
    }

    pub fn is_proper(&self) -> bool {
        self.edge_count_mismatch.is_none() && self.out_of_range.is_empty() && self.conflicts.is_empty()
    }
}

pub fn validate_coloring(g: &Graph, c: &EdgeColoring) -> ValidationReport {
    let mut report = ValidationReport::default();
    if c.colors.len() != g.edge_count() {
        report.edge_count_mismatch = Some((g.edge_count(), c.colors.len()));
        return report;
    }
    report.t_exceeds_edge_count = c.t > g.edge_count();
    let mut used = vec![false; c.t + 1];
    for (e, &col) in c.colors.iter().enumerate() {
        if col == 0 || col > c.t {
            report.out_of_range.push((e, col));
        } else {
            used[col] = true;
        }
    }
    report.unused_colors = (1..=c.t).filter(|&col| !used[col]).collect();
    for v in g.vertices() {
        let mut first_with: BTreeMap<Color, EdgeId> = BTreeMap::new();
        for &e in g.incident(v) {
            let col = c.colors[e];
            match first_with.get(&col) {
                Some(&first) => report.conflicts.push(Conflict {
                    vertex: v,
                    edges: (first, e),
                    color: col,
                }),
                None => {
                    first_with.insert(col, e);
                }
            }
        }
    }
    report
}

/// Per-vertex lookup `color -> incident edge` over the palette `[1, palette]`.
struct ColorTable {
    at: Vec<Vec<Option<EdgeId>>>,
    colors: Vec<Color>,
}

impl ColorTable {
    fn empty(g: &Graph, palette: Color) -> Self {
        ColorTable {
            at: vec![vec![None; palette + 1]; g.vertex_count()],
            colors: vec![0; g.edge_count()],
        }
    }

    fn from_coloring(g: &Graph, c: &EdgeColoring) -> Result<Self, ColoringError> {
        if c.colors.len() != g.edge_count() {
            return Err(ColoringError::EdgeCountMismatch {
                expected: g.edge_count(),
                got: c.colors.len(),
            });
        }
        let palette = c.colors.iter().copied().max().unwrap_or(0).max(c.t);
        let mut table = ColorTable::empty(g, palette);
        for (e, &col) in c.colors.iter().enumerate() {
            let (u, v) = g.edge(e);
            for w in [u, v] {
                if let Some(first) = table.at[w][col] {
                    return Err(ColoringError::Improper {
                        vertex: w,
                        first,
                        second: e,
                        color: col,
                    });
                }
            }
            table.set(g, e, col);
        }
        Ok(table)
    }

    fn palette(&self) -> Color {
        self.at.first().map_or(0, |row| row.len() - 1)
    }

    fn is_free(&self, v: Vertex, col: Color) -> bool {
        self.at[v][col].is_none()
    }

    fn lowest_free(&self, v: Vertex) -> Option<Color> {
        (1..=self.palette()).find(|&col| self.is_free(v, col))
    }

    fn set(&mut self, g: &Graph, e: EdgeId, col: Color) {
        let (u, v) = g.edge(e);
        self.at[u][col] = Some(e);
        self.at[v][col] = Some(e);
        self.colors[e] = col;
    }

    fn clear(&mut self, g: &Graph, e: EdgeId) {
        let col = self.colors[e];
        if col != 0 {
            let (u, v) = g.edge(e);
            self.at[u][col] = None;
            self.at[v][col] = None;
            self.colors[e] = 0;
        }
    }

    /// Maximal path from `start` alternating `first`, `other`, `first`, ...
    fn alternating_path(&self, g: &Graph, start: Vertex, first: Color, other: Color) -> (Vec<Vertex>, Vec<EdgeId>) {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let (mut cur, mut col) = (start, first);
        while let Some(e) = self.at[cur][col] {
            // A start vertex missing one of the two colors is a path endpoint, so
            // the walk cannot revisit an edge; the guard keeps misuse finite.
            if edges.len() > g.edge_count() {
                break;
            }
            edges.push(e);
            cur = g.other_end(e, cur);
            vertices.push(cur);
            col = if col == first { other } else { first };
        }
        (vertices, edges)
    }

    fn swap_on(&mut self, g: &Graph, edges: &[EdgeId], a: Color, b: Color) {
        let new: Vec<Color> = edges.iter().map(|&e| if self.colors[e] == a { b } else { a }).collect();
        for &e in edges {
            self.clear(g, e);
        }
        for (&e, col) in edges.iter().zip(new) {
            self.set(g, e, col);
        }
    }
}

/// König-style Δ-coloring of a bipartite graph: edges are inserted in id
/// order, and when no color is free at both ends the alternating path from
/// one endpoint is flipped to make one.
pub fn color_bipartite_delta(g: &Graph, b: &Bipartition) -> EdgeColoring {
    let delta = g.max_degree();
    let mut table = ColorTable::empty(g, delta);
    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);
        if let Some(col) = (1..=delta).find(|&col| table.is_free(u, col) && table.is_free(v, col)) {
            table.set(g, e, col);
            continue;
        }
        let a = table.lowest_free(u).expect("u has an uncolored incident edge");
        let b_col = table.lowest_free(v).expect("v has an uncolored incident edge");
        // The a/b path from v alternates sides and cannot reach u in a
        // bipartite graph.
        let (path, edges) = table.alternating_path(g, v, a, b_col);
        debug_assert!(b.side_of(u) != b.side_of(v) && !path.contains(&u));
        table.swap_on(g, &edges, a, b_col);
        table.set(g, e, a);
    }
    EdgeColoring {
        colors: table.colors,
        t: delta,
    }
}

/// Misra–Gries fan rotation with at most Δ+1 colors, then compacted so every
/// color in `[1, t]` is used.
pub fn color_vizing(g: &Graph) -> EdgeColoring {
    let palette = g.max_degree() + 1;
    let mut table = ColorTable::empty(g, palette);
    for e in 0..g.edge_count() {
        let (u, v) = g.edge(e);

        let mut fan = vec![v];
        let mut fan_edges = vec![e];
        loop {
            let last = *fan.last().expect("fan is nonempty");
            let next = (1..=palette).find_map(|col| {
                let f = table.at[u][col]?;
                let w = g.other_end(f, u);
                (table.is_free(last, col) && !fan.contains(&w)).then_some((w, f))
            });
            match next {
                Some((w, f)) => {
                    fan.push(w);
                    fan_edges.push(f);
                }
                None => break,
            }
        }

        let c = table.lowest_free(u).expect("u has an uncolored edge");
        let d = table
            .lowest_free(*fan.last().expect("fan is nonempty"))
            .expect("fan end has an uncolored slot");

        let (_, cd_path) = table.alternating_path(g, u, d, c);
        table.swap_on(g, &cd_path, c, d);

        let w = fan
            .iter()
            .position(|&f| table.is_free(f, d))
            .expect("some fan vertex is free on d");
        debug_assert!((1..=w).all(|i| table.is_free(fan[i - 1], table.colors[fan_edges[i]])));

        let shifted: Vec<Color> = (0..w).map(|i| table.colors[fan_edges[i + 1]]).collect();
        for &f in &fan_edges[..=w] {
            table.clear(g, f);
        }
        for (i, col) in shifted.into_iter().enumerate() {
            table.set(g, fan_edges[i], col);
        }
        table.set(g, fan_edges[w], d);
    }
    EdgeColoring {
        colors: table.colors,
        t: palette,
    }
    .compacted()
}

/// Backtracking search for a proper coloring with colors `[1, t]` where edge
/// `e` may only use colors up to `limit[e]`.
pub(crate) struct ProperSearch<'g> {
    g: &'g Graph,
    order: Vec<EdgeId>,
    limit: Vec<Color>,
    used: Vec<Vec<bool>>,
    colors: Vec<Color>,
    nodes: u64,
    budget: u64,
}

impl<'g> ProperSearch<'g> {
    pub(crate) fn new(g: &'g Graph, t: Color, budget: u64) -> Self {
        ProperSearch {
            g,
            order: Vec::new(),
            limit: vec![t; g.edge_count()],
            used: vec![vec![false; t + 1]; g.vertex_count()],
            colors: vec![0; g.edge_count()],
            nodes: 0,
            budget,
        }
    }

    pub(crate) fn restrict(&mut self, e: EdgeId, max_color: Color) {
        self.limit[e] = self.limit[e].min(max_color);
    }

    pub(crate) fn fix(&mut self, e: EdgeId, col: Color) {
        let (u, v) = self.g.edge(e);
        self.used[u][col] = true;
        self.used[v][col] = true;
        self.colors[e] = col;
    }

    /// Find the first proper coloring in search order, if any.
    pub(crate) fn run(mut self) -> Result<(Option<Vec<Color>>, u64), ColoringError> {
        let fixed: Vec<EdgeId> = (0..self.g.edge_count()).filter(|&e| self.colors[e] != 0).collect();
        self.order = search_order(self.g, &fixed);
        let found = self.extend(0)?;
        Ok((found.then_some(self.colors), self.nodes))
    }

    fn extend(&mut self, pos: usize) -> Result<bool, ColoringError> {
        let Some(&e) = self.order.get(pos) else {
            return Ok(true);
        };
        let (u, v) = self.g.edge(e);
        for col in 1..=self.limit[e] {
            if self.used[u][col] || self.used[v][col] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(ColoringError::BudgetExhausted { nodes: self.nodes - 1 });
            }
            self.fix(e, col);
            if self.extend(pos + 1)? {
                return Ok(true);
            }
            self.used[u][col] = false;
            self.used[v][col] = false;
            self.colors[e] = 0;
        }
        Ok(false)
    }
}

/// Uncolored edges in breadth-first order from the already-colored ones (or
/// vertex 0), taking higher-degree neighbours first at each vertex.
pub(crate) fn search_order(g: &Graph, colored: &[EdgeId]) -> Vec<EdgeId> {
    let mut placed = vec![false; g.edge_count()];
    let mut visited = vec![false; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    for &e in colored {
        placed[e] = true;
        let (u, v) = g.edge(e);
        for w in [u, v] {
            if !visited[w] {
                visited[w] = true;
                queue.push_back(w);
            }
        }
    }
    if queue.is_empty() {
        visited[0] = true;
        queue.push_back(0);
    }
    let mut order = Vec::with_capacity(g.edge_count());
    while let Some(v) = queue.pop_front() {
        let mut fresh: Vec<EdgeId> = g.incident(v).iter().copied().filter(|&e| !placed[e]).collect();
        fresh.sort_by_key(|&e| std::cmp::Reverse(g.degree(g.other_end(e, v))));
        for e in fresh {
            placed[e] = true;
            order.push(e);
            let w = g.other_end(e, v);
            if !visited[w] {
                visited[w] = true;
                queue.push_back(w);
            }
        }
    }
    order
}

/// Exact chromatic index: Δ if a proper Δ-coloring exists, otherwise Δ+1.
///
/// The edges at the lowest-numbered maximum-degree vertex are pinned to
/// colors `1..=Δ`, which loses no generality up to renaming colors.
pub fn chromatic_index(g: &Graph, budget: u64) -> Result<Color, ColoringError> {
    Ok(class_one_witness(g, budget)?.map_or(g.max_degree() + 1, |c| c.t()))
}

/// A proper Δ-coloring when one exists.
pub fn class_one_witness(g: &Graph, budget: u64) -> Result<Option<EdgeColoring>, ColoringError> {
    let delta = g.max_degree();
    if delta == 0 {
        return Ok(Some(EdgeColoring::new(Vec::new(), 0)));
    }
    let hub = g
        .vertices()
        .find(|&v| g.degree(v) == delta)
        .expect("some vertex has maximum degree");
    let mut search = ProperSearch::new(g, delta, budget);
    for (i, &e) in g.incident(hub).iter().enumerate() {
        search.fix(e, i + 1);
    }
    let (found, _) = search.run()?;
    Ok(found.map(|colors| EdgeColoring::new(colors, delta)))
}

/// A bijection on `[1, t]`, stored as `mapping[c - 1] = image of c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColorPermutation {
    mapping: Vec<Color>,
}

impl ColorPermutation {
    pub fn new(mapping: Vec<Color>) -> Result<Self, ColoringError> {
        let t = mapping.len();
        let mut hit = vec![false; t + 1];
        for &c in &mapping {
            if c == 0 || c > t || std::mem::replace(&mut hit[c], true) {
                return Err(ColoringError::NotBijective { t, mapping });
            }
        }
        Ok(ColorPermutation { mapping })
    }

    pub fn identity(t: Color) -> Self {
        ColorPermutation {
            mapping: (1..=t).collect(),
        }
    }

    pub fn transposition(t: Color, a: Color, b: Color) -> Result<Self, ColoringError> {
        let mapping = (1..=t)
            .map(|c| {
                if c == a {
                    b
                } else if c == b {
                    a
                } else {
                    c
                }
            })
            .collect();
        Self::new(mapping)
    }

    /// `c -> (c + offset) mod t`, with `wrap` (the preimage of residue 0)
    /// sent to `t`. Fails unless that yields a bijection on `[1, t]`.
    pub fn cyclic_shift(t: Color, offset: Color, wrap: Color) -> Result<Self, ColoringError> {
        let mapping = (1..=t).map(|c| if c == wrap { t } else { (c + offset) % t }).collect();
        Self::new(mapping)
    }

    /// `c -> t + 1 - c`.
    pub fn reversal(t: Color) -> Self {
        ColorPermutation {
            mapping: (1..=t).rev().collect(),
        }
    }

    pub fn t(&self) -> Color {
        self.mapping.len()
    }

    pub fn image(&self, c: Color) -> Color {
        self.mapping[c - 1]
    }

    pub fn mapping(&self) -> &[Color] {
        &self.mapping
    }
}

pub fn apply_color_permutation(c: &EdgeColoring, p: &ColorPermutation) -> Result<EdgeColoring, ColoringError> {
    if p.t() != c.t {
        return Err(ColoringError::PermutationDomainMismatch {
            permutation: p.t(),
            coloring: c.t,
        });
    }
    let colors = c
        .colors
        .iter()
        .map(|&col| if (1..=c.t).contains(&col) { p.image(col) } else { col })
        .collect();
    Ok(EdgeColoring { colors, t: c.t })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeSwap {
    pub coloring: EdgeColoring,
    /// Path vertices in walk order, starting at the start vertex.
    pub path: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl KempeSwap {
    pub fn far_end(&self) -> Vertex {
        *self.path.last().expect("path contains the start vertex")
    }
}

/// Exchange colors `a` and `b` along the maximal `a`/`b`-alternating path
/// that begins at `start`.
pub fn kempe_swap(g: &Graph, c: &EdgeColoring, start: Vertex, a: Color, b: Color) -> Result<KempeSwap, ColoringError> {
    if a == b {
        return Err(ColoringError::SameColors(a));
    }
    if start >= g.vertex_count() {
        return Err(ColoringError::VertexOutOfRange(start));
    }
    let mut table = ColorTable::from_coloring(g, c)?;
    let has = |col: Color| table.at[start].get(col).is_some_and(Option::is_some);
    let first = match (has(a), has(b)) {
        (true, true) => return Err(ColoringError::StartHasBoth { vertex: start, a, b }),
        (false, false) => return Err(ColoringError::StartHasNeither { vertex: start, a, b }),
        (true, false) => a,
        (false, true) => b,
    };
    let other = if first == a { b } else { a };
    if table.palette() < other {
        table.at.iter_mut().for_each(|row| row.resize(other + 1, None));
    }
    let (path, edges) = table.alternating_path(g, start, first, other);
    table.swap_on(g, &edges, a, b);
    Ok(KempeSwap {
        coloring: EdgeColoring {
            colors: table.colors,
            t: c.t,
        },
        path,
        edges,
    })
}
