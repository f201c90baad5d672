//! Simple connected undirected graphs, bipartitions, degree profiles and the
//! deterministic generators used as fixtures.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

/// Default number of pairings tried by [`gen_biregular`] before giving up.
pub const DEFAULT_PAIRING_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("loop at vertex {vertex} (edge {edge})")]
    Loop { edge: EdgeId, vertex: Vertex },
    #[error("repeated edge {{{u}, {v}}} (edge {edge})")]
    MultiEdge { edge: EdgeId, u: Vertex, v: Vertex },
    #[error("graph is disconnected: vertex {vertex} unreachable from vertex 0")]
    Disconnected { vertex: Vertex },
    #[error("vertex {vertex} out of range for {vertex_count} vertices (edge {edge})")]
    VertexOutOfRange {
        edge: EdgeId,
        vertex: Vertex,
        vertex_count: usize,
    },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graph is not bipartite; odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<Vertex> },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("no simple connected pairing found after {attempts} attempts; retry with another seed")]
    GenerationFailed { attempts: usize },
}

impl GraphError {
    /// Stable machine-readable code for each failure kind.
    pub fn code(&self) -> &'static str {
        match self {
            GraphError::Syntax { .. } => "syntax",
            GraphError::Loop { .. } => "loop",
            GraphError::MultiEdge { .. } => "multi-edge",
            GraphError::Disconnected { .. } => "disconnected",
            GraphError::VertexOutOfRange { .. } => "vertex-out-of-range",
            GraphError::NoVertices => "no-vertices",
            GraphError::NotBipartite { .. } => "not-bipartite",
            GraphError::InvalidBipartition(_) => "invalid-bipartition",
            GraphError::InvalidParameter(_) => "invalid-parameter",
            GraphError::GenerationFailed { .. } => "generation-failed",
        }
    }
}

/// A simple, finite, connected, undirected graph with vertices `0..n` and
/// edges numbered by insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut incidence = vec![Vec::new(); vertex_count];
        let mut seen = HashSet::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        edge: id,
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop { edge: id, vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::MultiEdge { edge: id, u, v });
            }
            incidence[u].push(id);
            incidence[v].push(id);
        }
        let g = Graph {
            vertex_count,
            edges,
            incidence,
        };
        if let Some(vertex) = g.first_unreachable() {
            return Err(GraphError::Disconnected { vertex });
        }
        Ok(g)
    }

    fn first_unreachable(&self) -> Option<Vertex> {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Incident edge ids of `v`, in increasing id order.
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incidence[v].iter().map(move |&e| self.other_end(e, v))
    }

    /// Relabel vertices by `perm` (old id -> new id), keeping edge ids.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph, GraphError> {
        if perm.len() != self.vertex_count {
            return Err(GraphError::InvalidParameter(format!(
                "relabeling has {} entries, graph has {} vertices",
                perm.len(),
                self.vertex_count
            )));
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.vertex_count, edges)
    }

    /// Parse the edge-list text format: `#` comment lines, a `v <n>` header
    /// and one `e <u> <v>` line per edge.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut vertex_count = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: &str| GraphError::Syntax {
                line: line_no,
                message: message.to_string(),
            };
            let mut parts = line.split_whitespace();
            let tag = parts.next().unwrap_or_default();
            let nums: Vec<&str> = parts.collect();
            match (tag, vertex_count) {
                ("v", None) => {
                    let [n] = nums[..] else {
                        return Err(syntax("expected `v <n>`"));
                    };
                    vertex_count = Some(
                        n.parse::<usize>()
                            .map_err(|_| syntax("vertex count is not a non-negative integer"))?,
                    );
                }
                ("v", Some(_)) => return Err(syntax("duplicate `v` line")),
                ("e", None) => return Err(syntax("`e` line before `v` header")),
                ("e", Some(_)) => {
                    let [a, b] = nums[..] else {
                        return Err(syntax("expected `e <u> <v>`"));
                    };
                    let u = a
                        .parse::<usize>()
                        .map_err(|_| syntax("vertex id is not a non-negative integer"))?;
                    let v = b
                        .parse::<usize>()
                        .map_err(|_| syntax("vertex id is not a non-negative integer"))?;
                    edges.push((u, v));
                }
                _ => return Err(syntax(&format!("unknown record `{tag}`"))),
            }
        }
        let Some(n) = vertex_count else {
            return Err(GraphError::Syntax {
                line: text.lines().count().max(1),
                message: "missing `v <n>` header".into(),
            });
        };
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("v {}\n", self.vertex_count);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect())
    }

    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::new(n, edges)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    X,
    Y,
}

/// A split `(X, Y)` of the vertex set with every edge crossing sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    x_side: Vec<Vertex>,
    y_side: Vec<Vertex>,
    side: Vec<Side>,
}

impl Bipartition {
    /// Build from an explicit X side; Y is the complement.
    pub fn from_x_side(g: &Graph, x_side: &[Vertex]) -> Result<Self, GraphError> {
        let mut side = vec![Side::Y; g.vertex_count()];
        for &v in x_side {
            if v >= g.vertex_count() {
                return Err(GraphError::InvalidBipartition(format!("vertex {v} out of range")));
            }
            side[v] = Side::X;
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if side[u] == side[v] {
                return Err(GraphError::InvalidBipartition(format!(
                    "edge {e} = {{{u}, {v}}} does not cross sides"
                )));
            }
        }
        Ok(Self::from_sides(side))
    }

    fn from_sides(side: Vec<Side>) -> Self {
        let x_side = (0..side.len()).filter(|&v| side[v] == Side::X).collect();
        let y_side = (0..side.len()).filter(|&v| side[v] == Side::Y).collect();
        Bipartition { x_side, y_side, side }
    }

    pub fn x_side(&self) -> &[Vertex] {
        &self.x_side
    }

    pub fn y_side(&self) -> &[Vertex] {
        &self.y_side
    }

    pub fn side(&self, which: Side) -> &[Vertex] {
        match which {
            Side::X => &self.x_side,
            Side::Y => &self.y_side,
        }
    }

    pub fn side_of(&self, v: Vertex) -> Side {
        self.side[v]
    }

    pub fn swapped(&self) -> Self {
        let side = self
            .side
            .iter()
            .map(|s| match s {
                Side::X => Side::Y,
                Side::Y => Side::X,
            })
            .collect();
        Self::from_sides(side)
    }
}

/// Breadth-first 2-coloring from vertex 0; vertex 0 lands in X.
pub fn bipartition(g: &Graph) -> Result<Bipartition, GraphError> {
    let n = g.vertex_count();
    let mut side: Vec<Option<Side>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::from([0]);
    side[0] = Some(Side::X);
    while let Some(v) = queue.pop_front() {
        let here = side[v].expect("queued vertices are colored");
        let there = match here {
            Side::X => Side::Y,
            Side::Y => Side::X,
        };
        for w in g.neighbors(v) {
            match side[w] {
                None => {
                    side[w] = Some(there);
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
                Some(s) if s == here => {
                    return Err(GraphError::NotBipartite {
                        cycle: odd_cycle(v, w, &parent, &depth),
                    });
                }
                Some(_) => {}
            }
        }
    }
    Ok(Bipartition::from_sides(
        side.into_iter().map(|s| s.expect("graph is connected")).collect(),
    ))
}

// Both endpoints share a BFS layer parity, so tree paths to their common
// ancestor plus the edge close an odd cycle.
fn odd_cycle(mut a: Vertex, mut b: Vertex, parent: &[Vertex], depth: &[usize]) -> Vec<Vertex> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub max_degree: usize,
    pub min_degree: usize,
    pub is_regular: bool,
    /// `(a, b)` when every X vertex has degree `a` and every Y vertex degree `b`.
    pub biregular: Option<(usize, usize)>,
}

pub fn degree_profile(g: &Graph, b: Option<&Bipartition>) -> DegreeProfile {
    let max_degree = g.max_degree();
    let min_degree = g.vertices().map(|v| g.degree(v)).min().unwrap_or(0);
    let uniform = |vs: &[Vertex]| -> Option<usize> {
        let d = g.degree(*vs.first()?);
        vs.iter().all(|&v| g.degree(v) == d).then_some(d)
    };
    let biregular = b.and_then(|b| Some((uniform(b.x_side())?, uniform(b.y_side())?)));
    DegreeProfile {
        max_degree,
        min_degree,
        is_regular: min_degree == max_degree,
        biregular,
    }
}

/// `K_{m,n}`: vertices `0..m` form the first side, `m..m+n` the second.
pub fn gen_complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(GraphError::InvalidParameter(format!(
            "K_{{m,n}} needs m, n >= 1, got ({m}, {n})"
        )));
    }
    let edges = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j))).collect();
    Graph::new(m + n, edges)
}

/// The Petersen graph: outer 5-cycle, five spokes, inner pentagram.
pub fn gen_petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    edges.extend((0..5).map(|i| (i, (i + 1) % 5)));
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    Graph::new(10, edges).expect("Petersen edge list is valid")
}

/// A random simple connected `(k-1, k)`-biregular bipartite graph with
/// `|X| = k*m` (vertices `0..k*m`, degree `k-1`) and `|Y| = (k-1)*m`
/// (degree `k`), drawn by stub pairing with full rejection.
pub fn gen_biregular(k: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    gen_biregular_with_attempts(k, m, seed, DEFAULT_PAIRING_ATTEMPTS)
}

pub fn gen_biregular_with_attempts(k: usize, m: usize, seed: u64, attempts: usize) -> Result<Graph, GraphError> {
    if k < 3 || m == 0 {
        return Err(GraphError::InvalidParameter(format!(
            "need k >= 3 and m >= 1, got k={k}, m={m}"
        )));
    }
    let x_count = k * m;
    let y_count = (k - 1) * m;
    let x_stubs: Vec<Vertex> = (0..x_count).flat_map(|x| std::iter::repeat_n(x, k - 1)).collect();
    let mut y_stubs: Vec<Vertex> = (0..y_count).flat_map(|y| std::iter::repeat_n(x_count + y, k)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        y_stubs.shuffle(&mut rng);
        let edges: Vec<(Vertex, Vertex)> = x_stubs.iter().copied().zip(y_stubs.iter().copied()).collect();
        match Graph::new(x_count + y_count, edges) {
            Ok(g) => return Ok(g),
            Err(GraphError::MultiEdge { .. } | GraphError::Disconnected { .. }) => continue,
            Err(other) => return Err(other),
        }
    }
    Err(GraphError::GenerationFailed { attempts })
}
