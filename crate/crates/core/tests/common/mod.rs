#![allow(dead_code)]
pub mod props;

use spectra::coloring::EdgeColoring;
use spectra::graph::{gen_complete_bipartite, Graph};

/// Fixture graphs with at most nine edges.
pub fn small_fixtures() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in [3, 4, 5, 6, 7, 8, 9] {
        out.push((format!("C{n}"), Graph::cycle(n).unwrap()));
    }
    for n in [2, 3, 4, 5, 6] {
        out.push((format!("P{n}"), Graph::path(n).unwrap()));
    }
    for (m, n) in [
        (1, 2),
        (1, 3),
        (1, 4),
        (2, 1),
        (3, 1),
        (2, 2),
        (2, 3),
        (3, 2),
        (2, 4),
        (4, 2),
        (3, 3),
    ] {
        out.push((format!("K{m},{n}"), gen_complete_bipartite(m, n).unwrap()));
    }
    out.push(("K4".into(), Graph::complete(4).unwrap()));
    out
}

fn spectrum(g: &Graph, colors: &[usize], v: usize) -> Vec<usize> {
    let mut s: Vec<usize> = g.incident(v).iter().map(|&e| colors[e]).collect();
    s.sort_unstable();
    s
}

/// Colors at each vertex are pairwise distinct and every color in `1..=t` occurs.
pub fn naive_valid(g: &Graph, colors: &[usize], t: usize) -> bool {
    let mut seen = vec![false; t + 1];
    for &c in colors {
        if c == 0 || c > t {
            return false;
        }
        seen[c] = true;
    }
    if !seen[1..].iter().all(|&b| b) {
        return false;
    }
    (0..g.vertex_count()).all(|v| {
        let s = spectrum(g, colors, v);
        s.windows(2).all(|w| w[0] != w[1])
    })
}

pub fn naive_counts(g: &Graph, colors: &[usize]) -> (usize, usize) {
    let mut fi = 0;
    let mut fpi = 0;
    for v in 0..g.vertex_count() {
        let s = spectrum(g, colors, v);
        if s.is_empty() {
            fi += 1;
            fpi += 1;
            continue;
        }
        if s[s.len() - 1] - s[0] + 1 == s.len() {
            fi += 1;
            if s[0] == 1 {
                fpi += 1;
            }
        }
    }
    (fi, fpi)
}

/// Every assignment in `[1, t]^E` for every `t`, filtered to valid colorings.
pub fn for_each_coloring(g: &Graph, mut visit: impl FnMut(&[usize], usize)) {
    let m = g.edge_count();
    for t in 1..=m {
        let mut colors = vec![1; m];
        loop {
            if naive_valid(g, &colors, t) {
                visit(&colors, t);
            }
            let mut i = 0;
            while i < m && colors[i] == t {
                colors[i] = 1;
                i += 1;
            }
            if i == m {
                break;
            }
            colors[i] += 1;
        }
    }
}

/// `(max f_i, max f_pi)` by plain enumeration.
pub fn naive_eta(g: &Graph) -> (usize, usize) {
    let mut best = (0, 0);
    for_each_coloring(g, |c, _| {
        let (fi, fpi) = naive_counts(g, c);
        best = (best.0.max(fi), best.1.max(fpi));
    });
    best
}

/// Smallest `t` with a proper `t`-coloring, by plain enumeration.
pub fn naive_min_colors(g: &Graph) -> usize {
    let mut best = usize::MAX;
    for_each_coloring(g, |_, t| best = best.min(t));
    best
}

/// Whether a proper coloring with colors from `1..=t` exists (not required surjective).
pub fn colorable_with(g: &Graph, t: usize) -> bool {
    fn go(g: &Graph, t: usize, e: usize, colors: &mut Vec<usize>) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let (u, v) = g.edge(e);
        for c in 1..=t {
            let clash = g
                .incident(u)
                .iter()
                .chain(g.incident(v))
                .any(|&f| f < e && colors[f] == c);
            if !clash {
                colors[e] = c;
                if go(g, t, e + 1, colors) {
                    return true;
                }
            }
        }
        colors[e] = 0;
        false
    }
    go(g, t, 0, &mut vec![0; g.edge_count()])
}

pub fn counts_of(g: &Graph, c: &EdgeColoring) -> (usize, usize) {
    naive_counts(g, c.colors())
}
