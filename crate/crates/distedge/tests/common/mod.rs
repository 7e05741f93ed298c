//! Independent oracles and shared fixtures for the integration suites.
//!
//! Every oracle here recomputes its quantity by a route different from the
//! implementation under test: exhaustive enumeration for walks and cycles,
//! BFS over the materialized line graph for edge distances and conflict
//! adjacency, and plain backtracking / subset scans for chromatic numbers
//! and independent sets.

#![allow(dead_code)]

use distedge::graph::{EdgeId, Graph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------- fixtures

pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::build(n, &pairs).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &pairs).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    Graph::build(n, &pairs).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..a {
        for v in 0..b {
            pairs.push((u, a + v));
        }
    }
    Graph::build(a + b, &pairs).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    let pairs: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::build(leaves + 1, &pairs).unwrap()
}

pub fn two_triangles_bridge() -> Graph {
    Graph::build(
        7,
        &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)],
    )
    .unwrap()
}

/// Small connected-ish graphs, all on at most 12 vertices.
pub fn small_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("K2", path(2)),
        ("P4", path(4)),
        ("P5", path(5)),
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("C8", cycle(8)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K33", complete_bipartite(3, 3)),
        ("K14", star(4)),
        ("two-triangles", two_triangles_bridge()),
        ("petersen", distedge::constructions::petersen()),
        ("two-components", Graph::build(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap()),
        ("rng-9", random_graph(9, 0.35, 1001)),
        ("rng-10", random_graph(10, 0.3, 2002)),
        ("rng-12", random_graph(12, 0.25, 3003)),
    ]
}

/// Seeded G(n, p); never fails since duplicate pairs are impossible.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                pairs.push((u, v));
            }
        }
    }
    Graph::build(n, &pairs).unwrap()
}

/// Seeded random graph with maximum degree capped at `max_deg`.
pub fn random_bounded_degree_graph(n: usize, max_deg: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut deg = vec![0usize; n];
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if deg[u] < max_deg && deg[v] < max_deg && rng.random::<f64>() < p {
                deg[u] += 1;
                deg[v] += 1;
                pairs.push((u, v));
            }
        }
    }
    Graph::build(n, &pairs).unwrap()
}

// ------------------------------------------------------------ walk oracle

/// Exhaustive enumeration of directed walks `(v0, e1, ..., el, vl)` with
/// `e1` in `first`, `el` in `last`, `1 <= l <= max_len`.
pub fn enumerate_walks(g: &Graph, first: &[EdgeId], last: &[EdgeId], max_len: usize) -> u64 {
    let last_mask = mask(g, last);
    let mut total = 0;
    for &e in first {
        let (a, b) = g.endpoints(e);
        for (_tail, head) in [(a, b), (b, a)] {
            walk_rec(g, &last_mask, e, head, 1, max_len, &mut total);
        }
    }
    total
}

fn walk_rec(
    g: &Graph,
    last_mask: &[bool],
    edge: EdgeId,
    head: Vertex,
    len: usize,
    max_len: usize,
    total: &mut u64,
) {
    if last_mask[edge.index()] {
        *total += 1;
    }
    if len == max_len {
        return;
    }
    for &(w, f) in g.neighbours(head) {
        walk_rec(g, last_mask, f, w, len + 1, max_len, total);
    }
}

/// Exhaustive `sigma`: directed `u -> v` walks of length `<= max_len` whose
/// first edge is in `n_hat`; with `via` set, the last edge must equal it.
pub fn enumerate_sigma(
    g: &Graph,
    n_hat: &[EdgeId],
    u: Vertex,
    v: Vertex,
    max_len: usize,
    via: Option<EdgeId>,
) -> u64 {
    let allowed = mask(g, n_hat);
    let mut total = 0;
    for &(w, e) in g.neighbours(u) {
        if allowed[e.index()] {
            sigma_rec(g, v, via, e, w, 1, max_len, &mut total);
        }
    }
    total
}

#[allow(clippy::too_many_arguments)]
fn sigma_rec(
    g: &Graph,
    target: Vertex,
    via: Option<EdgeId>,
    edge: EdgeId,
    head: Vertex,
    len: usize,
    max_len: usize,
    total: &mut u64,
) {
    if head == target && via.is_none_or(|f| f == edge) {
        *total += 1;
    }
    if len == max_len {
        return;
    }
    for &(w, f) in g.neighbours(head) {
        sigma_rec(g, target, via, f, w, len + 1, max_len, total);
    }
}

fn mask(g: &Graph, set: &[EdgeId]) -> Vec<bool> {
    let mut mask = vec![false; g.edge_count()];
    for e in set {
        mask[e.index()] = true;
    }
    mask
}

// -------------------------------------------------------- distance oracle

/// Edge distance recomputed as BFS distance in the materialized line graph.
pub fn line_graph_bfs_distance(line: &Graph, e: EdgeId, f: EdgeId) -> Option<usize> {
    line.vertex_distance(e.index(), f.index())
}

/// Conflict adjacency recomputed as "within distance t in the line graph".
pub fn conflict_matrix_via_line_graph(g: &Graph, t: usize) -> Vec<Vec<bool>> {
    let line = g.line_graph();
    let m = g.edge_count();
    let mut matrix = vec![vec![false; m]; m];
    for (e, row) in matrix.iter_mut().enumerate() {
        let dist = line.distances_from_vertex(e);
        for (f, cell) in row.iter_mut().enumerate() {
            if f != e && dist[f].is_some_and(|d| d <= t) {
                *cell = true;
            }
        }
    }
    matrix
}

// ----------------------------------------------------------- girth oracle

/// Exhaustive shortest-cycle search: DFS over simple paths whose smallest
/// vertex is the start, closing back to the start.
pub fn exhaustive_girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut on_path = vec![false; n];
    for start in 0..n {
        on_path[start] = true;
        girth_dfs(g, start, start, 1, &mut on_path, &mut best);
        on_path[start] = false;
    }
    best
}

fn girth_dfs(
    g: &Graph,
    start: Vertex,
    at: Vertex,
    len: usize,
    on_path: &mut Vec<bool>,
    best: &mut Option<usize>,
) {
    for &(w, _) in g.neighbours(at) {
        if w == start && len >= 3 && best.is_none_or(|b| len < b) {
            *best = Some(len);
        }
        // Only cycles whose minimum vertex is `start`, each walked twice.
        if w > start && !on_path[w] && best.is_none_or(|b| len + 1 < b) {
            on_path[w] = true;
            girth_dfs(g, start, w, len + 1, on_path, best);
            on_path[w] = false;
        }
    }
}

// ------------------------------------------------- colouring / MIS oracle

/// Brute-force chromatic number: try k = 1, 2, ... with plain backtracking
/// (only the fresh-colour symmetry cap, no bounds, no heuristics).
pub fn brute_chromatic(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let mut colour = vec![usize::MAX; n];
    for k in 1..=n {
        if brute_colour_rec(adj, k, 0, 0, &mut colour) {
            return k;
        }
    }
    unreachable!("n colours always suffice")
}

fn brute_colour_rec(
    adj: &[Vec<usize>],
    k: usize,
    v: usize,
    used: usize,
    colour: &mut [usize],
) -> bool {
    if v == adj.len() {
        return true;
    }
    // Colours beyond the first unused one are interchangeable.
    let cap = k.min(used + 1);
    for c in 0..cap {
        if adj[v].iter().any(|&w| colour[w] == c) {
            continue;
        }
        colour[v] = c;
        if brute_colour_rec(adj, k, v + 1, used.max(c + 1), colour) {
            return true;
        }
    }
    colour[v] = usize::MAX;
    false
}

/// Brute-force maximum independent set size by scanning all subsets.
/// Only for `n <= 24`.
pub fn brute_max_independent_set(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    assert!(n <= 24, "subset scan limited to 24 vertices");
    let nbr: Vec<u32> = adj
        .iter()
        .map(|row| row.iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect();
    let mut best = 0;
    for set in 0u32..(1 << n) {
        if set.count_ones() as usize <= best {
            continue;
        }
        let mut ok = true;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if nbr[v] & set != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            best = set.count_ones() as usize;
        }
    }
    best
}
