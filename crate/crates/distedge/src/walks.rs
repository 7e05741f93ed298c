//! Directed walk counting.
//!
//! A walk of length `l` is an alternating sequence
//! `(v_0, e_1, v_1, ..., e_l, v_l)` where consecutive elements are incident.
//! Walks are counted as *directed* sequences: a single edge yields two walks
//! of length 1, one per orientation, and a walk and its reverse are counted
//! separately. Edges and vertices may repeat, including immediate
//! back-tracking over the edge just used.
//!
//! Counts run over all lengths `1..=max_len` via dynamic programming on
//! directed edge states (edge, head vertex), `O(max_len * m * max_degree)`
//! time. The same directed convention is used by the exhaustive enumeration
//! oracle in the test suite.

use crate::graph::{EdgeId, Graph, Vertex};

/// Per-length counts over directed edge states. State `2e` is edge `e`
/// traversed towards its higher-numbered endpoint, `2e + 1` the reverse.
struct WalkDp<'a> {
    g: &'a Graph,
    counts: Vec<u64>,
}

impl<'a> WalkDp<'a> {
    fn new(g: &'a Graph) -> Self {
        WalkDp {
            g,
            counts: vec![0; 2 * g.edge_count()],
        }
    }

    fn head(&self, state: usize) -> Vertex {
        let (a, b) = self.g.endpoints(EdgeId(state / 2));
        if state & 1 == 0 {
            b
        } else {
            a
        }
    }

    fn state_into(&self, e: EdgeId, head: Vertex) -> usize {
        let (_, b) = self.g.endpoints(e);
        if head == b {
            2 * e.index()
        } else {
            2 * e.index() + 1
        }
    }

    /// Length-1 walks along `e`, one per orientation.
    fn seed_edge(&mut self, e: EdgeId) {
        self.counts[2 * e.index()] = 1;
        self.counts[2 * e.index() + 1] = 1;
    }

    /// Length-1 walks leaving `u` along an edge marked in `allowed`.
    fn seed_vertex(&mut self, u: Vertex, allowed: &[bool]) {
        for &(w, e) in self.g.neighbours(u) {
            if allowed[e.index()] {
                let state = self.state_into(e, w);
                self.counts[state] += 1;
            }
        }
    }

    /// Extends every walk by one edge in all incident directions.
    fn step(&mut self) {
        let mut next = vec![0u64; self.counts.len()];
        for state in 0..self.counts.len() {
            let c = self.counts[state];
            if c == 0 {
                continue;
            }
            let v = self.head(state);
            for &(w, f) in self.g.neighbours(v) {
                next[self.state_into(f, w)] += c;
            }
        }
        self.counts = next;
    }
}

fn edge_mask(g: &Graph, set: &[EdgeId]) -> Vec<bool> {
    let mut mask = vec![false; g.edge_count()];
    for e in set {
        mask[e.index()] = true;
    }
    mask
}

/// `w_l(X, Y)`: the number of walks of length at most `max_len` whose first
/// edge is in `first` and whose last edge is in `last`. Empty sets give 0.
pub fn count_walks(g: &Graph, first: &[EdgeId], last: &[EdgeId], max_len: usize) -> u64 {
    assert!(max_len >= 1, "walk length bound must be >= 1");
    let last_mask = edge_mask(g, last);
    let mut dp = WalkDp::new(g);
    for &e in first {
        dp.seed_edge(e);
    }
    let mut total = 0u64;
    for round in 1..=max_len {
        total += dp
            .counts
            .iter()
            .enumerate()
            .filter(|&(state, _)| last_mask[state / 2])
            .map(|(_, &c)| c)
            .sum::<u64>();
        if round < max_len {
            dp.step();
        }
    }
    total
}

/// `tau(e, f) = max(w_{t+1}(e, f) - 1, 0)`.
pub fn tau(g: &Graph, e: EdgeId, f: EdgeId, t: usize) -> u64 {
    count_walks(g, &[e], &[f], t + 1).saturating_sub(1)
}

/// `sigma_l(u, v)`: the number of directed `u -> v` walks of length at most
/// `max_len` whose first edge lies in `n_hat`.
pub fn sigma(g: &Graph, n_hat: &[EdgeId], u: Vertex, v: Vertex, max_len: usize) -> u64 {
    assert!(max_len >= 1, "walk length bound must be >= 1");
    let allowed = edge_mask(g, n_hat);
    let mut dp = WalkDp::new(g);
    dp.seed_vertex(u, &allowed);
    let mut total = 0u64;
    for round in 1..=max_len {
        total += (0..dp.counts.len())
            .filter(|&s| dp.head(s) == v)
            .map(|s| dp.counts[s])
            .sum::<u64>();
        if round < max_len {
            dp.step();
        }
    }
    total
}

/// `sigma_l(u; f, v)`: as [`sigma`] but the walk must additionally end with
/// edge `last`. Summing over the edges incident with `v` recovers [`sigma`];
/// `last` not incident with `v` gives 0.
pub fn sigma_via(
    g: &Graph,
    n_hat: &[EdgeId],
    u: Vertex,
    last: EdgeId,
    v: Vertex,
    max_len: usize,
) -> u64 {
    assert!(max_len >= 1, "walk length bound must be >= 1");
    let (a, b) = g.endpoints(last);
    if a != v && b != v {
        return 0;
    }
    let allowed = edge_mask(g, n_hat);
    let mut dp = WalkDp::new(g);
    dp.seed_vertex(u, &allowed);
    let target = dp.state_into(last, v);
    let mut total = 0u64;
    for round in 1..=max_len {
        total += dp.counts[target];
        if round < max_len {
            dp.step();
        }
    }
    total
}
