use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// The conflict graph `L(G)^t`: one vertex per edge of the base graph, two
/// edges adjacent iff their edge distance in the base graph is at most `t`.
///
/// Proper vertex colourings of the conflict graph are exactly the distance-t
/// edge colourings of the base graph. Immutable after construction.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    base: Graph,
    t: usize,
    adj: Vec<Vec<usize>>,
    max_degree: usize,
}

impl ConflictGraph {
    /// Builds `L(G)^t` with a depth-`t-1` BFS in the base graph from the
    /// endpoints of each edge, never materializing the line graph: an edge
    /// `f` is within edge distance `t` of `e` iff some endpoint of `f` is
    /// within vertex distance `t - 1` of `e`.
    pub fn build(g: &Graph, t: usize) -> Result<ConflictGraph> {
        if t == 0 {
            return Err(Error::invalid("t", "distance parameter must be >= 1"));
        }
        let m = g.edge_count();
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(m);
        let mut dist: Vec<usize> = vec![usize::MAX; g.vertex_count()];
        let mut touched: Vec<Vertex> = Vec::new();
        let mut near: Vec<bool> = vec![false; m];
        let mut queue = VecDeque::new();

        for e in 0..m {
            let (a, b) = g.endpoints(EdgeId(e));
            queue.clear();
            dist[a] = 0;
            dist[b] = 0;
            touched.push(a);
            touched.push(b);
            queue.push_back(a);
            queue.push_back(b);
            let mut hits: Vec<usize> = Vec::new();
            while let Some(u) = queue.pop_front() {
                let du = dist[u];
                for &(w, f) in g.neighbours(u) {
                    if !near[f.index()] {
                        near[f.index()] = true;
                        hits.push(f.index());
                    }
                    if du + 1 < t && dist[w] == usize::MAX {
                        dist[w] = du + 1;
                        touched.push(w);
                        queue.push_back(w);
                    }
                }
            }
            let mut row: Vec<usize> = Vec::with_capacity(hits.len());
            for &f in &hits {
                near[f] = false;
                if f != e {
                    row.push(f);
                }
            }
            for &v in &touched {
                dist[v] = usize::MAX;
            }
            touched.clear();
            row.sort_unstable();
            adj.push(row);
        }

        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Ok(ConflictGraph {
            base: g.clone(),
            t,
            adj,
            max_degree,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of conflict-graph vertices, i.e. base-graph edges.
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of conflict-graph edges (unordered pairs).
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn degree(&self, e: EdgeId) -> usize {
        self.adj[e.index()].len()
    }

    pub fn neighbours(&self, e: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
        self.adj[e.index()].iter().copied().map(EdgeId)
    }

    /// Adjacency lists indexed by edge id, sorted ascending.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn are_adjacent(&self, e: EdgeId, f: EdgeId) -> bool {
        self.adj[e.index()].binary_search(&f.index()).is_ok()
    }

    /// `2 * sum_{j=1..t} (max_degree - 1)^j`, the textbook bound on the
    /// maximum degree of `L(G)^t`.
    pub fn degree_bound(&self) -> u64 {
        degree_bound(self.base.max_degree(), self.t)
    }
}

/// `2 * sum_{j=1..t} (delta - 1)^j` for a base graph of maximum degree
/// `delta`; saturates instead of overflowing.
pub fn degree_bound(delta: usize, t: usize) -> u64 {
    let d = delta.saturating_sub(1) as u64;
    let mut sum: u64 = 0;
    let mut power: u64 = 1;
    for _ in 1..=t {
        power = power.saturating_mul(d);
        sum = sum.saturating_add(power);
    }
    sum.saturating_mul(2)
}
