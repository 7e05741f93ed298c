use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertices are dense indices `0..n`.
pub type Vertex = usize;

/// Identifier of an edge: dense indices `0..m`, stable for the lifetime of
/// the graph and reused as vertex ids of the line graph and conflict graph.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A simple undirected graph: no loops, no parallel edges.
///
/// Edges are stored in insertion order and identified by [`EdgeId`]. The
/// adjacency lists carry `(neighbour, edge id)` pairs so that incidence
/// queries never need a lookup table. Immutable after construction.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from a list of vertex pairs.
    ///
    /// Rejects loops, parallel edges (in either orientation) and endpoints
    /// `>= n`, naming the offending pair.
    pub fn build(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::Loop { u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::ParallelEdge { u, v });
            }
            let id = EdgeId(edges.len());
            edges.push(key);
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge endpoints in id order, each normalized to `(min, max)`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e.index()]
    }

    /// `(neighbour, connecting edge)` pairs of `v`, in insertion order.
    pub fn neighbours(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].iter().any(|&(w, _)| w == v)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.n })
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.index() < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                id: e.index(),
                m: self.edges.len(),
            })
        }
    }

    /// BFS distances from `start` to every vertex; `None` for unreachable.
    pub fn distances_from_vertex(&self, start: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &(w, _) in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Number of edges of a shortest `u`-`v` path; 0 iff `u == v`.
    pub fn vertex_distance(&self, u: Vertex, v: Vertex) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        // Early-exit BFS.
        let mut dist = vec![None; self.n];
        dist[u] = Some(0);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &(w, _) in &self.adj[x] {
                if dist[w].is_none() {
                    if w == v {
                        return Some(dx + 1);
                    }
                    dist[w] = Some(dx + 1);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Multi-source BFS from the two endpoints of `e`: entry `v` is the
    /// distance between vertex `v` and edge `e` (the smaller of the distances
    /// of `v` to either endpoint), `None` if unreachable.
    pub fn distances_from_edge(&self, e: EdgeId) -> Vec<Option<usize>> {
        let (a, b) = self.endpoints(e);
        let mut dist = vec![None; self.n];
        dist[a] = Some(0);
        dist[b] = Some(0);
        let mut queue = VecDeque::from([a, b]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &(w, _) in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Distance between a vertex and an edge: the smaller of the distances
    /// between the vertex and each endpoint of the edge.
    pub fn vertex_edge_distance(&self, v: Vertex, e: EdgeId) -> Option<usize> {
        let (a, b) = self.endpoints(e);
        let da = self.vertex_distance(v, a);
        let db = self.vertex_distance(v, b);
        match (da, db) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (Some(x), None) => Some(x),
            (None, Some(y)) => Some(y),
            (None, None) => None,
        }
    }

    /// Distance between two edges: the number of vertices on a shortest path
    /// between them, i.e. `1 + min` vertex distance over endpoint pairs, and
    /// 0 for identical edges. Adjacent edges are at distance 1. Equals the
    /// distance of the corresponding vertices in the line graph.
    pub fn edge_distance(&self, e: EdgeId, f: EdgeId) -> Option<usize> {
        if e == f {
            return Some(0);
        }
        let dist = self.distances_from_edge(e);
        let (c, d) = self.endpoints(f);
        match (dist[c], dist[d]) {
            (Some(x), Some(y)) => Some(1 + x.min(y)),
            (Some(x), None) => Some(1 + x),
            (None, Some(y)) => Some(1 + y),
            (None, None) => None,
        }
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// Runs a BFS from every vertex and records the shortest cycle closed by
    /// a non-tree edge at or across the deepest explored level.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent_edge = vec![EdgeId(usize::MAX); self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // Levels beyond b/2 cannot improve the best cycle.
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for &(w, id) in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent_edge[w] = id;
                        queue.push_back(w);
                    } else if id != parent_edge[u] {
                        // Non-tree edge closing a cycle through the root side.
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// The line graph: one vertex per edge of `self`, adjacent iff the edges
    /// share an endpoint. Vertex `i` of the result corresponds to edge id `i`.
    pub fn line_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        for v in 0..self.n {
            let inc = &self.adj[v];
            for i in 0..inc.len() {
                for j in (i + 1)..inc.len() {
                    pairs.push((inc[i].1.index(), inc[j].1.index()));
                }
            }
        }
        // Two distinct simple edges share at most one endpoint, so no pair
        // repeats across vertices.
        Graph::build(self.edges.len(), &pairs).expect("line graph is simple")
    }

    /// Two-colourability check, used by construction tests.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &(w, _) in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }
}
