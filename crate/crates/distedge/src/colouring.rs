//! Distance-t edge colourers and validity checking.
//!
//! Every colourer returns a [`Colouring`] that passes [`verify_colouring`];
//! the randomized resampler may instead report failure after its round limit.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conflict::ConflictGraph;
use crate::error::{Error, Result};
use crate::exact::{self, ChromaticOutcome};
use crate::graph::{EdgeId, Graph};

/// A total assignment of colour indices to base-graph edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    assignment: Vec<usize>,
}

impl Colouring {
    pub fn new(assignment: Vec<usize>) -> Colouring {
        Colouring { assignment }
    }

    /// Builds a colouring from `edge id -> colour` pairs, requiring every
    /// edge of a graph with `edge_count` edges to be assigned.
    pub fn from_map(map: &HashMap<usize, usize>, edge_count: usize) -> Result<Colouring> {
        let mut assignment = vec![usize::MAX; edge_count];
        for (&e, &c) in map {
            if e >= edge_count {
                return Err(Error::EdgeOutOfRange {
                    id: e,
                    m: edge_count,
                });
            }
            assignment[e] = c;
        }
        if let Some(missing) = assignment.iter().position(|&c| c == usize::MAX) {
            return Err(Error::MissingColour { edge: missing });
        }
        Ok(Colouring { assignment })
    }

    pub fn colour(&self, e: EdgeId) -> usize {
        self.assignment[e.index()]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Number of distinct colours used.
    pub fn colour_count(&self) -> usize {
        let mut seen: Vec<usize> = self.assignment.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// A conflicting pair: two same-coloured edges within distance `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub first: EdgeId,
    pub second: EdgeId,
    pub distance: usize,
    pub colour: usize,
}

/// Lists every violating pair (each once, `first < second`). Empty iff the
/// colouring is a valid distance-t edge colouring. The colouring must assign
/// every edge of `g`.
pub fn verify_colouring(g: &Graph, t: usize, colouring: &Colouring) -> Result<Vec<Violation>> {
    if t == 0 {
        return Err(Error::invalid("t", "distance parameter must be >= 1"));
    }
    if colouring.len() < g.edge_count() {
        return Err(Error::MissingColour {
            edge: colouring.len(),
        });
    }
    if colouring.len() > g.edge_count() {
        return Err(Error::invalid(
            "colouring",
            "assigns more edges than the graph has",
        ));
    }
    let mut violations = Vec::new();
    for e in g.edge_ids() {
        let dist = g.distances_from_edge(e);
        for f in g.edge_ids() {
            if f <= e || colouring.colour(e) != colouring.colour(f) {
                continue;
            }
            let (a, b) = g.endpoints(f);
            let d = match (dist[a], dist[b]) {
                (Some(x), Some(y)) => Some(1 + x.min(y)),
                (Some(x), None) => Some(1 + x),
                (None, Some(y)) => Some(1 + y),
                (None, None) => None,
            };
            if let Some(d) = d {
                if d <= t {
                    violations.push(Violation {
                        first: e,
                        second: f,
                        distance: d,
                        colour: colouring.colour(e),
                    });
                }
            }
        }
    }
    Ok(violations)
}

/// First-fit colouring of the conflict graph in the given order. Uses at
/// most `max_degree + 1` colours.
pub fn greedy_colour(cg: &ConflictGraph, order: &[EdgeId]) -> Result<Colouring> {
    let m = cg.vertex_count();
    let mut seen = vec![false; m];
    for e in order {
        if e.index() >= m || seen[e.index()] {
            return Err(Error::invalid(
                "order",
                "must be a permutation of the edge ids",
            ));
        }
        seen[e.index()] = true;
    }
    if order.len() != m {
        return Err(Error::invalid(
            "order",
            "must be a permutation of the edge ids",
        ));
    }
    let mut assignment = vec![usize::MAX; m];
    let mut used = Vec::new();
    for &e in order {
        used.clear();
        used.resize(cg.degree(e) + 1, false);
        for f in cg.neighbours(e) {
            let c = assignment[f.index()];
            if c < used.len() {
                used[c] = true;
            }
        }
        let c = used.iter().position(|&u| !u).expect("a free colour exists");
        assignment[e.index()] = c;
    }
    Ok(Colouring::new(assignment))
}

/// DSATUR colouring of the conflict graph; deterministic, ties broken by
/// higher degree then lower edge id.
pub fn dsatur_colour(cg: &ConflictGraph) -> Colouring {
    Colouring::new(exact::dsatur(cg.adjacency()))
}

/// Exact distance-t chromatic number of the base graph, via branch and bound
/// on the conflict graph. `optimal` is false when the node budget ran out;
/// the returned colouring is valid either way.
pub fn exact_chromatic(cg: &ConflictGraph, budget: u64) -> (usize, Colouring, bool) {
    let ChromaticOutcome {
        colours,
        assignment,
        optimal,
    } = exact::exact_chromatic(cg.adjacency(), budget);
    (colours, Colouring::new(assignment), optimal)
}

/// Local-resampling colourer with `k` colours: start from a uniform random
/// assignment and, while some adjacent pair shares a colour, re-randomize
/// the closed neighbourhood of the first such pair. Returns `None` after
/// `max_rounds` unsuccessful rounds. Deterministic for a fixed seed.
///
/// No colour-count guarantee is claimed; with `k >= max_degree + 1` the
/// process always has an escape and terminates with probability one.
pub fn resample_colour(
    cg: &ConflictGraph,
    k: usize,
    seed: u64,
    max_rounds: u64,
) -> Result<Option<Colouring>> {
    if k == 0 {
        return Err(Error::invalid("k", "colour count must be >= 1"));
    }
    let m = cg.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment: Vec<usize> = (0..m).map(|_| rng.random_range(0..k)).collect();
    for _ in 0..max_rounds {
        match first_conflict(cg, &assignment) {
            None => return Ok(Some(Colouring::new(assignment))),
            Some((e, f)) => {
                assignment[e.index()] = rng.random_range(0..k);
                for g in cg.neighbours(e) {
                    assignment[g.index()] = rng.random_range(0..k);
                }
                assignment[f.index()] = rng.random_range(0..k);
                for g in cg.neighbours(f) {
                    assignment[g.index()] = rng.random_range(0..k);
                }
            }
        }
    }
    Ok(match first_conflict(cg, &assignment) {
        None => Some(Colouring::new(assignment)),
        Some(_) => None,
    })
}

fn first_conflict(cg: &ConflictGraph, assignment: &[usize]) -> Option<(EdgeId, EdgeId)> {
    for e in 0..cg.vertex_count() {
        for f in cg.neighbours(EdgeId(e)) {
            if f.index() > e && assignment[f.index()] == assignment[e] {
                return Some((EdgeId(e), f));
            }
        }
    }
    None
}
