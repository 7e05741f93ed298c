//! Distance-t matchings and chromatic-index bound reports.

use serde::{Deserialize, Serialize};

use crate::colouring::{verify_colouring, Colouring};
use crate::conflict::{degree_bound, ConflictGraph};
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::{EdgeId, Graph};

/// A set of edges pairwise at distance greater than `t`, i.e. an independent
/// set of the conflict graph. `exact` marks a proven maximum.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatchingResult {
    pub edges: Vec<EdgeId>,
    pub size: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchingMode {
    /// Maximal independent set: a lower bound for the matching number.
    Greedy,
    /// Maximum independent set by branch and bound.
    Exact,
}

/// Computes a distance-t matching of `g`. In exact mode the result is the
/// distance-t matching number unless the node budget runs out, in which case
/// the best set found is returned with `exact = false`.
pub fn distance_matching(
    g: &Graph,
    t: usize,
    mode: MatchingMode,
    budget: u64,
) -> Result<MatchingResult> {
    let cg = ConflictGraph::build(g, t)?;
    Ok(conflict_matching(&cg, mode, budget))
}

/// As [`distance_matching`], for an already-built conflict graph.
pub fn conflict_matching(cg: &ConflictGraph, mode: MatchingMode, budget: u64) -> MatchingResult {
    let (set, exact) = match mode {
        MatchingMode::Greedy => (exact::greedy_independent_set(cg.adjacency()), false),
        MatchingMode::Exact => exact::max_independent_set(cg.adjacency(), budget),
    };
    let edges: Vec<EdgeId> = set.into_iter().map(EdgeId).collect();
    MatchingResult {
        size: edges.len(),
        edges,
        exact,
    }
}

/// Upper and lower bounds on the distance-t chromatic index next to the
/// colour count actually achieved.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundReport {
    /// Edge count of the base graph.
    pub m: usize,
    /// Distance-t matching size used (exact or best known).
    pub nu_t: usize,
    /// `ceil(m / nu_t)`; present only when the matching is exact, since an
    /// underestimated matching would overstate the lower bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<usize>,
    /// `1 + 2 * sum_{j=1..t} (Delta - 1)^j`.
    pub trivial_upper: u64,
    /// `(2 - epsilon) * Delta^t`, a reference line only: no implemented
    /// colourer is claimed to reach it.
    pub theorem_upper: f64,
    /// Colours used by the supplied colouring.
    pub achieved: usize,
}

/// `1 + 2 * sum_{j=1..t} (Delta - 1)^j`: first-fit never needs more.
pub fn trivial_upper_bound(max_degree: usize, t: usize) -> u64 {
    1 + degree_bound(max_degree, t)
}

/// `(2 - epsilon) * Delta^t`.
pub fn theorem_upper_bound(max_degree: usize, t: usize, epsilon: f64) -> f64 {
    (2.0 - epsilon) * (max_degree as f64).powi(t as i32)
}

/// Assembles the bound report for a colouring of `g`, validating it first.
/// `nu` should come from [`distance_matching`] at the same `t`.
pub fn bound_report(
    g: &Graph,
    t: usize,
    best: &Colouring,
    nu: &MatchingResult,
    epsilon: f64,
) -> Result<BoundReport> {
    let violations = verify_colouring(g, t, best)?;
    if !violations.is_empty() {
        return Err(Error::invalid(
            "colouring",
            format!("not a valid distance-{t} colouring: {} violations", violations.len()),
        ));
    }
    if nu.size == 0 && g.edge_count() > 0 {
        return Err(Error::invalid("matching", "empty matching on a non-empty graph"));
    }
    let m = g.edge_count();
    let lower_bound = if nu.exact && nu.size > 0 {
        Some(m.div_ceil(nu.size))
    } else {
        None
    };
    Ok(BoundReport {
        m,
        nu_t: nu.size,
        lower_bound,
        trivial_upper: trivial_upper_bound(g.max_degree(), t),
        theorem_upper: theorem_upper_bound(g.max_degree(), t, epsilon),
        achieved: best.colour_count(),
    })
}
