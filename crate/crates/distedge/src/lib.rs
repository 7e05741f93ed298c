//! Toolkit for distance-t edge colouring.
//!
//! An edge colouring of a graph `G` is *distance-t* if edges within distance
//! `t` of each other always receive distinct colours (the distance between two
//! edges is one more than the smallest vertex distance between their
//! endpoints, so adjacent edges are at distance 1). Equivalently it is a
//! proper vertex colouring of the conflict graph `L(G)^t`, the t-th power of
//! the line graph. `t = 1` is ordinary proper edge colouring and `t = 2` is
//! strong edge colouring.
//!
//! The crate provides:
//!
//! * [`Graph`] and [`ConflictGraph`]: simple undirected graphs, BFS distances,
//!   girth, line graphs, and the distance-t conflict graph.
//! * [`walks`]: directed walk counting and the derived census quantities
//!   (`tau`, `sigma`, `sigma_via`).
//! * [`audit`]: per-root structural reports — distance layers, neighbourhood
//!   sparsity, and the heavy/light edge dichotomy with its claim checks.
//! * [`colouring`]: validity checking plus greedy, DSATUR, exact
//!   branch-and-bound, and randomized-resampling colourers.
//! * [`bounds`]: distance-t matchings and lower/upper bound reports.
//! * [`constructions`]: generators for the named graph families (blown-up
//!   5-cycles, complete bipartite graphs, Hamming graphs, projective-plane
//!   incidence graphs, seeded random high-girth graphs) and the `k_t`
//!   matching-number estimate.
//! * [`io`]: a DIMACS-style edge-list format and a colouring file format.
//!
//! All graphs are immutable after construction and safe to share across
//! threads; every randomized routine takes an explicit seed.

pub mod audit;
pub mod bounds;
pub mod colouring;
pub mod conflict;
pub mod constructions;
mod error;
pub mod exact;
pub mod graph;
pub mod io;
pub mod walks;

pub use conflict::ConflictGraph;
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Vertex};
