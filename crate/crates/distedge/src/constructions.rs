//! Generators for the named graph families and the `k_t` matching estimate.
//!
//! All generators are pure functions of their parameters (plus an explicit
//! seed for the random family), so outputs are bit-identical across runs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex-count cap for [`hamming`], guarding against runaway `q^d`.
pub const HAMMING_VERTEX_CAP: usize = 1 << 20;

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("n", "a cycle needs at least 3 vertices"));
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &pairs)
}

/// The path `P_n` on `n` vertices, `n >= 2`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid("n", "a path needs at least 2 vertices"));
    }
    let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::build(n, &pairs)
}

/// The complete bipartite graph `K_{a,b}`; sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("a/b", "both sides must be non-empty"));
    }
    let mut pairs = Vec::with_capacity(a * b);
    for u in 0..a {
        for v in 0..b {
            pairs.push((u, a + v));
        }
    }
    Graph::build(a + b, &pairs)
}

/// The blown-up 5-cycle `C_5[s]`: five independent parts of size `s`,
/// consecutive parts joined completely. `2s`-regular with `5 s^2` edges;
/// extremal for strong edge colouring with index `5 Delta^2 / 4`.
///
/// Part `i` occupies vertices `i*s .. (i+1)*s`.
pub fn blown_up_c5(s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::invalid("s", "part size must be >= 1"));
    }
    let mut pairs = Vec::with_capacity(5 * s * s);
    for part in 0..5 {
        let next = (part + 1) % 5;
        for i in 0..s {
            for j in 0..s {
                pairs.push((part * s + i, next * s + j));
            }
        }
    }
    Graph::build(5 * s, &pairs)
}

/// The Hamming graph `H(d, q)`: vertices are words of length `d` over an
/// alphabet of size `q`, adjacent iff they differ in exactly one position.
/// `d(q-1)`-regular on `q^d` vertices.
pub fn hamming(d: usize, q: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::invalid("d", "dimension must be >= 1"));
    }
    if q < 2 {
        return Err(Error::invalid("q", "alphabet size must be >= 2"));
    }
    let mut n: usize = 1;
    for _ in 0..d {
        n = n
            .checked_mul(q)
            .filter(|&n| n <= HAMMING_VERTEX_CAP)
            .ok_or_else(|| {
                Error::invalid("q^d", format!("exceeds the vertex cap {HAMMING_VERTEX_CAP}"))
            })?;
    }
    // Words are mixed-radix numbers, position p having weight q^p.
    let mut pairs = Vec::new();
    let mut weight = 1;
    for _ in 0..d {
        for v in 0..n {
            let digit = (v / weight) % q;
            for other in (digit + 1)..q {
                pairs.push((v, v + (other - digit) * weight));
            }
        }
        weight *= q;
    }
    Graph::build(n, &pairs)
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= q {
        if q.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

/// The point-line incidence graph of the projective plane `PG(2, q)` over
/// the integers mod `q`, for prime `q`: `q^2 + q + 1` points and as many
/// lines, a point on a line iff the dot product of their homogeneous
/// coordinates vanishes mod `q`. `(q+1)`-regular, bipartite, girth 6.
/// `q = 2` yields the Heawood graph.
///
/// Points occupy vertices `0..q^2+q+1`, lines the rest; both sides are
/// enumerated in lexicographic order of their normalized coordinates.
pub fn projective_plane_incidence(q: usize) -> Result<Graph> {
    if !is_prime(q) {
        return Err(Error::invalid(
            "q",
            format!("{q} is not prime (prime powers are not supported)"),
        ));
    }
    // Normalized homogeneous triples: first nonzero coordinate is 1.
    let mut points: Vec<[usize; 3]> = Vec::with_capacity(q * q + q + 1);
    points.push([0, 0, 1]);
    for z in 0..q {
        points.push([0, 1, z]);
    }
    for y in 0..q {
        for z in 0..q {
            points.push([1, y, z]);
        }
    }
    points.sort_unstable();
    debug_assert_eq!(points.len(), q * q + q + 1);

    let count = points.len();
    let mut pairs = Vec::with_capacity(count * (q + 1));
    for (p, pt) in points.iter().enumerate() {
        for (l, line) in points.iter().enumerate() {
            let dot = pt[0] * line[0] + pt[1] * line[1] + pt[2] * line[2];
            if dot % q == 0 {
                pairs.push((p, count + l));
            }
        }
    }
    Graph::build(2 * count, &pairs)
}

/// The Petersen graph: outer 5-cycle `0..5`, inner 5-star `5..10`, spokes
/// between them. 3-regular, girth 5. A handy audit fixture.
pub fn petersen() -> Graph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5)); // outer cycle
        pairs.push((i, i + 5)); // spoke
        pairs.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
    }
    Graph::build(10, &pairs).expect("petersen construction is simple")
}

/// Samples `G(n, p)` with `p = d/n`, then repeatedly deletes (in one
/// simultaneous pass per round) every edge lying on a cycle shorter than
/// `g` until the girth reaches `g`, and finally deletes every vertex of
/// degree at least `d + d/ln d`, relabelling the survivors in ascending
/// order. The output always has girth `>= g` and maximum degree
/// `< d + d/ln d`; for poor parameter choices it may be very sparse.
///
/// Requires `n >= g >= 3` and `d >= 2`. Deterministic for a fixed seed.
pub fn random_high_girth(n: usize, d: usize, g: usize, seed: u64) -> Result<Graph> {
    if g < 3 {
        return Err(Error::invalid("g", "girth target must be >= 3"));
    }
    if n < g {
        return Err(Error::invalid("n", "need at least g vertices"));
    }
    if d < 2 {
        return Err(Error::invalid("d", "target degree must be >= 2"));
    }
    let p = d as f64 / n as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                pairs.push((u, v));
            }
        }
    }

    // Simultaneous mark-and-delete rounds; deleting edges cannot create
    // cycles, so one pass suffices, but girth is re-checked regardless.
    loop {
        let graph = Graph::build(n, &pairs)?;
        if graph.girth().is_none_or(|girth| girth >= g) {
            break;
        }
        let survivors: Vec<(usize, usize)> = graph
            .edge_ids()
            .filter(|&e| !on_short_cycle(&graph, e, g))
            .map(|e| graph.endpoints(e))
            .collect();
        debug_assert!(survivors.len() < pairs.len(), "marking must remove an edge");
        pairs = survivors;
    }

    let graph = Graph::build(n, &pairs)?;
    let threshold = d as f64 + d as f64 / (d as f64).ln();
    let keep: Vec<usize> = (0..n)
        .filter(|&v| (graph.degree(v) as f64) < threshold)
        .collect();
    let mut relabel = vec![usize::MAX; n];
    for (new, &old) in keep.iter().enumerate() {
        relabel[old] = new;
    }
    let kept_pairs: Vec<(usize, usize)> = pairs
        .iter()
        .filter(|&&(u, v)| relabel[u] != usize::MAX && relabel[v] != usize::MAX)
        .map(|&(u, v)| (relabel[u], relabel[v]))
        .collect();
    Graph::build(keep.len(), &kept_pairs)
}

/// True iff `e` lies on a cycle of length `< g`, i.e. its endpoints are
/// joined by a path of at most `g - 2` edges avoiding `e`.
fn on_short_cycle(graph: &Graph, e: crate::graph::EdgeId, g: usize) -> bool {
    let (src, dst) = graph.endpoints(e);
    let cap = g - 2;
    let mut dist = vec![usize::MAX; graph.vertex_count()];
    dist[src] = 0;
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == cap {
            continue;
        }
        for &(w, f) in graph.neighbours(u) {
            if f == e || dist[w] != usize::MAX {
                continue;
            }
            if w == dst {
                return true;
            }
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    false
}

/// The random-graph distance-t matching estimate
/// `k_t = n / (2 d^(t-1)) * (t ln d - ln ln d - ln(e t) + eps)`,
/// natural logarithms throughout. Requires `t >= 2` and `ln d > 1`.
pub fn k_t_formula(n: usize, d: f64, t: usize, eps: f64) -> Result<f64> {
    if t < 2 {
        return Err(Error::invalid("t", "formula applies for t >= 2"));
    }
    if !d.is_finite() || d <= 1.0 || d.ln() <= 1.0 {
        return Err(Error::invalid(
            "d",
            "need ln(d) > 1 so that ln(ln(d)) is positive",
        ));
    }
    let lead = n as f64 / (2.0 * d.powi(t as i32 - 1));
    let body = t as f64 * d.ln() - d.ln().ln() - (std::f64::consts::E * t as f64).ln() + eps;
    Ok(lead * body)
}

/// Parameters selecting one of the generated families; the JSON form tags
/// the family and carries only that family's parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "camelCase")]
pub enum ConstructionSpec {
    Cycle { n: usize },
    Path { n: usize },
    CompleteBipartite { a: usize, b: usize },
    BlownUpC5 { s: usize },
    Hamming { d: usize, q: usize },
    ProjectivePlane { q: usize },
    RandomHighGirth { n: usize, d: usize, g: usize, seed: u64 },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            ConstructionSpec::Cycle { n } => cycle(n),
            ConstructionSpec::Path { n } => path(n),
            ConstructionSpec::CompleteBipartite { a, b } => complete_bipartite(a, b),
            ConstructionSpec::BlownUpC5 { s } => blown_up_c5(s),
            ConstructionSpec::Hamming { d, q } => hamming(d, q),
            ConstructionSpec::ProjectivePlane { q } => projective_plane_incidence(q),
            ConstructionSpec::RandomHighGirth { n, d, g, seed } => {
                random_high_girth(n, d, g, seed)
            }
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            ConstructionSpec::Cycle { .. } => "cycle",
            ConstructionSpec::Path { .. } => "path",
            ConstructionSpec::CompleteBipartite { .. } => "completeBipartite",
            ConstructionSpec::BlownUpC5 { .. } => "blownUpC5",
            ConstructionSpec::Hamming { .. } => "hamming",
            ConstructionSpec::ProjectivePlane { .. } => "projectivePlane",
            ConstructionSpec::RandomHighGirth { .. } => "randomHighGirth",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match *self {
            ConstructionSpec::RandomHighGirth { seed, .. } => Some(seed),
            _ => None,
        }
    }
}
