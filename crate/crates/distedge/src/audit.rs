//! Structural audits around a root edge.
//!
//! For a root edge `e*` and radius `t` these routines materialize the
//! quantities that drive the sparsity and common-neighbour analysis of the
//! conflict graph: the distance layers `A_0..A_t` around `e*`, the
//! conflict-graph neighbourhood `N-hat` with the count `S-hat` of
//! conflict-graph edges it spans, the threshold set `B_t`, and the
//! heavy/light dichotomy with its three per-root claims.
//!
//! The sparsity `pass` flag compares `S-hat` against `(2 - 2*delta) *
//! Delta^(2t)`; the flag is informational at small maximum degree, where the
//! underlying inequality is asymptotic. The heavy/light claims, by contrast,
//! are exact consequences of girth `>= 2t + 1` and are asserted as such by
//! the test suite.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

/// Vertex layers `A_0..A_t` around a root edge: `A_i` holds the vertices at
/// distance exactly `i` from the root, so `A_0` is the pair of endpoints.
/// Vertices farther than `t` (or unreachable) appear in no layer.
#[derive(Debug, Clone)]
pub struct DistanceLayers {
    pub root: EdgeId,
    pub t: usize,
    pub layers: Vec<Vec<Vertex>>,
}

impl DistanceLayers {
    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }
}

/// Computes the layers `A_0..A_t` by one multi-source BFS from the root.
pub fn distance_layers(g: &Graph, root: EdgeId, t: usize) -> Result<DistanceLayers> {
    g.check_edge(root)?;
    if t == 0 {
        return Err(Error::invalid("t", "radius must be >= 1"));
    }
    let dist = g.distances_from_edge(root);
    let mut layers = vec![Vec::new(); t + 1];
    for (v, d) in dist.iter().enumerate() {
        if let Some(d) = *d {
            if d <= t {
                layers[d].push(v);
            }
        }
    }
    Ok(DistanceLayers { root, t, layers })
}

/// `N-hat`: the neighbourhood of `root` in the conflict graph `L(G)^t`,
/// i.e. the edges at edge distance `1..=t` from the root, sorted by id.
/// The root itself is excluded.
pub fn conflict_neighbourhood(g: &Graph, root: EdgeId, t: usize) -> Result<Vec<EdgeId>> {
    g.check_edge(root)?;
    if t == 0 {
        return Err(Error::invalid("t", "radius must be >= 1"));
    }
    let dist = g.distances_from_edge(root);
    let mut out = Vec::new();
    for f in g.edge_ids() {
        if f == root {
            continue;
        }
        if edge_dist_from(&dist, g, f).is_some_and(|d| d <= t) {
            out.push(f);
        }
    }
    Ok(out)
}

/// Edge distance of `f` from the root whose BFS field is `dist`.
fn edge_dist_from(dist: &[Option<usize>], g: &Graph, f: EdgeId) -> Option<usize> {
    let (a, b) = g.endpoints(f);
    match (dist[a], dist[b]) {
        (Some(x), Some(y)) => Some(1 + x.min(y)),
        (Some(x), None) => Some(1 + x),
        (None, Some(y)) => Some(1 + y),
        (None, None) => None,
    }
}

/// `B_t`: the vertices of `A_t` whose degree in the spanning subgraph
/// `G|N-hat` is at least `Delta / 2` (`Delta` = maximum degree of `g`).
pub fn b_t_set(g: &Graph, root: EdgeId, t: usize) -> Result<Vec<Vertex>> {
    let layers = distance_layers(g, root, t)?;
    let n_hat = conflict_neighbourhood(g, root, t)?;
    let mut deg_in_hat = vec![0usize; g.vertex_count()];
    for &e in &n_hat {
        let (a, b) = g.endpoints(e);
        deg_in_hat[a] += 1;
        deg_in_hat[b] += 1;
    }
    let delta = g.max_degree();
    Ok(layers.layers[t]
        .iter()
        .copied()
        .filter(|&u| 2 * deg_in_hat[u] >= delta)
        .collect())
}

/// Sparsity census of the conflict neighbourhood of one root.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SparsityReport {
    pub root: EdgeId,
    pub t: usize,
    pub delta: f64,
    /// `|N-hat|`, the conflict degree of the root.
    pub n_hat: usize,
    /// Number of conflict-graph edges spanning `N-hat`.
    pub s_hat: u64,
    /// `(2 - 2*delta) * Delta^(2t)`.
    pub bound: f64,
    /// `s_hat <= bound`; informational at small maximum degree.
    pub pass: bool,
    pub b_t_size: usize,
}

/// Counts `N-hat` and the conflict-graph edges it spans.
///
/// `delta` is the sparsity slack in `(0, 1)`, by convention `1/618`.
pub fn sparsity_audit(g: &Graph, root: EdgeId, t: usize, delta: f64) -> Result<SparsityReport> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::invalid("delta", "must lie strictly between 0 and 1"));
    }
    let n_hat = conflict_neighbourhood(g, root, t)?;
    let member = {
        let mut mask = vec![false; g.edge_count()];
        for &e in &n_hat {
            mask[e.index()] = true;
        }
        mask
    };
    // Each member contributes its conflict neighbours inside N-hat; every
    // spanning edge is seen from both sides.
    let mut twice_s_hat: u64 = 0;
    for &e in &n_hat {
        let dist = g.distances_from_edge(e);
        for f in g.edge_ids() {
            if f != e
                && member[f.index()]
                && edge_dist_from(&dist, g, f).is_some_and(|d| d <= t)
            {
                twice_s_hat += 1;
            }
        }
    }
    let s_hat = twice_s_hat / 2;
    let bound = (2.0 - 2.0 * delta) * (g.max_degree() as f64).powi(2 * t as i32);
    let b_t = b_t_set(g, root, t)?;
    Ok(SparsityReport {
        root,
        t,
        delta,
        n_hat: n_hat.len(),
        s_hat,
        bound,
        pass: s_hat as f64 <= bound,
        b_t_size: b_t.len(),
    })
}

/// Heavy/light dichotomy around one root: an edge is *heavy* when its edge
/// distance from the root is less than `t` (the root itself included),
/// otherwise *light*. `light` lists only the light members of `N-hat`.
#[derive(Debug, Clone)]
pub struct HeavyLightReport {
    pub root: EdgeId,
    pub t: usize,
    /// All heavy edges of the graph, sorted by id.
    pub heavy: Vec<EdgeId>,
    /// Light members of `N-hat` (edge distance exactly `t`), sorted by id.
    pub light: Vec<EdgeId>,
    /// Every vertex of `A_{t-1}` is incident with at most one heavy edge.
    pub claim_one_heavy_per_boundary_vertex: bool,
    /// Every light edge has at most one endpoint in `A_{t-1}`.
    pub claim_light_single_foothold: bool,
    /// Every vertex of `A_t` has at most two neighbours in `A_{t-1}`.
    pub claim_outer_attachment: bool,
    /// Heavy members of `N-hat`; compare against `2 * Delta^(t-1)`.
    pub heavy_count: usize,
    /// Max over light `f` in `N-hat` of the number of other `N-hat` members
    /// within edge distance `t` of `f`; compare against
    /// `(3t + 2) * Delta^(t-1)`.
    pub max_light_conflicts: u64,
}

/// Classifies edges heavy/light around `root` and evaluates the three
/// girth-driven claims. Requires `t >= 2`.
pub fn heavy_light_audit(g: &Graph, root: EdgeId, t: usize) -> Result<HeavyLightReport> {
    g.check_edge(root)?;
    if t < 2 {
        return Err(Error::invalid("t", "heavy/light audit needs t >= 2"));
    }
    let dist = g.distances_from_edge(root);
    let layers = distance_layers(g, root, t)?;
    let in_boundary = {
        // A_{t-1} membership.
        let mut mask = vec![false; g.vertex_count()];
        for &v in &layers.layers[t - 1] {
            mask[v] = true;
        }
        mask
    };
    let mut heavy = Vec::new();
    let mut heavy_mask = vec![false; g.edge_count()];
    for f in g.edge_ids() {
        let d = if f == root {
            Some(0)
        } else {
            edge_dist_from(&dist, g, f)
        };
        if d.is_some_and(|d| d < t) {
            heavy_mask[f.index()] = true;
            heavy.push(f);
        }
    }

    let n_hat = conflict_neighbourhood(g, root, t)?;
    let light: Vec<EdgeId> = n_hat
        .iter()
        .copied()
        .filter(|&f| !heavy_mask[f.index()])
        .collect();
    let heavy_count = n_hat.len() - light.len();

    // Claim: at most one heavy edge at each vertex of A_{t-1}.
    let mut claim_heavy = true;
    for &v in &layers.layers[t - 1] {
        let incident_heavy = g
            .neighbours(v)
            .iter()
            .filter(|&&(_, e)| heavy_mask[e.index()])
            .count();
        if incident_heavy > 1 {
            claim_heavy = false;
            break;
        }
    }

    // Claim: no light edge has both endpoints in A_{t-1}.
    let mut claim_light = true;
    for f in g.edge_ids() {
        if heavy_mask[f.index()] {
            continue;
        }
        let (a, b) = g.endpoints(f);
        if in_boundary[a] && in_boundary[b] {
            claim_light = false;
            break;
        }
    }

    // Claim: at most two A_{t-1}-neighbours per vertex of A_t.
    let mut claim_outer = true;
    for &u in &layers.layers[t] {
        let attached = g
            .neighbours(u)
            .iter()
            .filter(|&&(w, _)| in_boundary[w])
            .count();
        if attached > 2 {
            claim_outer = false;
            break;
        }
    }

    // Conflict crowding of each light member of N-hat.
    let member = {
        let mut mask = vec![false; g.edge_count()];
        for &e in &n_hat {
            mask[e.index()] = true;
        }
        mask
    };
    let mut max_light_conflicts: u64 = 0;
    for &f in &light {
        let from_f = g.distances_from_edge(f);
        let mut near: u64 = 0;
        for h in g.edge_ids() {
            if h != f
                && member[h.index()]
                && edge_dist_from(&from_f, g, h).is_some_and(|d| d <= t)
            {
                near += 1;
            }
        }
        max_light_conflicts = max_light_conflicts.max(near);
    }

    Ok(HeavyLightReport {
        root,
        t,
        heavy,
        light,
        claim_one_heavy_per_boundary_vertex: claim_heavy,
        claim_light_single_foothold: claim_light,
        claim_outer_attachment: claim_outer,
        heavy_count,
        max_light_conflicts,
    })
}

/// Combined per-root audit, serialized with the exact field names consumed
/// by downstream tooling.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub root: usize,
    pub t: usize,
    pub delta: f64,
    pub n_hat: usize,
    pub s_hat: u64,
    pub bound: f64,
    pub pass: bool,
    pub b_t_size: usize,
    pub layers_sizes: Vec<usize>,
    pub heavy_count: usize,
    pub claim4: bool,
    pub claim5: bool,
    pub claim6: bool,
    pub max_light_conflicts: u64,
}

/// Runs the sparsity and heavy/light audits for one root. Requires `t >= 2`
/// (the heavy/light side is undefined at `t = 1`).
pub fn audit_report(g: &Graph, root: EdgeId, t: usize, delta: f64) -> Result<AuditReport> {
    let sparsity = sparsity_audit(g, root, t, delta)?;
    let hl = heavy_light_audit(g, root, t)?;
    let layers = distance_layers(g, root, t)?;
    Ok(AuditReport {
        root: root.index(),
        t,
        delta,
        n_hat: sparsity.n_hat,
        s_hat: sparsity.s_hat,
        bound: sparsity.bound,
        pass: sparsity.pass,
        b_t_size: sparsity.b_t_size,
        layers_sizes: layers.sizes(),
        heavy_count: hl.heavy_count,
        claim4: hl.claim_one_heavy_per_boundary_vertex,
        claim5: hl.claim_light_single_foothold,
        claim6: hl.claim_outer_attachment,
        max_light_conflicts: hl.max_light_conflicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &pairs).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let pairs: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::build(leaves + 1, &pairs).unwrap()
    }

    #[test]
    fn layers_on_p5_root_middle() {
        let p5 = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let layers = distance_layers(&p5, EdgeId(2), 2).unwrap(); // root {2,3}
        assert_eq!(layers.layers[0], vec![2, 3]);
        assert_eq!(layers.layers[1], vec![1, 4]);
        assert_eq!(layers.layers[2], vec![0]);
    }

    #[test]
    fn layers_on_single_edge() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        let layers = distance_layers(&k2, EdgeId(0), 3).unwrap();
        assert_eq!(layers.layers[0], vec![0, 1]);
        assert!(layers.layers[1..].iter().all(Vec::is_empty));
    }

    #[test]
    fn b_t_on_star_is_empty() {
        // Leaves of K_{1,4} have degree 1 in G|N-hat, below Delta/2 = 2.
        let g = star(4);
        assert!(b_t_set(&g, EdgeId(0), 1).unwrap().is_empty());
    }

    #[test]
    fn b_t_on_c6() {
        // Both A_2 vertices meet one N-hat edge; Delta/2 = 1, so both qualify.
        let g = cycle(6);
        let b = b_t_set(&g, EdgeId(0), 2).unwrap();
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn sparsity_on_k2_is_empty() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        let r = sparsity_audit(&k2, EdgeId(0), 2, 1.0 / 618.0).unwrap();
        assert_eq!((r.n_hat, r.s_hat), (0, 0));
    }

    #[test]
    fn sparsity_rejects_bad_delta() {
        let g = cycle(4);
        assert!(sparsity_audit(&g, EdgeId(0), 2, 0.0).is_err());
        assert!(sparsity_audit(&g, EdgeId(0), 2, 1.0).is_err());
    }

    #[test]
    fn heavy_light_requires_t_at_least_two() {
        let g = cycle(6);
        assert!(heavy_light_audit(&g, EdgeId(0), 1).is_err());
        assert!(heavy_light_audit(&g, EdgeId(0), 2).is_ok());
    }

    #[test]
    fn heavy_light_on_c6() {
        // Girth 6 >= 2t + 1 at t = 2, so all three claims must hold.
        let g = cycle(6);
        let r = heavy_light_audit(&g, EdgeId(0), 2).unwrap();
        assert!(r.claim_one_heavy_per_boundary_vertex);
        assert!(r.claim_light_single_foothold);
        assert!(r.claim_outer_attachment);
        // Heavy edges: the root and its two neighbours.
        assert_eq!(r.heavy.len(), 3);
        assert_eq!(r.heavy_count, 2);
        // Light members of N-hat are exactly the A_1-A_2 edges.
        let layers = distance_layers(&g, EdgeId(0), 2).unwrap();
        for &f in &r.light {
            let (a, b) = g.endpoints(f);
            let in1 = |v| layers.layers[1].contains(&v);
            let in2 = |v| layers.layers[2].contains(&v);
            assert!((in1(a) && in2(b)) || (in1(b) && in2(a)));
        }
    }
}
