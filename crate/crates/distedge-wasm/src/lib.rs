//! wasm-bindgen surface for the browser demo.
//!
//! Three operations, all JSON-string in / JSON-string out so the page needs
//! no generated TypeScript: [`generate`] builds a graph with a layout,
//! [`colour`] runs a distance-t colourer with bounds, and [`audit`] runs the
//! per-root structural census. Errors come back as `{"error": "..."}`.
//!
//! Everything is deterministic given the spec (seeds are explicit), so the
//! same controls always redraw the same picture.

use serde::Deserialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use distedge::audit::{audit_report, conflict_neighbourhood, distance_layers, heavy_light_audit};
use distedge::bounds::{bound_report, conflict_matching, MatchingMode};
use distedge::colouring::{dsatur_colour, exact_chromatic, greedy_colour, resample_colour};
use distedge::conflict::ConflictGraph;
use distedge::constructions;
use distedge::exact::DEFAULT_BUDGET;
use distedge::graph::{EdgeId, Graph};

#[derive(Deserialize, Clone, Copy)]
#[serde(tag = "family", rename_all = "camelCase")]
enum DemoSpec {
    Cycle { n: usize },
    Path { n: usize },
    CompleteBipartite { a: usize, b: usize },
    BlownUpC5 { s: usize },
    Hamming { d: usize, q: usize },
    ProjectivePlane { q: usize },
    RandomHighGirth { n: usize, d: usize, g: usize, seed: u64 },
    Petersen,
}

impl DemoSpec {
    fn build(self) -> distedge::Result<Graph> {
        match self {
            DemoSpec::Cycle { n } => constructions::cycle(n),
            DemoSpec::Path { n } => constructions::path(n),
            DemoSpec::CompleteBipartite { a, b } => constructions::complete_bipartite(a, b),
            DemoSpec::BlownUpC5 { s } => constructions::blown_up_c5(s),
            DemoSpec::Hamming { d, q } => constructions::hamming(d, q),
            DemoSpec::ProjectivePlane { q } => constructions::projective_plane_incidence(q),
            DemoSpec::RandomHighGirth { n, d, g, seed } => {
                constructions::random_high_girth(n, d, g, seed)
            }
            DemoSpec::Petersen => Ok(constructions::petersen()),
        }
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", default)]
struct ColourOpts {
    t: usize,
    algo: String,
    k: usize,
    seed: u64,
    max_rounds: u64,
    budget: u64,
    epsilon: f64,
}

impl Default for ColourOpts {
    fn default() -> Self {
        ColourOpts {
            t: 2,
            algo: "dsatur".to_string(),
            k: 0,
            seed: 0,
            max_rounds: 100_000,
            budget: DEFAULT_BUDGET,
            epsilon: 0.00008,
        }
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase", default)]
struct AuditOpts {
    t: usize,
    root: usize,
    delta: f64,
}

impl Default for AuditOpts {
    fn default() -> Self {
        AuditOpts {
            t: 2,
            root: 0,
            delta: 1.0 / 618.0,
        }
    }
}

fn error_json(message: impl std::fmt::Display) -> String {
    json!({ "error": message.to_string() }).to_string()
}

fn parse_spec(spec_json: &str) -> Result<(DemoSpec, Graph), String> {
    let spec: DemoSpec =
        serde_json::from_str(spec_json).map_err(|e| format!("bad spec: {e}"))?;
    let graph = spec.build().map_err(|e| e.to_string())?;
    Ok((spec, graph))
}

/// Builds the requested graph and returns its edges, statistics, and a
/// family-appropriate 2D layout in the unit square.
#[wasm_bindgen]
pub fn generate(spec_json: &str) -> String {
    let (spec, graph) = match parse_spec(spec_json) {
        Ok(pair) => pair,
        Err(e) => return error_json(e),
    };
    let edges: Vec<[usize; 2]> = graph.edges().iter().map(|&(u, v)| [u, v]).collect();
    json!({
        "n": graph.vertex_count(),
        "m": graph.edge_count(),
        "maxDegree": graph.max_degree(),
        "girth": graph.girth(),
        "edges": edges,
        "layout": layout(&spec, &graph),
    })
    .to_string()
}

/// Colours the graph at distance `t` and reports the colour classes plus
/// the bound report (trivial and reference upper bounds, exact lower bound
/// when the conflict graph is small enough for an exact matching).
#[wasm_bindgen]
pub fn colour(spec_json: &str, opts_json: &str) -> String {
    let (_, graph) = match parse_spec(spec_json) {
        Ok(pair) => pair,
        Err(e) => return error_json(e),
    };
    let opts: ColourOpts = match serde_json::from_str(opts_json) {
        Ok(opts) => opts,
        Err(e) => return error_json(format!("bad options: {e}")),
    };
    let cg = match ConflictGraph::build(&graph, opts.t) {
        Ok(cg) => cg,
        Err(e) => return error_json(e),
    };
    let mut optimal = Value::Null;
    let result = match opts.algo.as_str() {
        "greedy" => {
            let order: Vec<EdgeId> = graph.edge_ids().collect();
            greedy_colour(&cg, &order).map(Some)
        }
        "dsatur" => Ok(Some(dsatur_colour(&cg))),
        "exact" => {
            let (_, colouring, proved) = exact_chromatic(&cg, opts.budget);
            optimal = proved.into();
            Ok(Some(colouring))
        }
        "resample" => {
            let k = if opts.k == 0 { cg.max_degree() + 1 } else { opts.k };
            resample_colour(&cg, k, opts.seed, opts.max_rounds)
        }
        other => return error_json(format!("unknown algorithm `{other}`")),
    };
    let colouring = match result {
        Ok(Some(colouring)) => colouring,
        Ok(None) => {
            return json!({ "failure": true, "maxRounds": opts.max_rounds }).to_string()
        }
        Err(e) => return error_json(e),
    };
    let mode = if cg.vertex_count() <= 64 {
        MatchingMode::Exact
    } else {
        MatchingMode::Greedy
    };
    let nu = conflict_matching(&cg, mode, opts.budget);
    let report = match bound_report(&graph, opts.t, &colouring, &nu, opts.epsilon) {
        Ok(report) => report,
        Err(e) => return error_json(e),
    };
    json!({
        "colours": colouring.assignment(),
        "colourCount": colouring.colour_count(),
        "conflictMaxDegree": cg.max_degree(),
        "optimal": optimal,
        "report": report,
    })
    .to_string()
}

/// Runs the sparsity and heavy/light audits for one root edge, returning
/// the report plus the vertex layers and edge classes for highlighting.
#[wasm_bindgen]
pub fn audit(spec_json: &str, opts_json: &str) -> String {
    let (_, graph) = match parse_spec(spec_json) {
        Ok(pair) => pair,
        Err(e) => return error_json(e),
    };
    let opts: AuditOpts = match serde_json::from_str(opts_json) {
        Ok(opts) => opts,
        Err(e) => return error_json(format!("bad options: {e}")),
    };
    if opts.root >= graph.edge_count() {
        return error_json(format!(
            "root {} out of range (m = {})",
            opts.root,
            graph.edge_count()
        ));
    }
    let root = EdgeId(opts.root);
    let report = match audit_report(&graph, root, opts.t, opts.delta) {
        Ok(report) => report,
        Err(e) => return error_json(e),
    };
    let layers = match distance_layers(&graph, root, opts.t) {
        Ok(layers) => layers,
        Err(e) => return error_json(e),
    };
    let n_hat = match conflict_neighbourhood(&graph, root, opts.t) {
        Ok(n_hat) => n_hat,
        Err(e) => return error_json(e),
    };
    let hl = match heavy_light_audit(&graph, root, opts.t) {
        Ok(hl) => hl,
        Err(e) => return error_json(e),
    };
    json!({
        "report": report,
        "layers": layers.layers,
        "nHatEdges": n_hat,
        "heavyEdges": hl.heavy,
        "lightEdges": hl.light,
    })
    .to_string()
}

// ------------------------------------------------------------------ layout

fn circle(n: usize, cx: f64, cy: f64, r: f64) -> Vec<[f64; 2]> {
    (0..n)
        .map(|i| {
            let angle = std::f64::consts::TAU * i as f64 / n.max(1) as f64
                - std::f64::consts::FRAC_PI_2;
            [cx + r * angle.cos(), cy + r * angle.sin()]
        })
        .collect()
}

fn layout(spec: &DemoSpec, graph: &Graph) -> Vec<[f64; 2]> {
    let n = graph.vertex_count();
    match *spec {
        DemoSpec::Path { .. } => (0..n)
            .map(|i| [0.06 + 0.88 * i as f64 / (n - 1).max(1) as f64, 0.5])
            .collect(),
        DemoSpec::CompleteBipartite { a, b } => {
            let column = |count: usize, x: f64, i: usize| {
                [x, 0.1 + 0.8 * (i as f64 + 0.5) / count as f64]
            };
            (0..n)
                .map(|v| {
                    if v < a {
                        column(a, 0.25, v)
                    } else {
                        column(b, 0.75, v - a)
                    }
                })
                .collect()
        }
        DemoSpec::BlownUpC5 { s } => {
            // Five cluster discs on a pentagon.
            let centres = circle(5, 0.5, 0.5, 0.36);
            (0..n)
                .map(|v| {
                    let part = v / s;
                    let slot = v % s;
                    let around = circle(s.max(1), centres[part][0], centres[part][1], 0.09);
                    around[slot]
                })
                .collect()
        }
        DemoSpec::Hamming { d: 2, q } => (0..n)
            .map(|v| {
                let (row, col) = (v / q, v % q);
                [
                    0.1 + 0.8 * (col as f64 + 0.5) / q as f64,
                    0.1 + 0.8 * (row as f64 + 0.5) / q as f64,
                ]
            })
            .collect(),
        DemoSpec::ProjectivePlane { .. } => {
            // Points on the inner ring, lines on the outer.
            let half = n / 2;
            let inner = circle(half, 0.5, 0.5, 0.27);
            let outer = circle(half, 0.5, 0.5, 0.44);
            inner.into_iter().chain(outer).collect()
        }
        DemoSpec::Petersen => {
            let outer = circle(5, 0.5, 0.5, 0.42);
            let inner = circle(5, 0.5, 0.5, 0.21);
            outer.into_iter().chain(inner).collect()
        }
        _ => circle(n, 0.5, 0.5, 0.44),
    }
}
