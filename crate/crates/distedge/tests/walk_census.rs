//! Walk-count DP against exhaustive enumeration, plus the audit quantities.

mod common;

use distedge::audit::{
    audit_report, b_t_set, conflict_neighbourhood, distance_layers, heavy_light_audit,
    sparsity_audit,
};
use distedge::conflict::ConflictGraph;
use distedge::constructions;
use distedge::graph::EdgeId;
use distedge::walks::{count_walks, sigma, sigma_via, tau};
use proptest::prelude::*;

#[test]
fn count_walks_matches_enumeration_on_corpus() {
    for (name, g) in common::small_corpus() {
        if g.vertex_count() > 10 || g.edge_count() == 0 {
            continue;
        }
        let ids: Vec<EdgeId> = g.edge_ids().collect();
        let singles: Vec<Vec<EdgeId>> = ids.iter().map(|&e| vec![e]).collect();
        let all = ids.clone();
        for max_len in 1..=5 {
            for xs in singles.iter().take(4).chain([&all]) {
                for ys in singles.iter().take(4).chain([&all]) {
                    assert_eq!(
                        count_walks(&g, xs, ys, max_len),
                        common::enumerate_walks(&g, xs, ys, max_len),
                        "{name}: X={xs:?} Y={ys:?} l={max_len}"
                    );
                }
            }
        }
    }
}

#[test]
fn sigma_and_sigma_via_match_enumeration_on_corpus() {
    for (name, g) in common::small_corpus() {
        if g.vertex_count() > 10 || g.edge_count() == 0 {
            continue;
        }
        let all: Vec<EdgeId> = g.edge_ids().collect();
        let half: Vec<EdgeId> = all.iter().copied().step_by(2).collect();
        for n_hat in [&all, &half] {
            for u in 0..g.vertex_count().min(4) {
                for v in 0..g.vertex_count() {
                    for max_len in 1..=4 {
                        assert_eq!(
                            sigma(&g, n_hat, u, v, max_len),
                            common::enumerate_sigma(&g, n_hat, u, v, max_len, None),
                            "{name}: sigma u={u} v={v} l={max_len}"
                        );
                        for &f in g.neighbours(v).iter().map(|(_, f)| f).take(2) {
                            assert_eq!(
                                sigma_via(&g, n_hat, u, f, v, max_len),
                                common::enumerate_sigma(&g, n_hat, u, v, max_len, Some(f)),
                                "{name}: sigma_via u={u} v={v} f={f} l={max_len}"
                            );
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// Summing sigma_via over the edges at v recovers sigma.
    #[test]
    fn sigma_via_sums_to_sigma(
        n in 3usize..10,
        p in 0.2f64..0.7,
        seed in any::<u64>(),
        u_pick in any::<u64>(),
        v_pick in any::<u64>(),
    ) {
        let g = common::random_graph(n, p, seed);
        let u = (u_pick % n as u64) as usize;
        let v = (v_pick % n as u64) as usize;
        let n_hat: Vec<EdgeId> = g.edge_ids().step_by(2).collect();
        for t in 1..=4 {
            let total: u64 = g
                .neighbours(v)
                .iter()
                .map(|&(_, f)| sigma_via(&g, &n_hat, u, f, v, t))
                .sum();
            prop_assert_eq!(total, sigma(&g, &n_hat, u, v, t));
        }
    }
}

#[test]
fn positive_walk_count_iff_conflict_adjacent() {
    for (name, g) in common::small_corpus() {
        if g.vertex_count() > 10 {
            continue;
        }
        for t in 1..=3 {
            let cg = ConflictGraph::build(&g, t).unwrap();
            for e in g.edge_ids() {
                for f in g.edge_ids() {
                    if e == f {
                        continue;
                    }
                    let walks = count_walks(&g, &[e], &[f], t + 1);
                    assert_eq!(
                        walks > 0,
                        cg.are_adjacent(e, f),
                        "{name}: t={t} pair ({e}, {f})"
                    );
                }
            }
        }
    }
}

#[test]
fn tau_is_walk_count_less_one() {
    let c4 = common::cycle(4);
    assert_eq!(tau(&c4, EdgeId(0), EdgeId(2), 2), 1);
    for (_, g) in common::small_corpus() {
        if g.vertex_count() > 8 || g.edge_count() < 2 {
            continue;
        }
        for t in 1..=3 {
            let w = count_walks(&g, &[EdgeId(0)], &[EdgeId(1)], t + 1);
            assert_eq!(tau(&g, EdgeId(0), EdgeId(1), t), w.saturating_sub(1));
        }
    }
}

// --------------------------------------------------------------- audits

#[test]
fn layers_partition_reachable_ball() {
    for (name, g) in common::small_corpus() {
        if g.edge_count() == 0 {
            continue;
        }
        let t = 3;
        let layers = distance_layers(&g, EdgeId(0), t).unwrap();
        let (a, b) = g.endpoints(EdgeId(0));
        assert_eq!(layers.layers[0], {
            let mut v = vec![a, b];
            v.sort_unstable();
            v
        });
        // Layer membership agrees with vertex-edge distance and is disjoint.
        let mut seen = vec![false; g.vertex_count()];
        for (i, layer) in layers.layers.iter().enumerate() {
            for &v in layer {
                assert!(!seen[v], "{name}: vertex {v} in two layers");
                seen[v] = true;
                assert_eq!(g.vertex_edge_distance(v, EdgeId(0)), Some(i), "{name}");
            }
        }
        // Layer growth bound |A_i| <= 2 (Delta - 1)^i.
        let branch = (g.max_degree() as u64).saturating_sub(1);
        for (i, layer) in layers.layers.iter().enumerate() {
            let cap = 2 * branch.pow(i as u32);
            assert!(
                layer.len() as u64 <= cap,
                "{name}: |A_{i}| = {} > {cap}",
                layer.len()
            );
        }
    }
}

#[test]
fn s_hat_matches_brute_force_conflict_count() {
    for (name, g) in common::small_corpus() {
        if g.edge_count() == 0 || g.vertex_count() > 10 {
            continue;
        }
        for t in 1..=3 {
            let cg = ConflictGraph::build(&g, t).unwrap();
            for root in g.edge_ids().take(4) {
                let report = sparsity_audit(&g, root, t, 1.0 / 618.0).unwrap();
                let n_hat = conflict_neighbourhood(&g, root, t).unwrap();
                // Brute force: count adjacent pairs inside N-hat.
                let mut expected = 0u64;
                for (i, &e) in n_hat.iter().enumerate() {
                    for &f in &n_hat[i + 1..] {
                        if cg.are_adjacent(e, f) {
                            expected += 1;
                        }
                    }
                }
                assert_eq!(report.s_hat, expected, "{name}: t={t} root={root}");
                assert_eq!(report.n_hat, n_hat.len());
                assert_eq!(report.n_hat, cg.degree(root), "{name}: N-hat is the conflict degree");
                // |N-hat| < 2 Delta^t.
                let delta = g.max_degree() as u64;
                assert!((report.n_hat as u64) < 2 * delta.pow(t as u32).max(1));
                // S-hat fits the complete-graph cap.
                let nh = report.n_hat as u64;
                assert!(report.s_hat <= nh * nh.saturating_sub(1) / 2);
            }
        }
    }
}

#[test]
fn sparsity_audit_k33_and_c6_values() {
    // K_{3,3} at t=2: the conflict graph is K9, so each root sees all eight
    // others, spanning a clique.
    let k33 = common::complete_bipartite(3, 3);
    let r = sparsity_audit(&k33, EdgeId(0), 2, 1.0 / 618.0).unwrap();
    assert_eq!((r.n_hat, r.s_hat), (8, 28));

    // C6 at t=2: the conflict graph is K6 minus a perfect matching. N-hat
    // holds 4 edges; the two antipodal pairs inside it stay non-adjacent.
    let c6 = common::cycle(6);
    let r = sparsity_audit(&c6, EdgeId(0), 2, 1.0 / 618.0).unwrap();
    assert_eq!((r.n_hat, r.s_hat), (4, 4));
    assert_eq!(r.b_t_size, 2);
}

#[test]
fn b_t_examples() {
    let star = common::star(4);
    assert!(b_t_set(&star, EdgeId(0), 1).unwrap().is_empty());
    let k2 = common::path(2);
    assert!(b_t_set(&k2, EdgeId(0), 2).unwrap().is_empty());
    let c6 = common::cycle(6);
    assert_eq!(b_t_set(&c6, EdgeId(0), 2).unwrap().len(), 2);
}

#[test]
#[allow(clippy::int_plus_one)] // keep the girth condition in its 2t+1 form
fn heavy_light_claims_hold_on_high_girth_fixtures() {
    // Girth >= 2t + 1 makes all three claims theorems; check every root.
    let fixtures = [
        ("heawood", constructions::projective_plane_incidence(2).unwrap()),
        ("petersen", constructions::petersen()),
        ("c7", common::cycle(7)),
    ];
    let t = 2;
    for (name, g) in &fixtures {
        assert!(g.girth().unwrap() >= 2 * t + 1);
        let delta = g.max_degree() as u64;
        for root in g.edge_ids() {
            let r = heavy_light_audit(g, root, t).unwrap();
            assert!(r.claim_one_heavy_per_boundary_vertex, "{name} root {root}");
            assert!(r.claim_light_single_foothold, "{name} root {root}");
            assert!(r.claim_outer_attachment, "{name} root {root}");
            assert!(r.heavy_count as u64 <= 2 * delta.pow(t as u32 - 1));
            assert!(r.max_light_conflicts <= (3 * t as u64 + 2) * delta.pow(t as u32 - 1));
            // Light members of N-hat live between the top two layers.
            let layers = distance_layers(g, root, t).unwrap();
            let in_layer = |v: usize, i: usize| layers.layers[i].contains(&v);
            for &f in &r.light {
                let (a, b) = g.endpoints(f);
                assert!(
                    (in_layer(a, t - 1) && in_layer(b, t))
                        || (in_layer(b, t - 1) && in_layer(a, t)),
                    "{name}: light edge {f} not between A_1 and A_2"
                );
            }
        }
    }
}

#[test]
fn heavy_light_on_k33_is_informational() {
    // Girth 4 < 2t + 1: claims may fail but the audit still reports.
    let k33 = common::complete_bipartite(3, 3);
    let r = heavy_light_audit(&k33, EdgeId(0), 2).unwrap();
    assert_eq!(r.heavy_count + r.light.len(), 8);
}

#[test]
fn audit_report_fields_serialize_exactly() {
    let g = constructions::petersen();
    let report = audit_report(&g, EdgeId(0), 2, 1.0 / 618.0).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    let object = json.as_object().unwrap();
    let expected = [
        "root",
        "t",
        "delta",
        "nHat",
        "sHat",
        "bound",
        "pass",
        "bTSize",
        "layersSizes",
        "heavyCount",
        "claim4",
        "claim5",
        "claim6",
        "maxLightConflicts",
    ];
    assert_eq!(object.len(), expected.len());
    for key in expected {
        assert!(object.contains_key(key), "missing field {key}");
    }
    assert_eq!(json["layersSizes"].as_array().unwrap().len(), 3);
}
