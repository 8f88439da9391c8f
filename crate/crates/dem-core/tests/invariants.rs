//! Structural invariants cross-checked between independent implementations:
//! randomized sweeps, exhaustive sweeps over all small connected graphs, and
//! the closed-form families against the exact solver.

use dem_core::enumerate::{connected_masks, connected_masks_with_edges, graph_from_mask};
use dem_core::{
    base_graph, conical_layer_em_count, cycle_em_count, dem_number, dem_number_with,
    dem_value_by_base_reduction, forced_endpoint_edges, generate, graph_invariants, is_dem_set,
    monitored_edges, monitored_edges_naive, parse_graph, predicted_dem, restrict_dem,
    revalidate_after_edge_deletion, vertex_cover_number, write_graph, FamilySpec, Graph,
    SearchConfig, VertexId,
};
use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng as _};
use rand_chacha::ChaCha8Rng;

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, &pairs).unwrap()
}

/// Uniform random labeled tree on `n >= 2` vertices, decoded from a random
/// Pruefer sequence.
fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    assert!(n >= 2);
    if n == 2 {
        return Graph::new(2, &[(0, 1)]).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut pairs = Vec::with_capacity(n - 1);
    for &v in &seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        pairs.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let (a, b) = (0..n).filter(|&u| degree[u] == 1).collect_tuple().unwrap();
    pairs.push((a, b));
    Graph::new(n, &pairs).unwrap()
}

/// Random tree plus `extra` random chords; connected by construction.
fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let tree = random_tree(rng, n);
    let mut pairs: Vec<(usize, usize)> = tree.edges().to_vec();
    let mut non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !tree.has_edge(u, v))
        .collect();
    non_edges.shuffle(rng);
    pairs.extend(non_edges.into_iter().take(extra));
    Graph::new(n, &pairs).unwrap()
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.order();
    let mut pairs: Vec<(usize, usize)> = a.edges().to_vec();
    pairs.extend(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
    Graph::new(a.order() + b.order(), &pairs).unwrap()
}

/// Distinct edge densities exercised by the randomized sweeps.
const DENSITIES: [f64; 4] = [0.08, 0.18, 0.35, 0.65];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fast_em_matches_naive_on_random_graphs(
        n in 2usize..=30,
        which in 0usize..DENSITIES.len(),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gnp(&mut rng, n, DENSITIES[which]);
        for x in g.vertices() {
            prop_assert_eq!(
                monitored_edges(&g, x).unwrap(),
                monitored_edges_naive(&g, x).unwrap()
            );
        }
    }

    #[test]
    fn text_round_trip_is_identity(
        n in 0usize..=20,
        which in 0usize..DENSITIES.len(),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gnp(&mut rng, n, DENSITIES[which]);
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.edges(), g.edges());
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn base_graph_is_a_fixed_point(
        n in 1usize..=24,
        which in 0usize..DENSITIES.len(),
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = gnp(&mut rng, n, DENSITIES[which]);
        let (core, _) = base_graph(&g);
        prop_assert!(core.vertices().all(|v| core.degree(v) != 1));
        let (again, _) = base_graph(&core);
        prop_assert_eq!(again.order(), core.order());
        prop_assert_eq!(again.edges(), core.edges());
    }
}

#[test]
fn exhaustive_small_em_structure() {
    // Over every connected graph on up to 5 vertices: the one-search
    // computation agrees with the per-edge recomputation, every vertex
    // monitors the edges to its neighbors, and EM(x) never contains a cycle.
    for n in 1..=5 {
        for mask in connected_masks(n) {
            let g = graph_from_mask(n, mask);
            for x in g.vertices() {
                let em = monitored_edges(&g, x).unwrap();
                assert_eq!(em, monitored_edges_naive(&g, x).unwrap());
                for &y in g.neighbors(x) {
                    let e = g.edge_id(x, y).unwrap();
                    assert!(em.contains(e), "missing incident edge in EM({x})");
                }
                let sub = Graph::new(n, &em.to_pairs(&g)).unwrap();
                let inv = graph_invariants(&sub);
                assert!(inv.is_forest, "EM({x}) contains a cycle: {:?}", g.edges());
            }
        }
    }
}

#[test]
fn minimum_vertex_covers_monitor_everything() {
    // Every endpoint monitors its own edge, so covers are monitoring sets and
    // the cover number bounds the monitoring number from above.
    for n in 2..=5 {
        for mask in connected_masks(n) {
            let g = graph_from_mask(n, mask);
            let beta = vertex_cover_number(&g);
            let dem = dem_number(&g).unwrap().value;
            assert!(dem <= beta, "dem {dem} > beta {beta} on {:?}", g.edges());
            for subset in g.vertices().combinations(beta) {
                let covers_all = g
                    .edges()
                    .iter()
                    .all(|&(u, v)| subset.contains(&u) || subset.contains(&v));
                if covers_all {
                    assert!(is_dem_set(&g, &subset).unwrap().verdict);
                }
            }
        }
    }
}

#[test]
fn sparse_connected_values_track_the_cycle_space() {
    // Connected graphs with at most two independent cycles: dem <= fes + 1,
    // with equality for trees (n >= 2) and unicyclic graphs.
    for n in 2..=6 {
        for m in (n - 1)..=(n + 1).min(n * (n - 1) / 2) {
            for mask in connected_masks_with_edges(n, m) {
                let g = graph_from_mask(n, mask);
                let fes = graph_invariants(&g).fes;
                let dem = dem_number(&g).unwrap().value;
                assert!(dem <= fes + 1, "dem {dem} on {:?}", g.edges());
                if fes <= 1 {
                    assert_eq!(dem, fes + 1, "on {:?}", g.edges());
                }
            }
        }
    }
}

#[test]
fn pendant_stripping_preserves_the_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let cfg = SearchConfig::default();
    for trial in 0..150 {
        let n = 4 + trial % 7; // up to 10
        let extra = trial % 4;
        let g = random_connected(&mut rng, n, extra);
        assert_eq!(
            dem_value_by_base_reduction(&g, &cfg).unwrap(),
            dem_number(&g).unwrap().value,
            "on {:?}",
            g.edges()
        );
    }
}

#[test]
fn value_is_additive_over_components() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for trial in 0..60 {
        let a = gnp(&mut rng, 3 + trial % 5, 0.5);
        let b = gnp(&mut rng, 2 + trial % 6, 0.4);
        let both = disjoint_union(&a, &b);
        assert_eq!(
            dem_number(&both).unwrap().value,
            dem_number(&a).unwrap().value + dem_number(&b).unwrap().value
        );
    }
}

#[test]
fn endpoint_only_edges_are_never_monitored_from_outside() {
    let check = |g: &Graph| {
        let forced = forced_endpoint_edges(g);
        for e in forced.iter() {
            let (u, v) = g.endpoints(e).unwrap();
            for w in g.vertices().filter(|&w| w != u && w != v) {
                assert!(
                    !monitored_edges_naive(g, w).unwrap().contains(e),
                    "({u},{v}) claimed endpoint-only but monitored by {w} in {:?}",
                    g.edges()
                );
            }
        }
    };
    for n in 2..=5 {
        for mask in connected_masks(n) {
            check(&graph_from_mask(n, mask));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..40 {
        check(&gnp(&mut rng, 7, 0.4));
    }
}

#[test]
fn trees_with_one_or_two_chords() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for trial in 0..80 {
        let n = 4 + trial % 9; // up to 12
        let one = random_connected(&mut rng, n, 1);
        assert_eq!(dem_number(&one).unwrap().value, 2, "on {:?}", one.edges());
        let two = random_connected(&mut rng, n, 2);
        if two.size() == n + 1 {
            let dem = dem_number(&two).unwrap().value;
            assert!((2..=3).contains(&dem), "dem {dem} on {:?}", two.edges());
        }
    }
}

#[test]
fn sequence_family_matches_its_formula() {
    for k in 1..=6 {
        for i in 0..=k {
            let spec = FamilySpec::Sequence { k, i };
            let g = generate(&spec).unwrap();
            let expected = predicted_dem(&spec).value.unwrap();
            assert_eq!(
                dem_number(&g).unwrap().value,
                expected,
                "sequence k={k} i={i}"
            );
        }
    }
}

#[test]
fn restriction_to_a_spanning_tree_is_its_vertex_cover() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let cfg = SearchConfig::default();
    for n in 4..=7 {
        let ambient = generate(&FamilySpec::Complete { n }).unwrap();
        for _ in 0..12 {
            let tree = random_tree(&mut rng, n);
            let got = restrict_dem(&ambient, tree.edges(), &cfg).unwrap().value;
            assert_eq!(got, vertex_cover_number(&tree), "tree {:?}", tree.edges());
            assert!((1..=n / 2).contains(&got));
        }
    }
}

#[test]
fn cycle_vertices_monitor_the_predicted_count() {
    for n in 3..=12 {
        let g = generate(&FamilySpec::Cycle { n }).unwrap();
        let expected = cycle_em_count(n).unwrap();
        for x in g.vertices() {
            assert_eq!(monitored_edges(&g, x).unwrap().len(), expected, "C_{n}");
        }
    }
}

#[test]
fn cone_layers_monitor_only_their_own_cycle() {
    for (layers, k) in [(2usize, 9usize), (3, 10)] {
        let g = generate(&FamilySpec::Conical { layers, k }).unwrap();
        // Cycle edges of layer l (1-based): both endpoints sit in that layer.
        let layer_of = |v: VertexId| (v - 1) / k + 1;
        let cycle_edge_ids = |l: usize| -> Vec<usize> {
            (0..g.size())
                .filter(|&e| {
                    let (u, v) = g.endpoints(e).unwrap();
                    u != 0 && layer_of(u) == l && layer_of(v) == l
                })
                .collect()
        };
        for l in 1..=layers {
            let ring = cycle_edge_ids(l);
            assert_eq!(ring.len(), k);
            let expected = conical_layer_em_count(l, k).unwrap();
            for p in 1..=k {
                let v = (l - 1) * k + p;
                let em = monitored_edges(&g, v).unwrap();
                let own = ring.iter().filter(|&&e| em.contains(e)).count();
                assert_eq!(own, expected, "layer {l} vertex {v} of C({layers},{k})");
                for other in (1..=layers).filter(|&j| j != l) {
                    let crossing = cycle_edge_ids(other)
                        .iter()
                        .filter(|&&e| em.contains(e))
                        .count();
                    assert_eq!(crossing, 0, "layer {l} sees layer {other}");
                }
            }
            let em_center = monitored_edges(&g, 0).unwrap();
            assert!(ring.iter().all(|&e| !em_center.contains(e)));
        }
    }
}

#[test]
fn deleting_the_cone_center_leaves_a_prism() {
    for k in [9usize, 10, 11] {
        let cone = generate(&FamilySpec::Conical { layers: 2, k }).unwrap();
        let (peeled, _) = cone.remove_vertex(0).unwrap();
        let prism = generate(&FamilySpec::Prism { k, l: 2 }).unwrap();
        // Layer-stacked labels against product labels: (layer l, position p)
        // is 1 + (l-1)k + (p-1) in the cone, 2(p-1) + (l-1) in the product.
        assert_eq!(peeled.order(), prism.order());
        assert_eq!(peeled.size(), prism.size());
        let map = |v: usize| 2 * (v % k) + v / k;
        for &(u, v) in peeled.edges() {
            assert!(prism.has_edge(map(u), map(v)), "edge ({u},{v}) has no image");
        }

        let before = dem_number(&cone).unwrap().value;
        let after = dem_number(&peeled).unwrap().value;
        assert_eq!(after as i64 - before as i64, (k / 2) as i64 - (k.div_ceil(6)) as i64);
        assert_eq!(after, k);
    }
}

#[test]
fn triangular_prism_has_the_two_triangle_shape() {
    let g6 = generate(&FamilySpec::G6Prime).unwrap();
    let prism = generate(&FamilySpec::Prism { k: 3, l: 2 }).unwrap();
    assert_eq!(g6.order(), prism.order());
    assert_eq!(g6.size(), prism.size());
    let found = (0..6).permutations(6).any(|perm| {
        g6.edges()
            .iter()
            .all(|&(u, v)| prism.has_edge(perm[u], perm[v]))
    });
    assert!(found, "no relabeling matches");
}

#[test]
fn revalidation_never_contradicts_the_solver() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let cfg = SearchConfig::default();
    for trial in 0..30 {
        let g = gnp(&mut rng, 5 + trial % 6, 0.35);
        let basis = dem_number(&g).unwrap().basis;
        for e in 0..g.size() {
            let reval = revalidate_after_edge_deletion(&g, &basis, e).unwrap();
            if reval.verdict {
                let after = dem_number_with(&g.remove_edge(e).unwrap(), &cfg)
                    .unwrap()
                    .value;
                assert!(after <= basis.len(), "edge {e} of {:?}", g.edges());
            }
        }
    }
}

#[test]
fn closed_forms_match_the_solver_on_small_members() {
    // Every family spec with a closed-form value and at most 18 vertices
    // inside the sweep below is checked against the exact search.
    let mut specs: Vec<FamilySpec> = Vec::new();
    for n in 1..=10 {
        specs.push(FamilySpec::Path { n });
        specs.push(FamilySpec::Star { n });
    }
    for n in 3..=10 {
        specs.push(FamilySpec::Cycle { n });
    }
    for n in 1..=6 {
        specs.push(FamilySpec::Complete { n });
    }
    for a in 1..=4 {
        for b in a..=4 {
            specs.push(FamilySpec::CompleteBipartite { a, b });
        }
    }
    for r in 1..=4 {
        for n in (r + 1)..=8 {
            specs.push(FamilySpec::Kite { r, n });
        }
    }
    for n in 7..=10 {
        specs.push(FamilySpec::Kipas { n });
    }
    for k in 1..=4 {
        specs.push(FamilySpec::Spider { k });
        specs.push(FamilySpec::Friendship { n: k });
    }
    for a in 1..=4 {
        for b in a..=4 {
            specs.push(FamilySpec::Grid { a, b });
        }
    }
    for k in 5..=7 {
        specs.push(FamilySpec::Prism { k, l: 2 });
    }
    specs.push(FamilySpec::Prism { k: 4, l: 1 });
    for spec in specs {
        let predicted = predicted_dem(&spec);
        let Some(expected) = predicted.value else {
            panic!("{spec} unexpectedly lacks a closed form");
        };
        let g = generate(&spec).unwrap();
        assert!(g.order() <= 18);
        let got = dem_number(&g).unwrap().value;
        assert_eq!(got, expected, "{spec}");
    }
}
