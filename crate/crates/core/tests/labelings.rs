mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;
use temporal_core::labelings::*;
use temporal_core::structure::{diameter, is_strongly_connected, reachability_count};
use temporal_core::verify::{preserves_all_paths, preserves_reach};
use temporal_core::{Label, Labeling, Limits, StaticGraph, TemporalGraph};

fn tg(g: &StaticGraph, l: &Labeling) -> TemporalGraph {
    TemporalGraph::new(g.clone(), l).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn dag_labeling_is_single_and_preserves_paths(n in 2usize..=8, seed in any::<u64>()) {
        let g = random_dag(&mut rng(seed), n, 0.4);
        let l = label_dag_all_paths(&g).unwrap();
        prop_assert!(l.temporality() <= 1);
        prop_assert!(preserves_all_paths(&tg(&g, &l), &Limits::default()).unwrap());
    }

    #[test]
    fn tree_labeling_fits_in_diameter(n in 2usize..=10, seed in any::<u64>()) {
        let t = random_tree(&mut rng(seed), n);
        let l = label_tree_all_paths(&t).unwrap();
        prop_assert!(l.temporality() <= 2);
        prop_assert!(l.max_label().unwrap() <= diameter(&t) as Label);
        prop_assert!(preserves_all_paths(&tg(&t, &l), &Limits::default()).unwrap());
    }

    #[test]
    fn reach_labeling_preserves_reach(n in 2usize..=8, directed in any::<bool>(), seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), n, directed, 0.3);
        let l = label_reach(&g);
        prop_assert!(preserves_reach(&tg(&g, &l)));
    }

    #[test]
    fn bfs_union_cost_is_reachability(n in 2usize..=9, seed in any::<u64>()) {
        let g = random_weakly_connected(&mut rng(seed), n, 0.2);
        let b = label_reach_diameter_bfs(&g).unwrap();
        prop_assert_eq!(b.per_tree_cost, reachability_count(&g));
        prop_assert!(b.labeling.cost() <= b.per_tree_cost);
        prop_assert!(b.labeling.max_label().unwrap_or(0) <= diameter(&g) as Label);
        prop_assert!(preserves_reach(&tg(&g, &b.labeling)));
    }
}

#[test]
fn strongly_connected_reach_uses_two_labels() {
    let mut rng = rng(51);
    let mut tested = 0;
    while tested < 150 {
        let n = rng.gen_range(2..=8);
        let g = random_graph(&mut rng, n, true, 0.45);
        if !is_strongly_connected(&g) {
            continue;
        }
        tested += 1;
        let root = rng.gen_range(0..n);
        let l = label_strongly_connected_reach(&g, root).unwrap();
        assert!(l.temporality() <= 2, "{g:?}");
        assert!(preserves_reach(&tg(&g, &l)), "{g:?}");
    }
    let path = StaticGraph::new(3, true, [(0, 1), (1, 2)]).unwrap();
    assert!(label_strongly_connected_reach(&path, 0).is_err());
}

#[test]
fn ring_labelings_preserve_all_paths() {
    let lim = Limits::default();
    for n in 3..=9 {
        let g = temporal_core::graph::directed_ring(n).unwrap();
        let two = label_ring_all_paths(n).unwrap();
        assert!(two.temporality() <= 2 && preserves_all_paths(&tg(&g, &two), &lim).unwrap());
        for k in 0..n {
            let l = label_ring_tradeoff(n, k).unwrap();
            assert!(l.age().unwrap() as usize <= n - 1 + k, "n={n} k={k}");
            assert!(preserves_all_paths(&tg(&g, &l), &lim).unwrap(), "n={n} k={k}");
        }
        assert!(label_ring_tradeoff(n, n).is_err());
    }
}

#[test]
fn trivial_labeling_preserves_all_paths() {
    let lim = Limits::default();
    let mut rng = rng(52);
    for i in 0..100 {
        let n = rng.gen_range(2..=6);
        let g = random_graph(&mut rng, n, i % 2 == 0, 0.5);
        match label_all_paths_trivial(&g, &lim) {
            Ok(l) => assert!(preserves_all_paths(&tg(&g, &l), &lim).unwrap()),
            Err(_) => assert_eq!(g.edge_count(), 0),
        }
    }
}

/// Induced subgraph on `nodes`, renumbered in the given order.
fn induced(g: &StaticGraph, nodes: &[usize]) -> StaticGraph {
    let pos = |x: usize| nodes.iter().position(|&y| y == x);
    let arcs = g.edges().iter().filter_map(|&(u, v)| Some((pos(u)?, pos(v)?)));
    StaticGraph::new(nodes.len(), g.is_directed(), arcs).unwrap()
}

// Composition never needs more labels per edge than the worst component;
// a graph whose components are all single nodes still needs one label on
// each arc between them, hence the floor of 1.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]
    #[test]
    fn composition_respects_component_temporality(n in 2usize..=9, seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), n, true, 0.3);
        let mut worst = 1;
        for comp in temporal_core::structure::strongly_connected_components(&g) {
            if comp.len() > 1 {
                let c = induced(&g, &comp);
                worst = worst.max(label_strongly_connected_reach(&c, 0).unwrap().temporality());
            }
        }
        prop_assert!(label_reach(&g).temporality() <= worst);
    }
}
