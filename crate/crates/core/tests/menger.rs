mod common;

use common::*;
use rand::Rng;
use temporal_core::journeys::foremost_journeys;
use temporal_core::menger::{
    foremost_disjoint_packing, menger, multi_source_packing, pairwise_disjoint, DisjointnessMode,
};
use temporal_core::{Label, StaticGraph, TemporalGraph};

fn check_instance(tg: &TemporalGraph, s: usize, v: usize) {
    let js = brute_journeys(tg, s, v);
    for mode in DisjointnessMode::ALL {
        let r = menger(tg, s, v, mode).unwrap();
        assert_eq!(r.k, brute_max_disjoint(mode, &js), "{mode} max on {tg:?} {s}->{v}");
        assert_eq!(r.separator.len(), r.k, "{mode} equality on {tg:?} {s}->{v}");
        assert_eq!(brute_min_separator(mode, &js), r.k, "{mode} min removal");
        assert_eq!(r.witnesses.len(), r.k);
        for w in &r.witnesses {
            assert!(w.is_valid(tg) && w.source() == s && w.target() == v, "{mode} witness {w}");
        }
        assert!(pairwise_disjoint(mode, &r.witnesses), "{mode} witnesses overlap");
        assert!(!r.separator.leaves_journey(tg, s, v), "{mode} separator leaks");
    }
}

#[test]
fn random_small_instances_match_brute_force() {
    let mut rng = rng(7);
    for i in 0..300 {
        let n = rng.gen_range(2..=5);
        let tg = random_temporal(&mut rng, n, i % 3 != 0, 10, 5);
        let s = rng.gen_range(0..n);
        let v = (s + rng.gen_range(1..n)) % n;
        check_instance(&tg, s, v);
    }
}

#[test]
fn packing_matches_brute_force() {
    let mut rng = rng(11);
    for _ in 0..200 {
        let n = rng.gen_range(2..=5);
        let tg = random_temporal(&mut rng, n, true, 10, 6);
        let (s, v) = (0, n - 1);
        let js = brute_journeys(&tg, s, v);
        let got = foremost_disjoint_packing(&tg, s, v, 1).unwrap().map(|p| p.arrival);
        let foremost = tg
            .min_label()
            .and_then(|lo| foremost_journeys(&tg, s, lo).unwrap().arrival(v));
        assert_eq!(got, foremost);
        // Best pair of out-disjoint journeys by latest arrival.
        let mut best: Option<Label> = None;
        for a in 0..js.len() {
            for b in a + 1..js.len() {
                let pair = [js[a].clone(), js[b].clone()];
                if pairwise_disjoint(DisjointnessMode::Out, &pair) {
                    let t = js[a].arrival().max(js[b].arrival()).unwrap();
                    best = Some(best.map_or(t, |x: Label| x.min(t)));
                }
            }
        }
        let p = foremost_disjoint_packing(&tg, s, v, 2).unwrap();
        assert_eq!(p.as_ref().map(|p| p.arrival), best, "{tg:?}");
        if let Some(p) = p {
            assert_eq!(p.journeys.len(), 2);
            assert!(pairwise_disjoint(DisjointnessMode::Out, &p.journeys));
            assert!(p.journeys.iter().all(|j| j.is_valid(&tg) && j.arrival() <= Some(p.arrival)));
        }
    }
}

/// Undirected graph whose every instance in `1..=age` is connected.
fn connected_instances(rng: &mut rand_chacha::ChaCha8Rng, n: usize, age: Label) -> TemporalGraph {
    let mut edges = std::collections::BTreeMap::<(usize, usize), Vec<Label>>::new();
    for t in 1..=age {
        let tree = random_tree(rng, n);
        for &(a, b) in tree.edges() {
            edges.entry((a, b)).or_default().push(t);
        }
        for _ in 0..rng.gen_range(0..n) {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if a != b {
                edges.entry((a.min(b), a.max(b))).or_default().push(t);
            }
        }
    }
    let g = StaticGraph::new(n, false, edges.keys().copied()).unwrap();
    let labels = g.edges().iter().map(|e| edges[e].clone()).collect();
    TemporalGraph::from_edge_labels(g, labels).unwrap()
}

#[test]
fn tokens_always_arrive_under_hypothesis() {
    let mut rng = rng(3);
    for _ in 0..60 {
        let n = rng.gen_range(2..=6);
        let k = rng.gen_range(1..=4);
        let tg = connected_instances(&mut rng, n, (n + k) as Label);
        let v = rng.gen_range(0..n);
        let mut sources = Vec::new();
        for _ in 0..k {
            sources.push((rng.gen_range(0..n), 1));
        }
        let p = multi_source_packing(&tg, &sources, v).unwrap().expect("guaranteed success");
        assert!(p.hypothesis_holds);
        assert_eq!(p.journeys.len(), k);
        let mut from: Vec<usize> = p.journeys.iter().map(|j| j.source()).collect();
        let mut want: Vec<usize> = sources.iter().map(|s| s.0).collect();
        from.sort();
        want.sort();
        assert_eq!(from, want);
        let moving: Vec<_> = p.journeys.iter().filter(|j| j.hops() > 0).cloned().collect();
        assert!(moving.iter().all(|j| j.is_valid(&tg) && j.target() == v));
        assert!(pairwise_disjoint(DisjointnessMode::Out, &moving));
    }
}

#[test]
fn tokens_fail_without_capacity() {
    // Two isolated nodes, one edge available once: only one token fits.
    let g = StaticGraph::new(3, true, [(0, 2)]).unwrap();
    let tg = TemporalGraph::from_edge_labels(g, vec![vec![1]]).unwrap();
    assert!(multi_source_packing(&tg, &[(0, 2)], 2).unwrap().is_none());
    assert!(multi_source_packing(&tg, &[(1, 1)], 2).unwrap().is_none());
}
