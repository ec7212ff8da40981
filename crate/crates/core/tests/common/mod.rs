//! Random instance generators and brute-force oracles shared by the
//! integration tests. Oracles here are written independently of the library
//! algorithms they check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use temporal_core::graph::{StaticGraph, Weight};
use temporal_core::journeys::enumerate_journeys;
use temporal_core::menger::DisjointnessMode;
use temporal_core::{Journey, Label, Limits, TemporalGraph, TimeEdge};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random simple graph on `n` nodes with each possible edge kept with probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, directed: bool, p: f64) -> StaticGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && (directed || u < v) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    StaticGraph::new(n, directed, edges).unwrap()
}

/// Random temporal graph with at most `max_time_edges` labels in `1..=label_max`.
pub fn random_temporal(
    rng: &mut ChaCha8Rng,
    n: usize,
    directed: bool,
    max_time_edges: usize,
    label_max: Label,
) -> TemporalGraph {
    let g = random_graph(rng, n, directed, 0.5);
    let m = g.edge_count();
    let mut labels = vec![Vec::new(); m];
    if m > 0 {
        let total = rng.gen_range(1..=max_time_edges);
        for _ in 0..total {
            labels[rng.gen_range(0..m)].push(rng.gen_range(1..=label_max));
        }
    }
    TemporalGraph::from_edge_labels(g, labels).unwrap()
}

/// Random undirected weighted temporal graph, weights in `1..=9` (some halves).
pub fn random_weighted(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_time_edges: usize,
    label_max: Label,
) -> TemporalGraph {
    let base = random_graph(rng, n, false, 0.55);
    let weighted: Vec<_> = base
        .edges()
        .iter()
        .map(|&e| (e, Weight::new(rng.gen_range(1..=18), rng.gen_range(1..=2))))
        .collect();
    let g = StaticGraph::weighted(n, false, weighted).unwrap();
    let m = g.edge_count();
    let mut labels = vec![Vec::new(); m];
    if m > 0 {
        for _ in 0..rng.gen_range(1..=max_time_edges) {
            labels[rng.gen_range(0..m)].push(rng.gen_range(1..=label_max));
        }
    }
    TemporalGraph::from_edge_labels(g, labels).unwrap()
}

/// Random weakly connected digraph: a random spanning tree with random
/// orientations plus extra arcs.
pub fn random_weakly_connected(rng: &mut ChaCha8Rng, n: usize, extra: f64) -> StaticGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs = BTreeSet::new();
    for i in 1..n {
        let a = order[i];
        let b = order[rng.gen_range(0..i)];
        arcs.insert(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
    }
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(extra) {
                arcs.insert((u, v));
            }
        }
    }
    StaticGraph::new(n, true, arcs).unwrap()
}

/// Random labeled tree (Prüfer-free: attach each node to an earlier one).
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> StaticGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let edges: Vec<_> = (1..n).map(|i| (order[i], order[rng.gen_range(0..i)])).collect();
    StaticGraph::new(n, false, edges).unwrap()
}

/// Random DAG: arcs only go forward in a random permutation.
pub fn random_dag(rng: &mut ChaCha8Rng, n: usize, p: f64) -> StaticGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push((order[i], order[j]));
            }
        }
    }
    StaticGraph::new(n, true, arcs).unwrap()
}

/// All journeys from `s` to `v`, by an independent recursive search over
/// every label choice along every simple path.
pub fn brute_journeys(tg: &TemporalGraph, s: usize, v: usize) -> Vec<Journey> {
    fn go(
        tg: &TemporalGraph,
        v: usize,
        path: &mut Vec<usize>,
        steps: &mut Vec<TimeEdge>,
        out: &mut Vec<Journey>,
    ) {
        let u = *path.last().unwrap();
        if u == v && !steps.is_empty() {
            out.push(Journey::from_steps(steps.clone()));
            return;
        }
        for w in 0..tg.node_count() {
            if path.contains(&w) {
                continue;
            }
            let Some(labels) = tg.labels_between(u, w) else { continue };
            let g = tg.graph();
            if g.is_directed() && g.edge_id(u, w).map(|id| g.edge(id)) != Some((u, w)) {
                continue;
            }
            for &l in labels {
                if steps.last().is_some_and(|e| e.label >= l) {
                    continue;
                }
                path.push(w);
                steps.push(TimeEdge::new(u, w, l));
                go(tg, v, path, steps, out);
                steps.pop();
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    if s != v {
        go(tg, v, &mut vec![s], &mut Vec::new(), &mut out);
    }
    out
}

/// Library enumeration, unguarded.
pub fn journeys(tg: &TemporalGraph, s: usize, v: usize) -> Vec<Journey> {
    enumerate_journeys(tg, s, v, &Limits::unbounded()).unwrap()
}

/// What a journey consumes in a mode, as opaque keys.
pub fn footprint(mode: DisjointnessMode, j: &Journey) -> BTreeSet<(usize, usize, Label)> {
    let mut out = BTreeSet::new();
    for e in j.steps() {
        match mode {
            DisjointnessMode::Out => {
                out.insert((e.from, usize::MAX, e.label));
            }
            DisjointnessMode::In => {
                out.insert((usize::MAX, e.to, e.label));
            }
            DisjointnessMode::TimeNode => {
                out.insert((e.from, usize::MAX, e.label - 1));
                out.insert((e.to, usize::MAX, e.label));
            }
            DisjointnessMode::TimeEdge => {
                out.insert((e.from, e.to, e.label));
            }
        }
    }
    out
}

/// Largest family of journeys with pairwise disjoint footprints.
pub fn brute_max_disjoint(mode: DisjointnessMode, js: &[Journey]) -> usize {
    let fps: Vec<_> = js.iter().map(|j| footprint(mode, j)).collect();
    fn best(fps: &[BTreeSet<(usize, usize, Label)>], i: usize, used: &mut BTreeSet<(usize, usize, Label)>, have: usize, top: &mut usize) {
        if have + (fps.len() - i) <= *top {
            return;
        }
        if i == fps.len() {
            *top = have;
            return;
        }
        if fps[i].is_disjoint(used) {
            used.extend(fps[i].iter().copied());
            best(fps, i + 1, used, have + 1, top);
            for x in &fps[i] {
                used.remove(x);
            }
        }
        best(fps, i + 1, used, have, top);
    }
    let mut top = 0;
    best(&fps, 0, &mut BTreeSet::new(), 0, &mut top);
    top
}

/// Smallest set of footprint keys hitting every journey.
pub fn brute_min_separator(mode: DisjointnessMode, js: &[Journey]) -> usize {
    let fps: Vec<_> = js.iter().map(|j| footprint(mode, j)).collect();
    let universe: Vec<_> = fps.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    for size in 0..=universe.len() {
        if choose_hits(&fps, &universe, size, 0, &mut Vec::new()) {
            return size;
        }
    }
    unreachable!("the whole universe hits everything")
}

fn choose_hits(
    fps: &[BTreeSet<(usize, usize, Label)>],
    universe: &[(usize, usize, Label)],
    size: usize,
    from: usize,
    picked: &mut Vec<(usize, usize, Label)>,
) -> bool {
    if picked.len() == size {
        return fps.iter().all(|f| picked.iter().any(|x| f.contains(x)));
    }
    for i in from..universe.len() {
        picked.push(universe[i]);
        if choose_hits(fps, universe, size, i + 1, picked) {
            return true;
        }
        picked.pop();
    }
    false
}
