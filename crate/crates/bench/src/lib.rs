//! Deterministic benchmark fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use temporal_core::gadgets::{Lit, XorFormula};
use temporal_core::{Label, StaticGraph, TemporalGraph};

/// Random directed temporal graph: `n` nodes, about `deg·n` arcs, each with
/// `1..=per_edge` labels drawn from `1..=horizon`.
pub fn random_temporal(seed: u64, n: usize, deg: usize, per_edge: usize, horizon: Label) -> TemporalGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs = std::collections::BTreeSet::new();
    while arcs.len() < deg * n {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            arcs.insert((u, v));
        }
    }
    let g = StaticGraph::new(n, true, arcs).expect("distinct arcs");
    let labels = (0..g.edge_count())
        .map(|_| (0..rng.gen_range(1..=per_edge)).map(|_| rng.gen_range(1..=horizon)).collect())
        .collect();
    TemporalGraph::from_edge_labels(g, labels).expect("labels start at 1")
}

/// Max-XOR(3) formula with `n` variables, each in at most three clauses.
pub fn random_xor3(seed: u64, n: usize, m: usize) -> XorFormula {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut occ = vec![0; n];
    let mut clauses = Vec::with_capacity(m);
    while clauses.len() < m {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && occ[a] < 3 && occ[b] < 3 {
            occ[a] += 1;
            occ[b] += 1;
            clauses.push((Lit { var: a, neg: rng.gen() }, Lit { var: b, neg: rng.gen() }));
        }
    }
    XorFormula::new(n, clauses).expect("variables in range")
}
