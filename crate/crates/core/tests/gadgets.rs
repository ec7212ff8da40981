mod common;

use common::*;
use rand::Rng;
use temporal_core::gadgets::*;
use temporal_core::verify::preserves_reach_within_age;
use temporal_core::{Limits, TemporalGraph};

/// Normalized formula with every variable in at most three clauses.
fn random_formula(rng: &mut rand_chacha::ChaCha8Rng, n: usize, m: usize) -> XorFormula {
    let mut occ = vec![0; n];
    let mut clauses = Vec::new();
    let mut tries = 0;
    while clauses.len() < m && tries < 100 {
        tries += 1;
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j || occ[i] == 3 || occ[j] == 3 {
            continue;
        }
        occ[i] += 1;
        occ[j] += 1;
        let (a, b) = (Lit { var: i, neg: rng.gen() }, Lit { var: j, neg: rng.gen() });
        clauses.push((a, b));
    }
    XorFormula::new(n, clauses).unwrap().normalized().unwrap()
}

fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0u32..1 << n).map(move |b| (0..n).map(|i| b >> i & 1 == 1).collect())
}

#[test]
fn canonical_labelings_round_trip() {
    let mut rng = rng(61);
    for _ in 0..25 {
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=4);
        let phi = random_formula(&mut rng, n, m);
        let gg = build_gadget_graph(&phi).unwrap();
        for tau in assignments(n) {
            let k = xor_satisfied_count(&phi, &tau).unwrap();
            let lab = gg.labeling_from_assignment(&tau).unwrap();
            assert_eq!(lab.cost(), gg.expected_cost(k), "{phi} {tau:?}");
            let tg = TemporalGraph::new(gg.graph.clone(), &lab).unwrap();
            assert!(preserves_reach_within_age(&tg, GADGET_AGE));
            assert_eq!(gg.assignment_from_labeling(&lab).unwrap(), tau);
        }
    }
}

// Extra labels keep reach; extraction must still meet 2|t| ≥ 39n − 4m − |λ|.
#[test]
fn extraction_bound_on_perturbed_labelings() {
    let mut rng = rng(62);
    for _ in 0..60 {
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=5);
        let phi = random_formula(&mut rng, n, m);
        let gg = build_gadget_graph(&phi).unwrap();
        let tau: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        let mut lab = gg.labeling_from_assignment(&tau).unwrap();
        for _ in 0..rng.gen_range(0..12) {
            let (a, b) = gg.graph.edge(rng.gen_range(0..gg.graph.edge_count()));
            lab.insert(a, b, [rng.gen_range(1..=GADGET_AGE)]);
        }
        if rng.gen_bool(0.5) {
            let g = &gg.gadgets[rng.gen_range(0..n)];
            for (z, (a, b)) in g.trunk_path(!tau[0]).into_iter().enumerate() {
                lab.insert(a, b, [z as u32 + 1]);
            }
        }
        let got = gg.assignment_from_labeling(&lab).unwrap();
        let k = xor_satisfied_count(&phi, &got).unwrap();
        let m = phi.clause_count();
        assert!(2 * k + lab.cost() >= 39 * n - 4 * m, "{phi}");
    }
}

#[test]
fn optimum_cost_tracks_max_xor() {
    let lim = Limits::default();
    let mut rng = rng(63);
    for _ in 0..20 {
        let n = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=4);
        let phi = random_formula(&mut rng, n, m);
        let gg = build_gadget_graph(&phi).unwrap();
        let (opt, _) = max_xor_brute(&phi, &lim).unwrap();
        let best = assignments(n)
            .map(|t| gg.labeling_from_assignment(&t).unwrap().cost())
            .min()
            .unwrap();
        assert_eq!(best, gg.expected_cost(opt));
    }
}

#[test]
fn reduction_adds_two_per_clause() {
    let lim = Limits::default();
    let mut rng = rng(64);
    for _ in 0..30 {
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(1..=5);
        let clauses = (0..m)
            .map(|_| {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                (Lit { var: i, neg: rng.gen() }, Lit { var: j, neg: rng.gen() })
            })
            .collect();
        let phi1 = XorFormula::new(n, clauses).unwrap();
        let phi2 = reduce_maxxor_to_3(&phi1);
        assert_eq!((phi2.vars, phi2.clause_count()), (n + 2 * m, 3 * m));
        let occ = phi2.variable_occurrences();
        assert!(occ[n..].iter().all(|&c| c == 2));
        let (o1, t1) = max_xor_brute(&phi1, &lim).unwrap();
        let (o2, _) = max_xor_brute(&phi2, &lim).unwrap();
        assert_eq!(o2, o1 + 2 * m);
        let lifted = extend_assignment(&phi1, &t1).unwrap();
        assert_eq!(xor_satisfied_count(&phi2, &lifted).unwrap(), o2);
    }
}
