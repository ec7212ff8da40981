//! Property checkers, exact τ/κ oracles, and edge kernels.
//!
//! The oracles search labelings up to order isomorphism. Both properties
//! compare labels only through `<`, so any labeling can be replaced by the
//! ranks of its distinct values without changing the answer, and its age
//! becomes the number of distinct values. Instead of drawing labels from a
//! fixed range, each edge in turn places its labels relative to the values
//! already in use: on one of them, or in one of the gaps around them.

use std::collections::HashSet;

use crate::error::{guard, Error, Result};
use crate::graph::{complete_digraph, grid, StaticGraph};
use crate::journeys::foremost_journeys;
use crate::labelings::ConnectivityProperty;
use crate::limits::Limits;
use crate::structure::{bfs_distances, longest_path_len};
use crate::temporal::{Label, TemporalGraph};

pub use crate::structure::reachability_count;

fn next_label(set: &[Label], after: Label) -> Option<Label> {
    set.get(set.partition_point(|&l| l <= after)).copied()
}

/// Whether the node sequence `path` can be traversed with increasing labels.
/// Greedy: always take the smallest usable label.
pub fn preserves_path(tg: &TemporalGraph, path: &[usize]) -> Result<bool> {
    let n = tg.node_count();
    if path.iter().any(|&u| u >= n) {
        return Err(Error::NotAPath);
    }
    let mut seen = vec![false; n];
    for &u in path {
        if std::mem::replace(&mut seen[u], true) {
            return Err(Error::NotAPath);
        }
    }
    let mut t = 0;
    for w in path.windows(2) {
        let set = tg.labels_between(w[0], w[1]).ok_or(Error::NotAPath)?;
        match next_label(set, t) {
            Some(l) => t = l,
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// Greedy DFS over every simple path; false as soon as one path cannot
/// continue. Edges not yet `active` are wildcards that take whatever value
/// fits, so the check is exact once all edges are active and a necessary
/// condition before that.
fn all_paths_ok(g: &StaticGraph, sets: &[Vec<Label>], active: &[bool]) -> bool {
    fn go(
        g: &StaticGraph,
        sets: &[Vec<Label>],
        active: &[bool],
        u: usize,
        t: Label,
        on: &mut [bool],
    ) -> bool {
        for &(w, id) in g.out_neighbors(u) {
            if on[w] {
                continue;
            }
            // A wildcard fits strictly between its neighbors on the path,
            // since the oracle works with dense order types.
            let l = if active[id] {
                let Some(l) = next_label(&sets[id], t) else { return false };
                l
            } else {
                t
            };
            on[w] = true;
            let ok = go(g, sets, active, w, l, on);
            on[w] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    let mut on = vec![false; g.node_count()];
    (0..g.node_count()).all(|s| {
        on[s] = true;
        let ok = go(g, sets, active, s, 0, &mut on);
        on[s] = false;
        ok
    })
}

/// True iff every simple path of the underlying graph is preserved.
pub fn preserves_all_paths(tg: &TemporalGraph, limits: &Limits) -> Result<bool> {
    let g = tg.graph();
    guard("simple-path nodes", limits.path_nodes, g.node_count())?;
    Ok(all_paths_ok(g, tg.edge_labels(), &vec![true; g.edge_count()]))
}

/// Same answer as [`preserves_all_paths`], checking only paths that cannot
/// be extended at either end. Subpaths of a preserved path are preserved by
/// the same labels, and every path lies inside a maximal one.
pub fn preserves_maximal_paths(tg: &TemporalGraph, limits: &Limits) -> Result<bool> {
    let g = tg.graph();
    guard("simple-path nodes", limits.path_nodes, g.node_count())?;
    let mut ok = true;
    crate::structure::for_each_simple_path(g, |p| {
        let on = |x: usize| p.contains(&x);
        let stuck_end = g.out_neighbors(*p.last().unwrap()).iter().all(|&(w, _)| on(w));
        let stuck_start = g.in_neighbors(p[0]).iter().all(|&(w, _)| on(w));
        if stuck_end && stuck_start && !preserves_path(tg, p).expect("enumerated path") {
            ok = false;
        }
        ok
    });
    Ok(ok)
}

/// Every ordered pair reachable in the underlying graph is joined by a
/// journey. Uses foremost journeys from the smallest label.
pub fn preserves_reach(tg: &TemporalGraph) -> bool {
    let g = tg.graph();
    let Some(lo) = tg.min_label() else {
        return g.edge_count() == 0;
    };
    (0..g.node_count()).all(|u| {
        let table = foremost_journeys(tg, u, lo).expect("start is the minimum label");
        bfs_distances(g, u)
            .iter()
            .enumerate()
            .all(|(v, d)| d.is_none() || table.reached(v))
    })
}

/// [`preserves_reach`] with age at most `age_max`.
pub fn preserves_reach_within_age(tg: &TemporalGraph, age_max: u32) -> bool {
    tg.age().is_none_or(|a| a <= age_max) && preserves_reach(tg)
}

/// Dispatch on the property.
pub fn preserves(tg: &TemporalGraph, prop: ConnectivityProperty, limits: &Limits) -> Result<bool> {
    match prop {
        ConnectivityProperty::AllPaths => preserves_all_paths(tg, limits),
        ConnectivityProperty::Reach => Ok(preserves_reach(tg)),
    }
}

/// Earliest arrivals by repeated relaxation; independent of the foremost
/// sweep so the oracles do not trust it.
fn reach_ok(g: &StaticGraph, sets: &[Vec<Label>], reachable: &[Vec<bool>]) -> bool {
    let n = g.node_count();
    let mut arrival: Vec<Option<Label>> = vec![None; n];
    for s in 0..n {
        arrival.fill(None);
        arrival[s] = Some(0);
        let mut changed = true;
        while changed {
            changed = false;
            for u in 0..n {
                let Some(t) = arrival[u] else { continue };
                for &(w, id) in g.out_neighbors(u) {
                    if let Some(l) = next_label(&sets[id], t) {
                        if arrival[w].is_none_or(|a| l < a) {
                            arrival[w] = Some(l);
                            changed = true;
                        }
                    }
                }
            }
        }
        if (0..n).any(|v| reachable[s][v] && arrival[v].is_none()) {
            return false;
        }
    }
    true
}

/// Edge order for the oracle: each edge touches one already placed when
/// possible, so paths close early and pruning bites.
fn connected_edge_order(g: &StaticGraph) -> Vec<usize> {
    let m = g.edge_count();
    let mut placed = vec![false; m];
    let mut touched = vec![false; g.node_count()];
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        let next = (0..m)
            .filter(|&id| !placed[id])
            .find(|&id| {
                let (u, v) = g.edge(id);
                touched[u] || touched[v]
            })
            .or_else(|| (0..m).find(|&id| !placed[id]))
            .unwrap();
        placed[next] = true;
        let (u, v) = g.edge(next);
        touched[u] = true;
        touched[v] = true;
        order.push(next);
    }
    order
}

/// Labels for one more edge, as `count` values placed among the distinct
/// values `vals`, which must be spaced more than `count` apart. Calls `emit`
/// per choice until it returns true.
fn placements(vals: &[Label], count: usize, emit: &mut dyn FnMut(&[Label]) -> bool) -> bool {
    // Slots alternate gap, value, gap, …, gap. Gaps take any count, values 0 or 1.
    fn go(
        vals: &[Label],
        slot: usize,
        left: usize,
        acc: &mut Vec<Label>,
        emit: &mut dyn FnMut(&[Label]) -> bool,
    ) -> bool {
        let slots = 2 * vals.len() + 1;
        if slot == slots {
            return left == 0 && emit(acc);
        }
        if slot.is_multiple_of(2) {
            let below = if slot == 0 { 0 } else { vals[slot / 2 - 1] };
            for c in 0..=left {
                acc.extend((1..=c as Label).map(|i| below + i));
                let stop = go(vals, slot + 1, left - c, acc, emit);
                acc.truncate(acc.len() - c);
                if stop {
                    return true;
                }
            }
            false
        } else {
            let v = vals[slot / 2];
            if left > 0 {
                acc.push(v);
                let stop = go(vals, slot + 1, left - 1, acc, emit);
                acc.pop();
                if stop {
                    return true;
                }
            }
            go(vals, slot + 1, left, acc, emit)
        }
    }
    go(vals, 0, count, &mut Vec::new(), emit)
}

struct Oracle<'a> {
    g: &'a StaticGraph,
    prop: ConnectivityProperty,
    order: Vec<usize>,
    max_distinct: usize,
    reachable: Vec<Vec<bool>>,
    sets: Vec<Vec<Label>>,
    active: Vec<bool>,
}

impl<'a> Oracle<'a> {
    fn new(g: &'a StaticGraph, prop: ConnectivityProperty, age_max: Option<u32>) -> Self {
        let n = g.node_count();
        Oracle {
            g,
            prop,
            order: connected_edge_order(g),
            max_distinct: age_max.map_or(usize::MAX, |a| a as usize),
            reachable: (0..n)
                .map(|s| bfs_distances(g, s).iter().map(Option::is_some).collect())
                .collect(),
            sets: vec![Vec::new(); g.edge_count()],
            active: vec![false; g.edge_count()],
        }
    }

    fn distinct(&self) -> Vec<Label> {
        let mut vals: Vec<Label> = self.sets.iter().flatten().copied().collect();
        vals.sort_unstable();
        vals.dedup();
        vals
    }

    /// Rewrite labels as `spacing · rank`, leaving room in every gap.
    fn respace(&mut self, spacing: Label) {
        let vals = self.distinct();
        for set in &mut self.sets {
            for l in set.iter_mut() {
                *l = spacing * (vals.binary_search(l).unwrap() as Label + 1);
            }
        }
    }

    fn complete_ok(&self) -> bool {
        match self.prop {
            // Already checked edge by edge.
            ConnectivityProperty::AllPaths => true,
            ConnectivityProperty::Reach => reach_ok(self.g, &self.sets, &self.reachable),
        }
    }

    /// Assign `counts(i, budget_left)` labels to the i-th edge in order.
    fn search(&mut self, i: usize, budget: usize, per_edge: &dyn Fn(usize) -> std::ops::RangeInclusive<usize>) -> bool {
        if i == self.order.len() {
            return self.complete_ok();
        }
        let id = self.order[i];
        let spacing = budget.max(1) as Label + 1;
        self.respace(spacing);
        let vals = self.distinct();
        let snapshot = self.sets.clone();
        for count in per_edge(budget) {
            let mut found = false;
            placements(&vals, count, &mut |labels| {
                let fresh = labels.iter().filter(|l| vals.binary_search(l).is_err()).count();
                if vals.len() + fresh > self.max_distinct {
                    return false;
                }
                self.sets[id] = labels.to_vec();
                self.active[id] = true;
                let prune = self.prop == ConnectivityProperty::AllPaths
                    && !all_paths_ok(self.g, &self.sets, &self.active);
                if !prune && self.search(i + 1, budget - count, per_edge) {
                    found = true;
                    return true;
                }
                self.sets = snapshot.clone();
                self.active[id] = false;
                false
            });
            if found {
                return true;
            }
        }
        self.sets = snapshot;
        self.active[id] = false;
        false
    }
}

fn oracle_setup(g: &StaticGraph, limits: &Limits) -> Result<usize> {
    guard("oracle edges", limits.oracle_edges, g.edge_count())?;
    longest_path_len(g, limits)
}

/// Exact temporality: the least `b` such that some labeling with at most `b`
/// labels per edge (and age at most `age_max`) has the property. `None` when
/// no admissible labeling exists.
pub fn oracle_temporality(
    g: &StaticGraph,
    prop: ConnectivityProperty,
    age_max: Option<u32>,
    limits: &Limits,
) -> Result<Option<usize>> {
    let p = oracle_setup(g, limits)?;
    if g.edge_count() == 0 {
        return Ok(Some(0));
    }
    // Labels {1..p} on every edge satisfy both properties, so b ≤ p suffices
    // when the age allows it; otherwise b = age_max already fills every edge.
    let cap = age_max.map_or(p, |a| p.min(a as usize));
    for b in 1..=cap.max(1) {
        let width = age_max.map_or(b, |a| b.min(a as usize));
        let mut o = Oracle::new(g, prop, age_max);
        // Extra labels never hurt, so exactly `width` per edge is enough.
        let m = g.edge_count();
        if o.search(0, width * m, &|_| width..=width) {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// Exact temporal cost: the least total label count over admissible
/// labelings with the property. `None` when none exists.
pub fn oracle_temporal_cost(
    g: &StaticGraph,
    prop: ConnectivityProperty,
    age_max: Option<u32>,
    limits: &Limits,
) -> Result<Option<usize>> {
    let p = oracle_setup(g, limits)?;
    let m = g.edge_count();
    let min_per_edge = usize::from(prop == ConnectivityProperty::AllPaths);
    let cap = age_max.map_or(p, |a| p.min(a as usize)).max(1);
    // Every edge carrying {1..cap} is the largest labeling worth trying.
    for c in 0..=cap * m {
        let mut o = Oracle::new(g, prop, age_max);
        let per_edge = |left: usize| min_per_edge..=left.min(cap);
        if o.search(0, c, &per_edge) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// A set of edges every ordering of which some simple path visits in turn.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeKernel {
    pub edges: Vec<(usize, usize)>,
}

impl EdgeKernel {
    pub fn new(edges: Vec<(usize, usize)>) -> Self {
        EdgeKernel { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edge ids in `g`, rejecting unknown and repeated edges.
    pub fn edge_ids(&self, g: &StaticGraph) -> Result<Vec<usize>> {
        let mut ids = Vec::new();
        for &(u, v) in &self.edges {
            let id = g.edge_id(u, v).ok_or(Error::UnknownEdge(u, v))?;
            if ids.contains(&id) {
                return Err(Error::DuplicateEdge(u, v));
            }
            ids.push(id);
        }
        Ok(ids)
    }
}

fn orientations(g: &StaticGraph, id: usize) -> Vec<(usize, usize)> {
    let (u, v) = g.edge(id);
    if g.is_directed() {
        vec![(u, v)]
    } else {
        vec![(u, v), (v, u)]
    }
}

/// A simple path (as nodes) traversing the edges `ids` in this order, if any.
fn kernel_path(g: &StaticGraph, ids: &[usize]) -> Option<Vec<usize>> {
    struct Ctx<'a> {
        g: &'a StaticGraph,
        ids: &'a [usize],
        ends: Vec<Vec<(usize, usize)>>,
        // dist[i][x]: hops from x to the nearer tail of kernel edge i.
        dist: Vec<Vec<usize>>,
        failed: HashSet<(usize, u128, usize)>,
        path: Vec<usize>,
    }
    impl Ctx<'_> {
        fn go(&mut self, x: usize, seen: u128, idx: usize) -> bool {
            if idx == self.ids.len() {
                return true;
            }
            if self.failed.contains(&(x, seen, idx)) {
                return false;
            }
            for k in 0..self.ends[idx].len() {
                let (p, q) = self.ends[idx][k];
                if p == x && seen & (1 << q) == 0 {
                    self.path.push(q);
                    if self.go(q, seen | 1 << q, idx + 1) {
                        return true;
                    }
                    self.path.pop();
                }
            }
            let mut nbrs: Vec<(usize, usize)> = self
                .g
                .out_neighbors(x)
                .iter()
                .filter(|&&(w, id)| seen & (1 << w) == 0 && !self.ids.contains(&id))
                .map(|&(w, _)| (self.dist[idx][w], w))
                .filter(|&(d, _)| d != usize::MAX)
                .collect();
            nbrs.sort_unstable();
            for (_, w) in nbrs {
                self.path.push(w);
                if self.go(w, seen | 1 << w, idx) {
                    return true;
                }
                self.path.pop();
            }
            self.failed.insert((x, seen, idx));
            false
        }
    }
    let n = g.node_count();
    let ends: Vec<_> = ids.iter().map(|&id| orientations(g, id)).collect();
    // Backward BFS from the tails, ignoring kernel edges.
    let dist = ends
        .iter()
        .map(|o| {
            let mut d = vec![usize::MAX; n];
            let mut queue: std::collections::VecDeque<usize> = o.iter().map(|&(p, _)| p).collect();
            for &p in &queue {
                d[p] = 0;
            }
            while let Some(y) = queue.pop_front() {
                for &(w, id) in g.in_neighbors(y) {
                    if d[w] == usize::MAX && !ids.contains(&id) {
                        d[w] = d[y] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect();
    let mut ctx = Ctx {
        g,
        ids,
        ends: ends.clone(),
        dist,
        failed: HashSet::new(),
        path: Vec::new(),
    };
    for &(p, q) in &ends[0] {
        ctx.path = vec![p, q];
        if ctx.go(q, 1 << p | 1 << q, 1) {
            return Some(ctx.path);
        }
    }
    None
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// An edge ordering and the simple path realizing it, if one exists.
pub type OrderWitness = (Vec<usize>, Option<Vec<usize>>);

/// For each ordering of the kernel, a witnessing simple path (or `None`).
pub fn kernel_witnesses(
    g: &StaticGraph,
    kernel: &EdgeKernel,
    limits: &Limits,
) -> Result<Vec<OrderWitness>> {
    guard("kernel size", limits.kernel_size, kernel.len())?;
    guard("kernel nodes", limits.kernel_nodes.min(128), g.node_count())?;
    let ids = kernel.edge_ids(g)?;
    Ok(permutations(ids.len())
        .into_iter()
        .map(|perm| {
            let ordered: Vec<usize> = perm.iter().map(|&i| ids[i]).collect();
            let path = kernel_path(g, &ordered);
            (perm, path)
        })
        .collect())
}

/// Whether every ordering of `kernel` is realized by a simple path.
pub fn is_edge_kernel(g: &StaticGraph, kernel: &EdgeKernel, limits: &Limits) -> Result<bool> {
    if kernel.is_empty() {
        return Ok(true);
    }
    guard("kernel size", limits.kernel_size, kernel.len())?;
    guard("kernel nodes", limits.kernel_nodes.min(128), g.node_count())?;
    let ids = kernel.edge_ids(g)?;
    Ok(permutations(ids.len()).into_iter().all(|perm| {
        let ordered: Vec<usize> = perm.iter().map(|&i| ids[i]).collect();
        kernel_path(g, &ordered).is_some()
    }))
}

/// Whether labels can be picked strictly increasing along `perm`.
pub fn realizable_in_order(labels: &[Vec<Label>], perm: &[usize]) -> bool {
    let mut t = 0;
    for &i in perm {
        let mut set = labels[i].clone();
        set.sort_unstable();
        match next_label(&set, t) {
            Some(l) => t = l,
            None => return false,
        }
    }
    true
}

/// Given `k` kernel edges with at most `k − 1` labels each, an ordering no
/// increasing selection can follow. Short sets are padded above every label.
///
/// Pick as the i-th edge the remaining one with the largest i-th smallest
/// label; the label used on the i-th edge is then at least that value, and
/// the last edge runs out.
pub fn adversarial_permutation(labels: &[Vec<Label>]) -> Result<Vec<usize>> {
    let k = labels.len();
    let mut padded: Vec<Vec<Label>> = Vec::with_capacity(k);
    let mut top = labels.iter().flatten().copied().max().unwrap_or(0);
    for (i, set) in labels.iter().enumerate() {
        let mut s = set.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() > k.saturating_sub(1) {
            return Err(Error::Invalid(format!(
                "kernel edge {i} has {} labels, at most {} allowed",
                s.len(),
                k.saturating_sub(1)
            )));
        }
        while s.len() < k.saturating_sub(1) {
            top += 1;
            s.push(top);
        }
        padded.push(s);
    }
    let mut left: Vec<usize> = (0..k).collect();
    let mut perm = Vec::with_capacity(k);
    #[allow(clippy::needless_range_loop)] // i indexes the inner label lists
    for i in 0..k {
        let pick = if i + 1 == k {
            0
        } else {
            // Lowest index among ties keeps the output deterministic.
            (0..left.len()).max_by_key(|&j| (padded[left[j]][i], std::cmp::Reverse(left[j]))).unwrap()
        };
        perm.push(left.remove(pick));
    }
    debug_assert!(!realizable_in_order(&padded, &perm));
    Ok(perm)
}

/// Complete digraph on `n` nodes with the matching `(0,1), (2,3), …`.
pub fn clique_kernel(n: usize) -> Result<(StaticGraph, EdgeKernel)> {
    if n < 2 {
        return Err(Error::Invalid(format!("clique kernel needs n >= 2, got {n}")));
    }
    let edges = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    Ok((complete_digraph(n), EdgeKernel::new(edges)))
}

/// Grid `2n² × 2n` with kernel edges `p_i q_i`, `p_i = (x_i, n)`,
/// `q_i = (x_i + 1, n)`, `x_i = (2i − 1)n`, for `i = 1..n`.
pub fn grid_kernel(n: usize) -> Result<(StaticGraph, EdgeKernel)> {
    if n == 0 {
        return Err(Error::Invalid("grid kernel needs n >= 1".into()));
    }
    let width = 2 * n * n;
    let id = |x: usize, y: usize| (y - 1) * width + (x - 1);
    let edges = (1..=n).map(|i| (id((2 * i - 1) * n, n), id((2 * i - 1) * n + 1, n))).collect();
    Ok((grid(width, 2 * n), EdgeKernel::new(edges)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{directed_path, directed_ring};
    use crate::labelings::{label_reach, label_ring_all_paths};
    use crate::temporal::{Labeling, TemporalGraph};

    const ALL: ConnectivityProperty = ConnectivityProperty::AllPaths;
    const REACH: ConnectivityProperty = ConnectivityProperty::Reach;

    fn labeled(g: StaticGraph, sets: Vec<Vec<Label>>) -> TemporalGraph {
        TemporalGraph::from_edge_labels(g, sets).unwrap()
    }

    #[test]
    fn path_preservation() {
        let tg = labeled(directed_path(4), vec![vec![1, 5], vec![2], vec![3, 4]]);
        assert!(preserves_path(&tg, &[0, 1, 2, 3]).unwrap());
        let tg2 = labeled(directed_path(3), vec![vec![2], vec![1]]);
        assert!(!preserves_path(&tg2, &[0, 1, 2]).unwrap());
        assert_eq!(preserves_path(&tg2, &[0, 2]), Err(Error::NotAPath));
        assert_eq!(preserves_path(&tg2, &[0, 1, 0]), Err(Error::NotAPath));
    }

    #[test]
    fn all_paths_examples() {
        let lim = Limits::default();
        let ring = directed_ring(4).unwrap();
        let good = TemporalGraph::new(ring.clone(), &label_ring_all_paths(4).unwrap()).unwrap();
        assert!(preserves_all_paths(&good, &lim).unwrap());
        let single = labeled(ring.clone(), vec![vec![1], vec![2], vec![3], vec![4]]);
        assert!(!preserves_all_paths(&single, &lim).unwrap());
        assert!(!preserves_maximal_paths(&single, &lim).unwrap());
        let empty = labeled(directed_path(2), vec![vec![]]);
        assert!(!preserves_all_paths(&empty, &lim).unwrap());
    }

    #[test]
    fn reach_examples() {
        let empty = labeled(directed_path(2), vec![vec![]]);
        assert!(!preserves_reach(&empty));
        let k3 = complete_digraph(3);
        let ones = labeled(k3.clone(), vec![vec![1]; k3.edge_count()]);
        assert!(preserves_reach(&ones));
        let g = StaticGraph::new(5, true, [(0, 1), (1, 2), (2, 0), (2, 3), (4, 3)]).unwrap();
        assert!(preserves_reach(&TemporalGraph::new(g.clone(), &label_reach(&g)).unwrap()));
    }

    #[test]
    fn reach_within_age() {
        let ring = directed_ring(4).unwrap();
        let diam = labeled(ring.clone(), vec![vec![1, 2, 3]; 4]);
        assert!(preserves_reach_within_age(&diam, 3));
        assert!(!preserves_reach_within_age(&diam, 2));
        let holed = labeled(ring, vec![vec![1, 3], vec![1, 2, 3], vec![1, 2, 3], vec![1, 2, 3]]);
        assert!(!preserves_reach_within_age(&holed, 3));
    }

    #[test]
    fn temporality_oracle() {
        let lim = Limits::default();
        assert_eq!(oracle_temporality(&directed_ring(3).unwrap(), ALL, None, &lim), Ok(Some(2)));
        let diamond = StaticGraph::new(4, true, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(oracle_temporality(&diamond, ALL, None, &lim), Ok(Some(1)));
        let ring4 = directed_ring(4).unwrap();
        assert_eq!(oracle_temporality(&ring4, ALL, Some(3), &lim), Ok(Some(3)));
        assert_eq!(oracle_temporality(&ring4, ALL, Some(2), &lim), Ok(None));
        let big = complete_digraph(3);
        assert!(oracle_temporality(&big, ALL, None, &lim).unwrap_err().is_guard());
    }

    #[test]
    fn cost_oracle() {
        let lim = Limits::default();
        assert_eq!(oracle_temporal_cost(&directed_path(2), REACH, None, &lim), Ok(Some(1)));
        // Labels 1 then 2 on the chain serve all three pairs.
        assert_eq!(oracle_temporal_cost(&directed_path(3), REACH, Some(2), &lim), Ok(Some(2)));
        let ring = directed_ring(3).unwrap();
        let exact = oracle_temporal_cost(&ring, REACH, None, &lim).unwrap().unwrap();
        assert!(exact <= label_reach(&ring).cost());
        assert_eq!(exact, 4);
    }

    #[test]
    fn kernels() {
        let lim = Limits::default();
        let line = directed_path(3);
        assert!(is_edge_kernel(&line, &EdgeKernel::new(vec![(0, 1)]), &lim).unwrap());
        assert!(!is_edge_kernel(&line, &EdgeKernel::new(vec![(0, 1), (1, 2)]), &lim).unwrap());
        let (k4, m) = clique_kernel(4).unwrap();
        assert_eq!(m.len(), 2);
        assert!(is_edge_kernel(&k4, &m, &lim).unwrap());
        let (k6, m) = clique_kernel(6).unwrap();
        assert!(is_edge_kernel(&k6, &m, &lim).unwrap());
        assert_eq!(clique_kernel(2).unwrap().1.len(), 1);
        assert!(clique_kernel(1).is_err());
    }

    #[test]
    fn grid_kernels() {
        let (g1, k1) = grid_kernel(1).unwrap();
        assert_eq!((g1.node_count(), k1.edges.clone()), (4, vec![(0, 1)]));
        let (g2, k2) = grid_kernel(2).unwrap();
        assert_eq!(g2.node_count(), 32);
        assert!(is_edge_kernel(&g2, &k2, &Limits::default()).unwrap_err().is_guard());
        let raised = Limits::default().with_node_limit(128);
        assert!(is_edge_kernel(&g2, &k2, &raised).unwrap());
        for (perm, path) in kernel_witnesses(&g2, &k2, &raised).unwrap() {
            let path = path.unwrap();
            let mut seen = path.clone();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), path.len(), "{perm:?}");
        }
    }

    #[test]
    fn adversary() {
        assert_eq!(adversarial_permutation(&[vec![1], vec![2]]).unwrap(), vec![1, 0]);
        let same = vec![vec![3, 4]; 3];
        let p = adversarial_permutation(&same).unwrap();
        assert!(!realizable_in_order(&same, &p));
        assert!(adversarial_permutation(&[vec![1, 2], vec![3]]).is_err());
        // Padding short sets keeps the ordering unrealizable.
        let short = vec![vec![5], vec![], vec![1, 2]];
        let p = adversarial_permutation(&short).unwrap();
        assert!(!realizable_in_order(&short, &p));
    }

    #[test]
    fn maximal_paths_agree_on_ring() {
        let lim = Limits::default();
        let ring = directed_ring(4).unwrap();
        let mut l = Labeling::new();
        for i in 0..4 {
            l.insert(i, (i + 1) % 4, [1, 2, 3]);
        }
        let tg = TemporalGraph::new(ring, &l).unwrap();
        assert!(preserves_all_paths(&tg, &lim).unwrap());
        assert!(preserves_maximal_paths(&tg, &lim).unwrap());
    }
}
