//! Foremost, shortest-weighted and fastest journeys, plus exhaustive enumeration.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{guard, Error, Result};
use crate::graph::Weight;
use crate::limits::Limits;
use crate::temporal::{Journey, Label, TemporalGraph, TimeEdge};

/// Earliest arrivals from a source, with predecessor links.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForemostTable {
    source: usize,
    t_start: Label,
    arrival: Vec<Option<Label>>,
    pred: Vec<Option<TimeEdge>>,
}

impl ForemostTable {
    pub fn source(&self) -> usize {
        self.source
    }

    pub fn t_start(&self) -> Label {
        self.t_start
    }

    /// a[v]; `None` means ∞. The source reports `t_start − 1`.
    pub fn arrival(&self, v: usize) -> Option<Label> {
        self.arrival[v]
    }

    pub fn arrivals(&self) -> &[Option<Label>] {
        &self.arrival
    }

    /// p[v], the node preceding `v` on its foremost journey.
    pub fn predecessor(&self, v: usize) -> Option<usize> {
        self.pred[v].map(|e| e.from)
    }

    pub fn reached(&self, v: usize) -> bool {
        self.arrival[v].is_some()
    }

    /// Follow predecessor links back to the source.
    pub fn journey_to(&self, v: usize) -> Option<Journey> {
        self.arrival[v]?;
        if v == self.source {
            return Some(Journey::empty(v));
        }
        let mut steps = Vec::new();
        let mut at = v;
        while let Some(e) = self.pred[at] {
            steps.push(e);
            at = e.from;
        }
        steps.reverse();
        Some(Journey::from_steps(steps))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ForemostOptions {
    /// Among equally early predecessors, prefer the one whose journey left
    /// the source latest, which shortens durations.
    pub prefer_fastest: bool,
}

/// Foremost journeys from `s` departing no earlier than `t_start`.
pub fn foremost_journeys(tg: &TemporalGraph, s: usize, t_start: Label) -> Result<ForemostTable> {
    foremost_journeys_with(tg, s, t_start, ForemostOptions::default())
}

pub fn foremost_journeys_with(
    tg: &TemporalGraph,
    s: usize,
    t_start: Label,
    opts: ForemostOptions,
) -> Result<ForemostTable> {
    let n = tg.node_count();
    if s >= n {
        return Err(Error::UnknownNode { node: s, n });
    }
    let (min, max) = tg
        .min_label()
        .zip(tg.max_label())
        .ok_or(Error::EmptyLabeling)?;
    if t_start < min || t_start > max {
        return Err(Error::StartOutOfRange {
            t: t_start,
            min,
            max,
        });
    }
    Ok(foremost_over(n, tg.time_edges(), s, t_start, opts))
}

/// The sweep itself, over any label-sorted list of time-edges.
pub(crate) fn foremost_over(
    n: usize,
    time_edges: &[TimeEdge],
    s: usize,
    t_start: Label,
    opts: ForemostOptions,
) -> ForemostTable {
    let mut arrival = vec![None; n];
    let mut pred: Vec<Option<TimeEdge>> = vec![None; n];
    let mut departed = vec![0; n];
    arrival[s] = Some(t_start - 1);
    let begin = time_edges.partition_point(|e| e.label < t_start);
    let mut fresh: Vec<(usize, TimeEdge, Label)> = Vec::new();
    for bucket in time_edges[begin..].chunk_by(|a, b| a.label == b.label) {
        let t = bucket[0].label;
        fresh.clear();
        // Buckets are sorted by tail, so the first hit per head is the lowest id.
        for &e in bucket {
            let ready = arrival[e.from].is_some_and(|a| a < t);
            if !ready || arrival[e.to].is_some() {
                continue;
            }
            let dep = if e.from == s { t } else { departed[e.from] };
            match fresh.iter_mut().find(|(v, _, _)| *v == e.to) {
                None => fresh.push((e.to, e, dep)),
                Some(slot) if opts.prefer_fastest && dep > slot.2 => *slot = (e.to, e, dep),
                Some(_) => {}
            }
        }
        for &(v, e, dep) in &fresh {
            arrival[v] = Some(t);
            pred[v] = Some(e);
            departed[v] = dep;
        }
    }
    ForemostTable {
        source: s,
        t_start,
        arrival,
        pred,
    }
}

/// A foremost journey from `s` to `v`, or `None` if `v` is never reached.
pub fn foremost_journey(
    tg: &TemporalGraph,
    s: usize,
    v: usize,
    t_start: Label,
) -> Result<Option<Journey>> {
    check_node(tg, v)?;
    Ok(foremost_journeys(tg, s, t_start)?.journey_to(v))
}

/// Minimum-weight journey between `s` and `t` in an undirected weighted
/// temporal graph.
///
/// Shortest path over the graph whose vertices are time-edges `(e, l)` plus
/// two terminals (a virtual edge into `s` at time 0 and one out of `t` after
/// every label). Time-edges of distinct edges sharing an endpoint are joined
/// when their labels increase; the arc costs the weight of its head edge.
pub fn shortest_weighted_journey(tg: &TemporalGraph, s: usize, t: usize) -> Result<Option<Journey>> {
    let g = tg.graph();
    if g.is_directed() {
        return Err(Error::NeedsUndirected);
    }
    let weights = g.weights().ok_or(Error::Unweighted)?;
    check_node(tg, s)?;
    check_node(tg, t)?;
    if s == t {
        return Ok(Some(Journey::empty(s)));
    }
    let Some(top) = tg.max_label() else {
        return Ok(None);
    };

    // H-vertex 0 is the source terminal, 1 the sink terminal.
    struct HVertex {
        ends: [usize; 2],
        edge: usize,
        label: Label,
        weight: Weight,
    }
    let zero = Weight::from_integer(0);
    let none = usize::MAX;
    let mut hv = vec![
        HVertex { ends: [s, s], edge: none, label: 0, weight: zero },
        HVertex { ends: [t, t], edge: none - 1, label: top + 1, weight: zero },
    ];
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.node_count()];
    incident[s].push(0);
    incident[t].push(1);
    for (id, set) in tg.edge_labels().iter().enumerate() {
        let (u, v) = g.edge(id);
        for &l in set {
            incident[u].push(hv.len());
            incident[v].push(hv.len());
            hv.push(HVertex { ends: [u, v], edge: id, label: l, weight: weights[id] });
        }
    }
    for list in &mut incident {
        list.sort_by_key(|&x| hv[x].label);
    }

    let mut dist: Vec<Option<Weight>> = vec![None; hv.len()];
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; hv.len()];
    let mut done = vec![false; hv.len()];
    let mut heap = BinaryHeap::from([Reverse((zero, 0usize))]);
    dist[0] = Some(zero);
    while let Some(Reverse((d, a))) = heap.pop() {
        if done[a] {
            continue;
        }
        done[a] = true;
        if a == 1 {
            break;
        }
        let ends = if hv[a].ends[0] == hv[a].ends[1] { &hv[a].ends[..1] } else { &hv[a].ends[..] };
        for &pivot in ends {
            for &b in &incident[pivot] {
                if hv[b].label <= hv[a].label || hv[b].edge == hv[a].edge || done[b] {
                    continue;
                }
                let nd = d + hv[b].weight;
                if dist[b].is_none_or(|old| nd < old) {
                    dist[b] = Some(nd);
                    pred[b] = Some((a, pivot));
                    heap.push(Reverse((nd, b)));
                }
            }
        }
    }
    if dist[1].is_none() {
        return Ok(None);
    }

    // Pivots p_0 = s, …, p_k = t; the H-vertex between p_{i−1} and p_i is step i.
    let mut chain = Vec::new();
    let mut at = 1;
    while let Some((prev, pivot)) = pred[at] {
        chain.push((prev, pivot));
        at = prev;
    }
    chain.reverse();
    let mut steps = Vec::new();
    for w in chain.windows(2) {
        let (from, to) = (w[0].1, w[1].1);
        let x = &hv[w[1].0];
        assert!(
            x.ends.contains(&from) && x.ends.contains(&to) && from != to,
            "shortest H-path must map to a walk"
        );
        steps.push(TimeEdge::new(from, to, x.label));
    }
    let journey = Journey::from_steps(steps);
    assert!(tg.is_journey(journey.steps()), "shortest H-path must map to a simple journey");
    Ok(Some(journey))
}

/// A journey minimizing a(J) − d(J) + 1. Runs the foremost sweep once per
/// distinct departure label at `s`.
pub fn fastest_journey(tg: &TemporalGraph, s: usize, v: usize) -> Result<Option<Journey>> {
    check_node(tg, s)?;
    check_node(tg, v)?;
    if s == v {
        return Ok(Some(Journey::empty(s)));
    }
    let mut departures: Vec<Label> = tg
        .time_edges()
        .iter()
        .filter(|e| e.from == s)
        .map(|e| e.label)
        .collect();
    departures.dedup();
    let mut best: Option<Journey> = None;
    for d in departures {
        let table = foremost_over(tg.node_count(), tg.time_edges(), s, d, ForemostOptions::default());
        if let Some(j) = table.journey_to(v) {
            if best.as_ref().is_none_or(|b| j.duration() < b.duration()) {
                best = Some(j);
            }
        }
    }
    Ok(best)
}

/// Every `(s, v)`-journey, by depth-first search over time-edges.
pub fn enumerate_journeys(
    tg: &TemporalGraph,
    s: usize,
    v: usize,
    limits: &Limits,
) -> Result<Vec<Journey>> {
    check_node(tg, s)?;
    check_node(tg, v)?;
    guard("journey nodes", limits.journey_nodes, tg.node_count())?;
    guard("journey time-edges", limits.journey_time_edges, tg.cost())?;
    let mut out_edges: Vec<Vec<TimeEdge>> = vec![Vec::new(); tg.node_count()];
    for &e in tg.time_edges() {
        out_edges[e.from].push(e);
    }
    let mut found = Vec::new();
    if s == v {
        return Ok(found);
    }
    let mut on_path = vec![false; tg.node_count()];
    on_path[s] = true;
    let mut steps = Vec::new();
    extend(&out_edges, v, s, 0, &mut on_path, &mut steps, &mut found);
    return Ok(found);

    fn extend(
        out_edges: &[Vec<TimeEdge>],
        target: usize,
        at: usize,
        after: Label,
        on_path: &mut [bool],
        steps: &mut Vec<TimeEdge>,
        found: &mut Vec<Journey>,
    ) {
        let list = &out_edges[at];
        let begin = list.partition_point(|e| e.label <= after);
        for &e in &list[begin..] {
            if on_path[e.to] {
                continue;
            }
            steps.push(e);
            if e.to == target {
                found.push(Journey::from_steps(steps.clone()));
            } else {
                on_path[e.to] = true;
                extend(out_edges, target, e.to, e.label, on_path, steps, found);
                on_path[e.to] = false;
            }
            steps.pop();
        }
    }
}

fn check_node(tg: &TemporalGraph, u: usize) -> Result<()> {
    let n = tg.node_count();
    if u >= n {
        return Err(Error::UnknownNode { node: u, n });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{directed_path, StaticGraph};
    use crate::temporal::ring_with_two_labels;

    fn path_tg(labels: Vec<Vec<Label>>) -> TemporalGraph {
        TemporalGraph::from_edge_labels(directed_path(labels.len() + 1), labels).unwrap()
    }

    #[test]
    fn single_edge() {
        let tg = path_tg(vec![vec![3]]);
        let t = foremost_journeys(&tg, 0, 3).unwrap();
        assert_eq!(t.arrival(1), Some(3));
        assert_eq!(t.arrival(0), Some(2));
        let j = foremost_journey(&tg, 0, 1, 3).unwrap().unwrap();
        assert_eq!((j.hops(), j.arrival()), (1, Some(3)));
        assert_eq!(foremost_journey(&tg, 1, 0, 3).unwrap(), None);
    }

    #[test]
    fn strictness() {
        let tg = path_tg(vec![vec![1], vec![1]]);
        let t = foremost_journeys(&tg, 0, 1).unwrap();
        assert_eq!(t.arrival(1), Some(1));
        assert_eq!(t.arrival(2), None);
    }

    #[test]
    fn start_must_lie_in_label_range() {
        let tg = path_tg(vec![vec![3]]);
        assert_eq!(
            foremost_journeys(&tg, 0, 1),
            Err(Error::StartOutOfRange { t: 1, min: 3, max: 3 })
        );
    }

    #[test]
    fn ties_go_to_lowest_predecessor() {
        // 0 → 1, 0 → 2 at 1; both 1 → 3 and 2 → 3 at 2.
        let g = StaticGraph::new(4, true, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let tg = TemporalGraph::from_edge_labels(g, vec![vec![1], vec![1], vec![2], vec![2]]).unwrap();
        assert_eq!(foremost_journeys(&tg, 0, 1).unwrap().predecessor(3), Some(1));
    }

    #[test]
    fn prefer_fastest_picks_latest_departure() {
        // 0 → 1 at 1, 0 → 2 at 3; 1 → 3 and 2 → 3 both at 4.
        let g = StaticGraph::new(4, true, [(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let tg = TemporalGraph::from_edge_labels(g, vec![vec![1], vec![3], vec![4], vec![4]]).unwrap();
        let plain = foremost_journeys(&tg, 0, 1).unwrap();
        let fast = foremost_journeys_with(&tg, 0, 1, ForemostOptions { prefer_fastest: true }).unwrap();
        assert_eq!(plain.predecessor(3), Some(1));
        assert_eq!(fast.predecessor(3), Some(2));
        assert_eq!(fast.journey_to(3).unwrap().duration(), Some(2));
    }

    #[test]
    fn ring_antipode() {
        // From node 1 at time 2, node 3 is two hops away: labels 2 then 3.
        let tg = ring_with_two_labels(4).unwrap();
        let j = foremost_journey(&tg, 1, 3, 2).unwrap().unwrap();
        assert_eq!(j.arrival(), Some(3));
        let oracle = enumerate_journeys(&tg, 1, 3, &Limits::default())
            .unwrap()
            .into_iter()
            .filter(|j| j.departure() >= Some(2))
            .filter_map(|j| j.arrival())
            .min();
        assert_eq!(oracle, Some(3));
    }

    #[test]
    fn enumeration_counts() {
        let lim = Limits::default();
        assert_eq!(enumerate_journeys(&path_tg(vec![vec![3]]), 0, 1, &lim).unwrap().len(), 1);
        assert_eq!(enumerate_journeys(&path_tg(vec![vec![3, 5]]), 0, 1, &lim).unwrap().len(), 2);
        // Two hops with label pairs (1,2), (1,5), (4,5).
        let ring = ring_with_two_labels(3).unwrap();
        assert_eq!(enumerate_journeys(&ring, 0, 2, &lim).unwrap().len(), 3);
        let big = path_tg(vec![vec![1]; 21]);
        assert!(enumerate_journeys(&big, 0, 1, &lim).unwrap_err().is_guard());
    }

    fn w(x: i64) -> Weight {
        Weight::from_integer(x)
    }

    #[test]
    fn shortest_triangle() {
        let (s, a, t) = (0, 1, 2);
        let g = StaticGraph::weighted(3, false, [((s, a), w(1)), ((a, t), w(1)), ((s, t), w(3))]).unwrap();
        let tg = TemporalGraph::from_edge_labels(g, vec![vec![1], vec![5], vec![2]]).unwrap();
        let j = shortest_weighted_journey(&tg, s, t).unwrap().unwrap();
        assert_eq!(j.nodes(), vec![s, a, t]);
        assert_eq!(j.weight(&tg), Some(w(2)));
    }

    #[test]
    fn shortest_edge_cases() {
        let g = StaticGraph::weighted(3, false, [((0, 1), w(7))]).unwrap();
        let tg = TemporalGraph::from_edge_labels(g, vec![vec![1]]).unwrap();
        let j = shortest_weighted_journey(&tg, 0, 1).unwrap().unwrap();
        assert_eq!(j.weight(&tg), Some(w(7)));
        assert_eq!(shortest_weighted_journey(&tg, 0, 2).unwrap(), None);
        let directed = path_tg(vec![vec![1]]);
        assert_eq!(shortest_weighted_journey(&directed, 0, 1), Err(Error::NeedsUndirected));
    }

    #[test]
    fn fastest_examples() {
        assert_eq!(fastest_journey(&path_tg(vec![vec![9]]), 0, 1).unwrap().unwrap().duration(), Some(1));
        let tg = path_tg(vec![vec![1, 8], vec![2, 9]]);
        assert_eq!(fastest_journey(&tg, 0, 2).unwrap().unwrap().duration(), Some(2));
        assert_eq!(fastest_journey(&tg, 2, 0).unwrap(), None);
        // Foremost departs at 1 and arrives at 5; fastest leaves at 4.
        let tg = path_tg(vec![vec![1, 4], vec![5]]);
        assert_eq!(fastest_journey(&tg, 0, 2).unwrap().unwrap().duration(), Some(2));
    }
}
