//! Labelings, temporal graphs, time-edges and journeys.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{StaticGraph, Weight};

/// A discrete availability time; always ≥ 1 in a valid labeling.
pub type Label = u32;

/// Map from edge to a sorted, duplicate-free set of labels.
///
/// Keys are plain node pairs. For undirected host graphs either orientation
/// may be used; [`TemporalGraph::new`] merges them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Labeling {
    sets: BTreeMap<(usize, usize), Vec<Label>>,
}

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    /// Add labels to edge `(u, v)`, merging with any already present.
    pub fn insert(&mut self, u: usize, v: usize, labels: impl IntoIterator<Item = Label>) {
        let set = self.sets.entry((u, v)).or_default();
        set.extend(labels);
        set.sort_unstable();
        set.dedup();
    }

    /// Labels on `(u, v)` exactly as keyed; empty if the key is absent.
    pub fn get(&self, u: usize, v: usize) -> &[Label] {
        self.sets.get(&(u, v)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &[Label])> {
        self.sets.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// |λ| = Σ_e |λ(e)|.
    pub fn cost(&self) -> usize {
        self.sets.values().map(Vec::len).sum()
    }

    /// max_e |λ(e)|.
    pub fn temporality(&self) -> usize {
        self.sets.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_label(&self) -> Option<Label> {
        self.sets.values().filter_map(|s| s.first()).min().copied()
    }

    pub fn max_label(&self) -> Option<Label> {
        self.sets.values().filter_map(|s| s.last()).max().copied()
    }

    /// α(λ) = λ_max − λ_min + 1; `None` when no label is assigned.
    pub fn age(&self) -> Option<u32> {
        Some(self.max_label()? - self.min_label()? + 1)
    }
}

/// One directed availability: traverse `from → to` at time `label`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimeEdge {
    pub from: usize,
    pub to: usize,
    pub label: Label,
}

impl TimeEdge {
    pub fn new(from: usize, to: usize, label: Label) -> Self {
        TimeEdge { from, to, label }
    }
}

impl fmt::Display for TimeEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})@{}", self.from, self.to, self.label)
    }
}

/// A static graph together with a validated labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalGraph {
    graph: StaticGraph,
    labels: Vec<Vec<Label>>,
    /// Directed availabilities sorted by `(label, from, to)`.
    time_edges: Vec<TimeEdge>,
}

impl TemporalGraph {
    pub fn new(graph: StaticGraph, labeling: &Labeling) -> Result<Self> {
        let mut labels = vec![Vec::new(); graph.edge_count()];
        for ((u, v), set) in labeling.iter() {
            let id = graph.edge_id(u, v).ok_or(Error::UnknownEdge(u, v))?;
            labels[id].extend_from_slice(set);
        }
        Self::from_edge_labels(graph, labels)
    }

    /// Build from label sets indexed by edge id.
    pub fn from_edge_labels(graph: StaticGraph, mut labels: Vec<Vec<Label>>) -> Result<Self> {
        if labels.len() != graph.edge_count() {
            return Err(Error::Invalid(format!(
                "{} label sets for {} edges",
                labels.len(),
                graph.edge_count()
            )));
        }
        for (id, set) in labels.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if set.first() == Some(&0) {
                let (u, v) = graph.edge(id);
                return Err(Error::ZeroLabel(u, v));
            }
        }
        let mut time_edges = Vec::new();
        for (id, set) in labels.iter().enumerate() {
            let (u, v) = graph.edge(id);
            for &l in set {
                time_edges.push(TimeEdge::new(u, v, l));
                if !graph.is_directed() {
                    time_edges.push(TimeEdge::new(v, u, l));
                }
            }
        }
        time_edges.sort_unstable_by_key(|e| (e.label, e.from, e.to));
        Ok(TemporalGraph {
            graph,
            labels,
            time_edges,
        })
    }

    pub fn graph(&self) -> &StaticGraph {
        &self.graph
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn is_directed(&self) -> bool {
        self.graph.is_directed()
    }

    /// Labels of edge `id`.
    pub fn labels(&self, id: usize) -> &[Label] {
        &self.labels[id]
    }

    pub fn edge_labels(&self) -> &[Vec<Label>] {
        &self.labels
    }

    /// Labels on the edge joining `u` to `v`, if it exists.
    pub fn labels_between(&self, u: usize, v: usize) -> Option<&[Label]> {
        self.graph.edge_id(u, v).map(|id| self.labels[id].as_slice())
    }

    /// The labeling keyed by the graph's canonical edge pairs.
    pub fn labeling(&self) -> Labeling {
        let mut l = Labeling::new();
        for (id, set) in self.labels.iter().enumerate() {
            if !set.is_empty() {
                let (u, v) = self.graph.edge(id);
                l.insert(u, v, set.iter().copied());
            }
        }
        l
    }

    /// Directed availabilities sorted by `(label, from, to)`; undirected edges
    /// contribute one per direction.
    pub fn time_edges(&self) -> &[TimeEdge] {
        &self.time_edges
    }

    /// m_t = |λ|.
    pub fn cost(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn temporality(&self) -> usize {
        self.labels.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_label(&self) -> Option<Label> {
        self.time_edges.first().map(|e| e.label)
    }

    pub fn max_label(&self) -> Option<Label> {
        self.time_edges.last().map(|e| e.label)
    }

    pub fn age(&self) -> Option<u32> {
        Some(self.max_label()? - self.min_label()? + 1)
    }

    /// The static graph (V, E(r)) of edges available at time `r`.
    pub fn instance_at(&self, r: Label) -> StaticGraph {
        self.graph
            .subgraph(|id| self.labels[id].binary_search(&r).is_ok())
    }

    /// Same graph with labels transformed edge by edge.
    pub fn map_labels(&self, mut f: impl FnMut(usize, &[Label]) -> Vec<Label>) -> Result<Self> {
        let labels = (0..self.labels.len()).map(|id| f(id, &self.labels[id])).collect();
        Self::from_edge_labels(self.graph.clone(), labels)
    }

    /// True iff `steps` is a journey: consecutive, simple, available, strictly increasing.
    pub fn is_journey(&self, steps: &[TimeEdge]) -> bool {
        let n = self.node_count();
        let Some(first) = steps.first() else {
            return true;
        };
        if first.from >= n {
            return false;
        }
        let mut seen = vec![false; n];
        seen[first.from] = true;
        let mut at = first.from;
        let mut last: Option<Label> = None;
        for e in steps {
            if e.from != at || e.to >= n || seen[e.to] || last.is_some_and(|l| e.label <= l) {
                return false;
            }
            match self.labels_between(e.from, e.to) {
                Some(set) if set.binary_search(&e.label).is_ok() => {}
                _ => return false,
            }
            seen[e.to] = true;
            at = e.to;
            last = Some(e.label);
        }
        true
    }
}

/// A simple path with strictly increasing labels, starting at `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Journey {
    source: usize,
    steps: Vec<TimeEdge>,
}

impl Journey {
    /// The 0-hop journey that stays at `source`.
    pub fn empty(source: usize) -> Self {
        Journey {
            source,
            steps: Vec::new(),
        }
    }

    /// Wrap a non-empty step sequence; the caller guarantees it is consecutive.
    pub fn from_steps(steps: Vec<TimeEdge>) -> Self {
        Journey {
            source: steps[0].from,
            steps,
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.steps.last().map_or(self.source, |e| e.to)
    }

    pub fn steps(&self) -> &[TimeEdge] {
        &self.steps
    }

    pub fn hops(&self) -> usize {
        self.steps.len()
    }

    pub fn departure(&self) -> Option<Label> {
        self.steps.first().map(|e| e.label)
    }

    pub fn arrival(&self) -> Option<Label> {
        self.steps.last().map(|e| e.label)
    }

    /// a(J) − d(J) + 1; `None` for the 0-hop journey.
    pub fn duration(&self) -> Option<u32> {
        Some(self.arrival()? - self.departure()? + 1)
    }

    /// Visited nodes in order, starting with the source.
    pub fn nodes(&self) -> Vec<usize> {
        std::iter::once(self.source)
            .chain(self.steps.iter().map(|e| e.to))
            .collect()
    }

    /// Total edge weight; `None` if the graph is unweighted.
    pub fn weight(&self, tg: &TemporalGraph) -> Option<Weight> {
        let g = tg.graph();
        self.steps.iter().try_fold(Weight::from_integer(0), |acc, e| {
            Some(acc + g.weight(g.edge_id(e.from, e.to)?)?)
        })
    }

    pub fn is_valid(&self, tg: &TemporalGraph) -> bool {
        self.source < tg.node_count() && tg.is_journey(&self.steps)
    }

    /// Drop every loop of a time-respecting walk, leaving a simple journey
    /// whose steps are a subsequence of the walk's.
    pub fn shortcut(source: usize, walk: &[TimeEdge]) -> Self {
        let mut nodes = vec![source];
        let mut steps: Vec<TimeEdge> = Vec::new();
        for &e in walk {
            if let Some(p) = nodes.iter().position(|&x| x == e.to) {
                nodes.truncate(p + 1);
                steps.truncate(p);
            } else {
                nodes.push(e.to);
                steps.push(e);
            }
        }
        Journey { source, steps }
    }
}

impl fmt::Display for Journey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "({})", self.source);
        }
        for (i, e) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Directed ring labeled `λ(e_i) = {i, n+i}`, a common fixture.
pub fn ring_with_two_labels(n: usize) -> Result<TemporalGraph> {
    let g = crate::graph::directed_ring(n)?;
    let labels = (1..=n as Label).map(|i| vec![i, n as Label + i]).collect();
    TemporalGraph::from_edge_labels(g, labels)
}
