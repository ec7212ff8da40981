//! Structural queries on static graphs: distances, reachability, components.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::error::{guard, Error, Result};
use crate::graph::StaticGraph;
use crate::limits::Limits;

/// Hop distances from `s`; `None` for unreachable nodes.
pub fn bfs_distances(g: &StaticGraph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &(v, _) in g.out_neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Longest shortest-path distance over ordered reachable pairs; 0 without edges.
pub fn diameter(g: &StaticGraph) -> usize {
    (0..g.node_count())
        .flat_map(|s| bfs_distances(g, s))
        .flatten()
        .max()
        .unwrap_or(0)
}

/// Number of nodes other than `u` reachable from `u`.
pub fn reach_count_from(g: &StaticGraph, u: usize) -> usize {
    bfs_distances(g, u).iter().filter(|d| d.is_some()).count() - 1
}

/// Total number of ordered reachable pairs `(u, v)` with `v ≠ u`.
pub fn reachability_count(g: &StaticGraph) -> usize {
    (0..g.node_count()).map(|u| reach_count_from(g, u)).sum()
}

pub fn is_weakly_connected(g: &StaticGraph) -> bool {
    let n = g.node_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &(v, _) in g.out_neighbors(u).iter().chain(g.in_neighbors(u)) {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|x| x)
}

pub fn is_strongly_connected(g: &StaticGraph) -> bool {
    strongly_connected_components(g).len() <= 1
}

/// Strongly connected components, each sorted, listed in topological order of
/// the condensation (every arc between components goes forward in the list).
pub fn strongly_connected_components(g: &StaticGraph) -> Vec<Vec<usize>> {
    struct Tarjan<'a> {
        g: &'a StaticGraph,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        next: usize,
        out: Vec<Vec<usize>>,
    }
    impl Tarjan<'_> {
        fn visit(&mut self, root: usize) {
            // Explicit call stack of (node, next neighbor position).
            let mut calls = vec![(root, 0usize)];
            self.open(root);
            while let Some(&mut (u, ref mut pos)) = calls.last_mut() {
                if let Some(&(v, _)) = self.g.out_neighbors(u).get(*pos) {
                    *pos += 1;
                    match self.index[v] {
                        None => {
                            self.open(v);
                            calls.push((v, 0));
                        }
                        Some(iv) if self.on_stack[v] => self.low[u] = self.low[u].min(iv),
                        Some(_) => {}
                    }
                    continue;
                }
                calls.pop();
                if let Some(&(parent, _)) = calls.last() {
                    self.low[parent] = self.low[parent].min(self.low[u]);
                }
                if self.low[u] == self.index[u].unwrap() {
                    let mut comp = Vec::new();
                    loop {
                        let w = self.stack.pop().unwrap();
                        self.on_stack[w] = false;
                        comp.push(w);
                        if w == u {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    self.out.push(comp);
                }
            }
        }
        fn open(&mut self, u: usize) {
            self.index[u] = Some(self.next);
            self.low[u] = self.next;
            self.next += 1;
            self.stack.push(u);
            self.on_stack[u] = true;
        }
    }
    let n = g.node_count();
    let mut t = Tarjan {
        g,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        next: 0,
        out: Vec::new(),
    };
    for u in 0..n {
        if t.index[u].is_none() {
            t.visit(u);
        }
    }
    // Tarjan emits sinks first.
    t.out.reverse();
    t.out
}

/// Topological order of a directed acyclic graph, lowest id first among ties.
pub fn topological_order(g: &StaticGraph) -> Result<Vec<usize>> {
    if !g.is_directed() && g.edge_count() > 0 {
        return Err(Error::NeedsDirected);
    }
    let n = g.node_count();
    let mut indeg: Vec<usize> = (0..n).map(|u| g.in_neighbors(u).len()).collect();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&u| indeg[u] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &(v, _) in g.out_neighbors(u) {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    if order.len() < n {
        return Err(Error::Cyclic);
    }
    Ok(order)
}

/// Visit every simple path with at least one edge, as a node sequence.
/// `visit` returns `false` to prune extensions of the current path.
pub fn for_each_simple_path(g: &StaticGraph, mut visit: impl FnMut(&[usize]) -> bool) {
    fn extend(
        g: &StaticGraph,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) {
        let u = *path.last().unwrap();
        for &(v, _) in g.out_neighbors(u) {
            if on_path[v] {
                continue;
            }
            path.push(v);
            on_path[v] = true;
            if visit(path) {
                extend(g, path, on_path, visit);
            }
            on_path[v] = false;
            path.pop();
        }
    }
    let mut on_path = vec![false; g.node_count()];
    for s in 0..g.node_count() {
        let mut path = vec![s];
        on_path[s] = true;
        extend(g, &mut path, &mut on_path, &mut visit);
        on_path[s] = false;
    }
}

/// p(G): the number of edges on a longest simple path.
pub fn longest_path_len(g: &StaticGraph, limits: &Limits) -> Result<usize> {
    guard("simple-path nodes", limits.path_nodes, g.node_count())?;
    let mut best = 0;
    for_each_simple_path(g, |p| {
        best = best.max(p.len() - 1);
        true
    });
    Ok(best)
}

/// True when no directed cycle has length three or more. An undirected edge
/// counts as a 2-cycle.
pub fn cycles_at_most_two(g: &StaticGraph) -> bool {
    let d = g.to_directed();
    strongly_connected_components(&d).iter().all(|comp| {
        let inside = |x: usize| comp.binary_search(&x).is_ok();
        let mut undirected_edges = 0;
        for &u in comp {
            for &(v, _) in d.out_neighbors(u) {
                if inside(v) {
                    if d.edge_id(v, u).is_none() {
                        return false;
                    }
                    if u < v {
                        undirected_edges += 1;
                    }
                }
            }
        }
        // Strongly connected and bidirected: a tree exactly when |E| = |V| − 1.
        undirected_edges + 1 == comp.len()
    })
}
