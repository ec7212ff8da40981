//! Constructive labelings for the all-paths and reach properties.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{directed_ring, StaticGraph};
use crate::limits::Limits;
use crate::structure::{
    diameter, is_strongly_connected, is_weakly_connected, longest_path_len,
    strongly_connected_components, topological_order,
};
use crate::temporal::{Label, Labeling};

/// Which connectivity a labeling must keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConnectivityProperty {
    /// Every simple path admits increasing labels.
    AllPaths,
    /// Every reachable ordered pair is joined by some journey.
    Reach,
}

impl FromStr for ConnectivityProperty {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all-paths" => Ok(Self::AllPaths),
            "reach" => Ok(Self::Reach),
            _ => Err(Error::Invalid(format!("unknown property {s:?}"))),
        }
    }
}

impl fmt::Display for ConnectivityProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AllPaths => "all-paths",
            Self::Reach => "reach",
        })
    }
}

fn keyed(g: &StaticGraph, per_edge: &[Vec<Label>]) -> Labeling {
    let mut out = Labeling::new();
    for (id, set) in per_edge.iter().enumerate() {
        if !set.is_empty() {
            let (u, v) = g.edge(id);
            out.insert(u, v, set.iter().copied());
        }
    }
    out
}

/// Every edge gets `{1, …, p(G)}`.
pub fn label_all_paths_trivial(g: &StaticGraph, limits: &Limits) -> Result<Labeling> {
    if g.edge_count() == 0 {
        return Err(Error::Invalid("graph has no edges".into()));
    }
    let p = longest_path_len(g, limits)? as Label;
    Ok(keyed(g, &vec![(1..=p).collect(); g.edge_count()]))
}

/// Edge `i` of the directed ring (leaving node `i`) gets `{i+1, n+i+1}`.
pub fn label_ring_all_paths(n: usize) -> Result<Labeling> {
    let g = directed_ring(n)?;
    let n32 = n as Label;
    let sets: Vec<Vec<Label>> = (0..n as Label).map(|i| vec![i + 1, n32 + i + 1]).collect();
    Ok(keyed(&g, &sets))
}

/// One label per arc: the 1-based topological index of its tail.
pub fn label_dag_all_paths(g: &StaticGraph) -> Result<Labeling> {
    let order = topological_order(g)?;
    let mut pos = vec![0; g.node_count()];
    for (i, &u) in order.iter().enumerate() {
        pos[u] = i as Label + 1;
    }
    let sets: Vec<Vec<Label>> = g.edges().iter().map(|&(u, _)| vec![pos[u]]).collect();
    Ok(keyed(g, &sets))
}

/// BFS from `root` inside `members`, forwards or backwards. Returns the
/// distance and tree edge id of every member reached.
fn bfs_tree(
    g: &StaticGraph,
    members: &[bool],
    root: usize,
    forward: bool,
) -> Vec<Option<(usize, Option<usize>)>> {
    let mut seen: Vec<Option<(usize, Option<usize>)>> = vec![None; g.node_count()];
    seen[root] = Some((0, None));
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        let d = seen[x].unwrap().0;
        let nbrs = if forward { g.out_neighbors(x) } else { g.in_neighbors(x) };
        for &(w, id) in nbrs {
            if members[w] && seen[w].is_none() {
                seen[w] = Some((d + 1, Some(id)));
                queue.push_back(w);
            }
        }
    }
    seen
}

/// In-tree into `root` labeled so every node reaches it by time `k`, then an
/// out-tree labeled from `k + 1`. Writes into `sets` shifted by `base − 1`;
/// returns the largest label used (0 if none).
fn scc_reach_into(
    g: &StaticGraph,
    members: &[bool],
    root: usize,
    base: Label,
    sets: &mut [Vec<Label>],
) -> Label {
    let tin = bfs_tree(g, members, root, false);
    let tout = bfs_tree(g, members, root, true);
    let k = tin.iter().flatten().map(|&(d, _)| d).max().unwrap_or(0) as Label;
    let mut top = 0;
    for &(d, id) in tin.iter().flatten() {
        if let Some(id) = id {
            let l = base - 1 + k - d as Label + 1;
            sets[id].push(l);
            top = top.max(l);
        }
    }
    for &(d, id) in tout.iter().flatten() {
        if let Some(id) = id {
            let l = base - 1 + k + d as Label;
            sets[id].push(l);
            top = top.max(l);
        }
    }
    top
}

fn finish(g: &StaticGraph, mut sets: Vec<Vec<Label>>) -> Labeling {
    for s in &mut sets {
        s.sort_unstable();
        s.dedup();
    }
    keyed(g, &sets)
}

/// At most two labels per edge; every ordered pair is joined through `root`.
pub fn label_strongly_connected_reach(g: &StaticGraph, root: usize) -> Result<Labeling> {
    if root >= g.node_count() {
        return Err(Error::UnknownNode {
            node: root,
            n: g.node_count(),
        });
    }
    if !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected);
    }
    let mut sets = vec![Vec::new(); g.edge_count()];
    scc_reach_into(g, &vec![true; g.node_count()], root, 1, &mut sets);
    Ok(finish(g, sets))
}

/// Reach labeling of any graph: components of the condensation in
/// topological order, each in its own label window, with arcs leaving a
/// component labeled just above its window.
pub fn label_reach(g: &StaticGraph) -> Labeling {
    let comps = strongly_connected_components(g);
    let mut comp_of = vec![0; g.node_count()];
    for (c, nodes) in comps.iter().enumerate() {
        for &u in nodes {
            comp_of[u] = c;
        }
    }
    let mut sets = vec![Vec::new(); g.edge_count()];
    let mut base: Label = 1;
    for (c, nodes) in comps.iter().enumerate() {
        let mut members = vec![false; g.node_count()];
        for &u in nodes {
            members[u] = true;
        }
        // Trivial components need no window.
        let top = if nodes.len() > 1 {
            scc_reach_into(g, &members, nodes[0], base, &mut sets)
        } else {
            base - 1
        };
        let exit = top + 1;
        for &u in nodes {
            for &(w, id) in g.out_neighbors(u) {
                if comp_of[w] != c {
                    sets[id].push(exit);
                }
            }
        }
        base = exit + 1;
    }
    finish(g, sets)
}

/// Two labels per edge of an undirected tree, at most d(T).
///
/// Rooted at node 0. With `h(w)` the height of the subtree under `w`, the
/// edge from `w` to its parent gets `h(w) + 1` (climbing) and `d − h(w)`
/// (descending); leaves therefore get `{1, d}`.
pub fn label_tree_all_paths(t: &StaticGraph) -> Result<Labeling> {
    let n = t.node_count();
    if t.is_directed() {
        return Err(Error::NeedsUndirected);
    }
    if n == 0 || t.edge_count() + 1 != n || !is_weakly_connected(t) {
        return Err(Error::NotATree);
    }
    let d = diameter(t) as Label;
    let tree = bfs_tree(t, &vec![true; n], 0, true);
    // Process nodes deepest first so children precede parents.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(tree[u].unwrap().0));
    let mut height = vec![0 as Label; n];
    let mut sets = vec![Vec::new(); t.edge_count()];
    for u in order {
        let Some(id) = tree[u].unwrap().1 else { continue };
        sets[id] = vec![height[u] + 1, d - height[u]];
        let (a, b) = t.edge(id);
        let parent = if a == u { b } else { a };
        height[parent] = height[parent].max(height[u] + 1);
    }
    Ok(finish(t, sets))
}

/// All-paths labeling of the directed ring with age at most `(n−1) + k`.
///
/// `k = 0` puts `{1, …, n−1}` everywhere. Otherwise, for each of the
/// `⌈n/(k+1)⌉` starting edges `j = i(k+1)+1` (1-based), lay labels
/// `1, 2, …` clockwise from `e_j`. A run of length `(n−1)+k` covers journeys
/// of length `n−1` starting at `e_j … e_{j+k}`; the last run only needs to
/// reach the journey starting at `e_n`.
pub fn label_ring_tradeoff(n: usize, k: usize) -> Result<Labeling> {
    let g = directed_ring(n)?;
    if k > n - 1 {
        return Err(Error::Invalid(format!("k must be in 0..={}, got {k}", n - 1)));
    }
    let mut sets = vec![Vec::new(); n];
    if k == 0 {
        sets.fill((1..n as Label).collect());
        return Ok(keyed(&g, &sets));
    }
    let iterations = n.div_ceil(k + 1);
    for i in 0..iterations {
        let j = i * (k + 1) + 1;
        let run = if i + 1 == iterations { (n - 1 + k).min(2 * n - j - 1) } else { n - 1 + k };
        for t in 0..run {
            sets[(j - 1 + t) % n].push(t as Label + 1);
        }
    }
    Ok(finish(&g, sets))
}

/// Union of BFS out-trees, one per node, each edge at depth `i` labeled `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsReachLabeling {
    /// The deduplicated labeling.
    pub labeling: Labeling,
    /// Σ_u (edges in the tree of u) = r(G), counting repeats across trees.
    pub per_tree_cost: usize,
}

pub fn label_reach_diameter_bfs(g: &StaticGraph) -> Result<BfsReachLabeling> {
    if !is_weakly_connected(g) {
        return Err(Error::NotWeaklyConnected);
    }
    let all = vec![true; g.node_count()];
    let mut sets = vec![Vec::new(); g.edge_count()];
    let mut per_tree_cost = 0;
    for u in 0..g.node_count() {
        for &(d, id) in bfs_tree(g, &all, u, true).iter().flatten() {
            if let Some(id) = id {
                sets[id].push(d as Label);
                per_tree_cost += 1;
            }
        }
    }
    Ok(BfsReachLabeling {
        labeling: finish(g, sets),
        per_tree_cost,
    })
}
