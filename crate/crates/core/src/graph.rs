//! Static (di)graphs underlying a temporal graph.

use std::collections::HashMap;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact positive edge weight.
pub type Weight = Ratio<i64>;

/// A simple (di)graph on nodes `0..n`. Edges are stored sorted; an undirected
/// edge is stored once as `(min, max)` and is traversable both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticGraph {
    n: usize,
    directed: bool,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<Weight>>,
    index: HashMap<(usize, usize), usize>,
    out: Vec<Vec<(usize, usize)>>,
    inc: Vec<Vec<(usize, usize)>>,
}

impl StaticGraph {
    pub fn new(
        n: usize,
        directed: bool,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::UnknownNode { node: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(if directed { (u, v) } else { (u.min(v), u.max(v)) });
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let index = list.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (i, &(u, v)) in list.iter().enumerate() {
            out[u].push((v, i));
            inc[v].push((u, i));
            if !directed {
                out[v].push((u, i));
                inc[u].push((v, i));
            }
        }
        for adj in out.iter_mut().chain(inc.iter_mut()) {
            adj.sort_unstable();
        }
        Ok(StaticGraph {
            n,
            directed,
            edges: list,
            weights: None,
            index,
            out,
            inc,
        })
    }

    /// Build a weighted graph; every weight must be strictly positive.
    pub fn weighted(
        n: usize,
        directed: bool,
        edges: impl IntoIterator<Item = ((usize, usize), Weight)>,
    ) -> Result<Self> {
        let pairs: Vec<_> = edges.into_iter().collect();
        let mut g = StaticGraph::new(n, directed, pairs.iter().map(|&(e, _)| e))?;
        let mut weights = vec![Weight::from_integer(0); g.edges.len()];
        for ((u, v), w) in pairs {
            if w <= Weight::from_integer(0) {
                return Err(Error::BadWeights);
            }
            weights[g.edge_id(u, v).expect("edge just inserted")] = w;
        }
        g.weights = Some(weights);
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Index of the edge joining `u` to `v` (either orientation if undirected).
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = if self.directed { (u, v) } else { (u.min(v), u.max(v)) };
        self.index.get(&key).copied()
    }

    /// `(neighbor, edge id)` pairs reachable by one step from `u`, sorted.
    pub fn out_neighbors(&self, u: usize) -> &[(usize, usize)] {
        &self.out[u]
    }

    /// `(neighbor, edge id)` pairs that step into `u`, sorted.
    pub fn in_neighbors(&self, u: usize) -> &[(usize, usize)] {
        &self.inc[u]
    }

    pub fn weights(&self) -> Option<&[Weight]> {
        self.weights.as_deref()
    }

    pub fn weight(&self, id: usize) -> Option<Weight> {
        self.weights.as_ref().map(|w| w[id])
    }

    /// Keep only the edges selected by `keep`, preserving weights.
    pub fn subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> StaticGraph {
        let ids: Vec<usize> = (0..self.edges.len()).filter(|&i| keep(i)).collect();
        let mut g = StaticGraph::new(self.n, self.directed, ids.iter().map(|&i| self.edges[i]))
            .expect("subset of a valid edge set");
        if let Some(w) = &self.weights {
            g.weights = Some(ids.iter().map(|&i| w[i]).collect());
        }
        g
    }

    /// The directed graph with each undirected edge replaced by two arcs.
    pub fn to_directed(&self) -> StaticGraph {
        if self.directed {
            return self.clone();
        }
        let arcs = self.edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]);
        StaticGraph::new(self.n, true, arcs).expect("arcs of a simple graph")
    }
}

/// Directed ring `0 → 1 → … → n−1 → 0`; edge index `i` is the arc leaving node `i`.
pub fn directed_ring(n: usize) -> Result<StaticGraph> {
    if n < 3 {
        return Err(Error::Invalid(format!("ring needs n >= 3, got {n}")));
    }
    StaticGraph::new(n, true, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Directed line `0 → 1 → … → n−1`.
pub fn directed_path(n: usize) -> StaticGraph {
    StaticGraph::new(n, true, (1..n).map(|i| (i - 1, i))).expect("valid line")
}

/// Complete digraph: every ordered pair of distinct nodes is an arc.
pub fn complete_digraph(n: usize) -> StaticGraph {
    let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
    StaticGraph::new(n, true, arcs).expect("valid clique")
}

/// Undirected `width × height` grid. Node `(x, y)` with `1 ≤ x ≤ width`,
/// `1 ≤ y ≤ height` has id `(y−1)·width + (x−1)`.
pub fn grid(width: usize, height: usize) -> StaticGraph {
    let id = |x: usize, y: usize| (y - 1) * width + (x - 1);
    let mut edges = Vec::new();
    for y in 1..=height {
        for x in 1..=width {
            if x < width {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y < height {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    StaticGraph::new(width * height, false, edges).expect("valid grid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            StaticGraph::new(3, true, [(0, 5)]),
            Err(Error::UnknownNode { node: 5, n: 3 })
        );
        assert_eq!(StaticGraph::new(3, true, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            StaticGraph::new(3, false, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(StaticGraph::new(3, true, [(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn undirected_edges_are_canonical() {
        let g = StaticGraph::new(3, false, [(2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(g.edge_id(2, 0), Some(1));
        assert_eq!(g.out_neighbors(0), &[(1, 0), (2, 1)]);
        assert_eq!(g.in_neighbors(2), &[(0, 1)]);
    }

    #[test]
    fn ring_edge_order_follows_tails() {
        let g = directed_ring(4).unwrap();
        for i in 0..4 {
            assert_eq!(g.edge(i), (i, (i + 1) % 4));
        }
        assert!(directed_ring(2).is_err());
    }

    #[test]
    fn weights_must_be_positive() {
        let w = |x| Weight::from_integer(x);
        assert!(StaticGraph::weighted(2, false, [((0, 1), w(0))]).is_err());
        let g = StaticGraph::weighted(3, false, [((1, 0), w(3)), ((1, 2), w(1))]).unwrap();
        assert_eq!(g.weight(g.edge_id(0, 1).unwrap()), Some(w(3)));
    }

    #[test]
    fn grid_shape() {
        let g = grid(8, 4);
        assert_eq!(g.node_count(), 32);
        assert_eq!(g.edge_count(), 7 * 4 + 8 * 3);
    }
}
