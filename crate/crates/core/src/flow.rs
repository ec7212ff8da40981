//! Integer maximum flow by blocking flows on level graphs.

use std::collections::VecDeque;

#[derive(Debug, Clone, Default)]
pub struct FlowGraph {
    adj: Vec<Vec<usize>>,
    head: Vec<usize>,
    residual: Vec<u64>,
    capacity: Vec<u64>,
}

impl FlowGraph {
    pub fn new(nodes: usize) -> Self {
        FlowGraph {
            adj: vec![Vec::new(); nodes],
            ..Default::default()
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Add arc `u → v`; returns its id. The paired reverse arc is `id ^ 1`.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: u64) -> usize {
        let id = self.head.len();
        self.adj[u].push(id);
        self.head.push(v);
        self.residual.push(cap);
        self.capacity.push(cap);
        self.adj[v].push(id + 1);
        self.head.push(u);
        self.residual.push(0);
        self.capacity.push(0);
        id
    }

    pub fn arc_count(&self) -> usize {
        self.head.len() / 2
    }

    /// `(tail, head, capacity)` of forward arc `id`.
    pub fn arc(&self, id: usize) -> (usize, usize, u64) {
        (self.head[id ^ 1], self.head[id], self.capacity[id])
    }

    /// Forward arcs leaving `u`, in insertion order.
    pub fn arcs_from(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().copied().filter(|id| id % 2 == 0)
    }

    pub fn flow(&self, id: usize) -> u64 {
        self.capacity[id] - self.residual[id]
    }

    /// Push as much flow as possible from `s` to `t`; returns the added amount.
    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0;
        loop {
            let level = self.levels(s);
            if level[t].is_none() {
                return total;
            }
            let mut next = vec![0; self.adj.len()];
            loop {
                let pushed = self.augment(s, t, u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn levels(&self, s: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.adj.len()];
        level[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.adj[u] {
                let v = self.head[id];
                if self.residual[id] > 0 && level[v].is_none() {
                    level[v] = Some(level[u].unwrap() + 1);
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn augment(
        &mut self,
        u: usize,
        t: usize,
        limit: u64,
        level: &[Option<usize>],
        next: &mut [usize],
    ) -> u64 {
        if u == t {
            return limit;
        }
        while next[u] < self.adj[u].len() {
            let id = self.adj[u][next[u]];
            let v = self.head[id];
            if self.residual[id] > 0 && level[v] == level[u].map(|l| l + 1) {
                let got = self.augment(v, t, limit.min(self.residual[id]), level, next);
                if got > 0 {
                    self.residual[id] -= got;
                    self.residual[id ^ 1] += got;
                    return got;
                }
            }
            next[u] += 1;
        }
        0
    }

    /// Nodes reachable from `s` in the residual graph: the source side of a
    /// minimum cut once the flow is maximum.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        self.levels(s).into_iter().map(|l| l.is_some()).collect()
    }

    /// Forward arcs leaving the residual source side.
    pub fn min_cut(&self, s: usize) -> Vec<usize> {
        let side = self.source_side(s);
        (0..self.head.len())
            .step_by(2)
            .filter(|&id| side[self.head[id ^ 1]] && !side[self.head[id]] && self.capacity[id] > 0)
            .collect()
    }
}
