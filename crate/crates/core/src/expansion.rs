//! The static expansion: one copy of the node set per time level.

use crate::error::{Error, Result};
use crate::temporal::{Label, TemporalGraph, TimeEdge};

/// Levels `λ_min−1 ..= λ_max`. A time-node is `(node, level)`. Vertical arcs
/// join consecutive copies of a node; each diagonal arc `(u, l−1) → (v, l)`
/// is a time-edge `u → v` at time `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticExpansion {
    n: usize,
    first: Label,
    last: Label,
    diagonal: Vec<TimeEdge>,
}

impl StaticExpansion {
    pub fn new(tg: &TemporalGraph) -> Result<Self> {
        let (lo, hi) = match (tg.min_label(), tg.max_label()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::EmptyLabeling),
        };
        Ok(StaticExpansion {
            n: tg.node_count(),
            first: lo - 1,
            last: hi,
            diagonal: tg.time_edges().to_vec(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn first_level(&self) -> Label {
        self.first
    }

    pub fn last_level(&self) -> Label {
        self.last
    }

    pub fn level_count(&self) -> usize {
        (self.last - self.first + 1) as usize
    }

    pub fn time_node_count(&self) -> usize {
        self.level_count() * self.n
    }

    /// Dense id of time-node `(u, level)`.
    pub fn time_node(&self, u: usize, level: Label) -> usize {
        (level - self.first) as usize * self.n + u
    }

    /// Vertical arcs as `(node, level)` → `(node, level+1)` pairs.
    pub fn vertical_arcs(&self) -> impl Iterator<Item = ((usize, Label), (usize, Label))> + '_ {
        (self.first..self.last).flat_map(move |l| (0..self.n).map(move |u| ((u, l), (u, l + 1))))
    }

    /// Diagonal arcs as time-edges.
    pub fn diagonal_arcs(&self) -> &[TimeEdge] {
        &self.diagonal
    }

    /// Every arc joins level `l` to level `l+1`, hence no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        self.diagonal
            .iter()
            .all(|e| e.label > self.first && e.label <= self.last)
    }
}
