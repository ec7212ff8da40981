//! Size guards for the exponential routines.

/// Caps applied before running an exhaustive search. Each field bounds one
/// family of routines; exceeding it yields [`Error::Guard`](crate::Error).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Journey enumeration: node count.
    pub journey_nodes: usize,
    /// Journey enumeration: time-edge count.
    pub journey_time_edges: usize,
    /// Simple-path enumeration (longest path, all-paths checks): node count.
    pub path_nodes: usize,
    /// τ/κ oracles: edge count.
    pub oracle_edges: usize,
    /// Edge-kernel search: kernel size.
    pub kernel_size: usize,
    /// Edge-kernel search: node count.
    pub kernel_nodes: usize,
    /// Brute-force Max-XOR: variable count.
    pub xor_vars: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            journey_nodes: 20,
            journey_time_edges: 64,
            path_nodes: 12,
            oracle_edges: 5,
            kernel_size: 4,
            kernel_nodes: 30,
            xor_vars: 20,
        }
    }
}

impl Limits {
    /// Raise or lower every node-count guard at once.
    pub fn with_node_limit(mut self, nodes: usize) -> Self {
        self.journey_nodes = nodes;
        self.path_nodes = nodes;
        self.kernel_nodes = nodes;
        self
    }

    /// No caps at all.
    pub fn unbounded() -> Self {
        Limits {
            journey_nodes: usize::MAX,
            journey_time_edges: usize::MAX,
            path_nodes: usize::MAX,
            oracle_edges: usize::MAX,
            kernel_size: usize::MAX,
            kernel_nodes: usize::MAX,
            xor_vars: usize::MAX,
        }
    }
}
