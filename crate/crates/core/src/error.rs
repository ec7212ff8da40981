use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {node} out of range (graph has {n} nodes)")]
    UnknownNode { node: usize, n: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("({0}, {1}) is not an edge of the graph")]
    UnknownEdge(usize, usize),
    #[error("label 0 on edge ({0}, {1}); labels start at 1")]
    ZeroLabel(usize, usize),
    #[error("weights must cover every edge and be strictly positive")]
    BadWeights,
    #[error("operation needs edge weights")]
    Unweighted,
    #[error("labeling is empty")]
    EmptyLabeling,
    #[error("start time {t} outside [{min}, {max}]")]
    StartOutOfRange { t: u32, min: u32, max: u32 },
    #[error("operation needs an undirected graph")]
    NeedsUndirected,
    #[error("operation needs a directed graph")]
    NeedsDirected,
    #[error("source and target coincide")]
    SameEndpoints,
    #[error("{what} guard exceeded: {actual} > {limit}")]
    Guard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("graph has a directed cycle")]
    Cyclic,
    #[error("graph is not strongly connected")]
    NotStronglyConnected,
    #[error("graph is not weakly connected")]
    NotWeaklyConnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("node sequence is not a simple path of the graph")]
    NotAPath,
    #[error("assignment has {got} values, formula has {want} variables")]
    IncompleteAssignment { got: usize, want: usize },
    #[error("degenerate clause on variable {0}")]
    DegenerateClause(usize),
    #[error("variable {var} occurs {count} times (at most 3 allowed)")]
    TooManyOccurrences { var: usize, count: usize },
    #[error("labeling violates a precondition: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

pub(crate) fn guard(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Guard {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
