//! Disjoint journeys and temporal separators via maximum flow on the static
//! expansion, plus journey packing and multi-source token dissemination.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::flow::FlowGraph;
use crate::graph::StaticGraph;
use crate::journeys::{foremost_over, ForemostOptions};
use crate::structure::{is_strongly_connected, is_weakly_connected};
use crate::temporal::{Journey, Label, TemporalGraph, TimeEdge};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DisjointnessMode {
    /// Never leave the same node at the same time.
    Out,
    /// Never arrive at the same node at the same time.
    In,
    /// Never occupy the same time-node.
    TimeNode,
    /// Never use the same time-edge.
    TimeEdge,
}

impl DisjointnessMode {
    pub const ALL: [DisjointnessMode; 4] = [
        DisjointnessMode::Out,
        DisjointnessMode::In,
        DisjointnessMode::TimeNode,
        DisjointnessMode::TimeEdge,
    ];
}

impl FromStr for DisjointnessMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "out" => Ok(DisjointnessMode::Out),
            "in" => Ok(DisjointnessMode::In),
            "tnode" => Ok(DisjointnessMode::TimeNode),
            "tedge" => Ok(DisjointnessMode::TimeEdge),
            _ => Err(Error::Invalid(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for DisjointnessMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DisjointnessMode::Out => "out",
            DisjointnessMode::In => "in",
            DisjointnessMode::TimeNode => "tnode",
            DisjointnessMode::TimeEdge => "tedge",
        })
    }
}

/// What a journey occupies under a disjointness mode. A journey sits at the
/// time-node `(x, l−1)` before each step `x → y` at `l`, and at `(y, l)` after.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Occupancy {
    Node(usize, Label),
    Edge(TimeEdge),
}

pub fn occupancy(mode: DisjointnessMode, j: &Journey) -> Vec<Occupancy> {
    let mut out = Vec::new();
    for e in j.steps() {
        match mode {
            DisjointnessMode::Out => out.push(Occupancy::Node(e.from, e.label)),
            DisjointnessMode::In => out.push(Occupancy::Node(e.to, e.label)),
            DisjointnessMode::TimeNode => {
                out.push(Occupancy::Node(e.from, e.label - 1));
                out.push(Occupancy::Node(e.to, e.label));
            }
            DisjointnessMode::TimeEdge => out.push(Occupancy::Edge(*e)),
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// True when no two journeys share an occupancy element.
pub fn pairwise_disjoint(mode: DisjointnessMode, journeys: &[Journey]) -> bool {
    let mut seen = BTreeSet::new();
    journeys
        .iter()
        .all(|j| occupancy(mode, j).into_iter().all(|x| seen.insert(x)))
}

/// A set of removals that destroys every `(s, v)`-journey.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Separator {
    /// Node departure times `(u, t)`: every time-edge leaving `u` at `t`.
    Departures(Vec<(usize, Label)>),
    /// Node arrival times `(u, t)`: every time-edge entering `u` at `t`.
    Arrivals(Vec<(usize, Label)>),
    /// Time-nodes `(u, t)`: arrivals at `u` at `t` and departures at `t+1`.
    TimeNodes(Vec<(usize, Label)>),
    TimeEdges(Vec<TimeEdge>),
}

impl Separator {
    pub fn len(&self) -> usize {
        match self {
            Separator::Departures(x) | Separator::Arrivals(x) | Separator::TimeNodes(x) => x.len(),
            Separator::TimeEdges(x) => x.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether time-edge `e` is removed.
    pub fn removes(&self, e: &TimeEdge) -> bool {
        match self {
            Separator::Departures(x) => x.binary_search(&(e.from, e.label)).is_ok(),
            Separator::Arrivals(x) => x.binary_search(&(e.to, e.label)).is_ok(),
            Separator::TimeNodes(x) => {
                x.binary_search(&(e.from, e.label - 1)).is_ok()
                    || x.binary_search(&(e.to, e.label)).is_ok()
            }
            Separator::TimeEdges(x) => x.binary_search(e).is_ok(),
        }
    }

    /// Time-edges of `tg` that survive the removal.
    pub fn surviving(&self, tg: &TemporalGraph) -> Vec<TimeEdge> {
        tg.time_edges().iter().filter(|e| !self.removes(e)).copied().collect()
    }

    /// True when some `(s, v)`-journey survives the removal.
    pub fn leaves_journey(&self, tg: &TemporalGraph, s: usize, v: usize) -> bool {
        let Some(lo) = tg.min_label() else {
            return false;
        };
        let rest = self.surviving(tg);
        foremost_over(tg.node_count(), &rest, s, lo, ForemostOptions::default()).reached(v)
    }

    fn from_elements(mode: DisjointnessMode, elems: BTreeSet<Occupancy>) -> Self {
        let nodes = || {
            elems
                .iter()
                .map(|x| match x {
                    Occupancy::Node(u, t) => (*u, *t),
                    Occupancy::Edge(_) => unreachable!("node mode"),
                })
                .collect()
        };
        match mode {
            DisjointnessMode::Out => Separator::Departures(nodes()),
            DisjointnessMode::In => Separator::Arrivals(nodes()),
            DisjointnessMode::TimeNode => Separator::TimeNodes(nodes()),
            DisjointnessMode::TimeEdge => Separator::TimeEdges(
                elems
                    .iter()
                    .map(|x| match x {
                        Occupancy::Edge(e) => *e,
                        Occupancy::Node(..) => unreachable!("edge mode"),
                    })
                    .collect(),
            ),
        }
    }
}

impl fmt::Display for Separator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = match self {
            Separator::Departures(x) | Separator::Arrivals(x) | Separator::TimeNodes(x) => {
                x.iter().map(|(u, t)| format!("({u},{t})")).collect()
            }
            Separator::TimeEdges(x) => x.iter().map(|e| e.to_string()).collect(),
        };
        f.write_str(&parts.join(" "))
    }
}

/// The capacitated expansion for one disjointness mode.
///
/// Out mode: levels `λ_min−1 ..= λ_max`, vertical arcs of capacity λ_max, and
/// for a time-node with two or more diagonal out-arcs a fan-out node `w`
/// behind a unit arc, so each node departure time carries one unit. In mode
/// mirrors this on incoming arcs. Time-edge mode puts unit capacity on every
/// diagonal arc. Time-node mode splits every time-node into a unit arc, with
/// waiting routed through an uncapacitated lane so that only the arrival and
/// departure time-nodes of a visit are charged.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    mode: DisjointnessMode,
    graph: FlowGraph,
    source: usize,
    sink: usize,
    origin: usize,
    /// Per forward arc (indexed by `id / 2`): the time-edge it traverses.
    step: Vec<Option<TimeEdge>>,
    /// Per forward arc: the separator element it stands for, if unit.
    element: Vec<Option<Occupancy>>,
    value: Option<u64>,
}

impl FlowNetwork {
    pub fn mode(&self) -> DisjointnessMode {
        self.mode
    }

    pub fn flow_graph(&self) -> &FlowGraph {
        &self.graph
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// The time-edge carried by forward arc `id`, if any.
    pub fn arc_step(&self, id: usize) -> Option<TimeEdge> {
        self.step[id / 2]
    }

    fn arc(&mut self, u: usize, v: usize, cap: u64, step: Option<TimeEdge>, elem: Option<Occupancy>) {
        self.graph.add_arc(u, v, cap);
        self.step.push(step);
        self.element.push(elem);
    }

    /// Maximum flow value, computed once.
    pub fn max_flow(&mut self) -> u64 {
        if let Some(v) = self.value {
            return v;
        }
        let v = self.graph.max_flow(self.source, self.sink);
        self.value = Some(v);
        v
    }

    /// Split the flow into journeys, following the lowest label first.
    pub fn decompose(&mut self) -> Vec<Journey> {
        let k = self.max_flow();
        let mut left: Vec<u64> = (0..self.graph.arc_count())
            .map(|i| self.graph.flow(2 * i))
            .collect();
        let mut out = Vec::new();
        for _ in 0..k {
            let mut at = self.source;
            let mut walk = Vec::new();
            while at != self.sink {
                let id = self
                    .graph
                    .arcs_from(at)
                    .find(|&id| left[id / 2] > 0)
                    .expect("flow is conserved");
                left[id / 2] -= 1;
                walk.extend(self.step[id / 2]);
                at = self.graph.arc(id).1;
            }
            out.push(Journey::shortcut(self.origin, &walk));
        }
        out
    }

    /// Separator read off the residual minimum cut.
    pub fn separator(&mut self) -> Separator {
        self.max_flow();
        let elems: BTreeSet<Occupancy> = self
            .graph
            .min_cut(self.source)
            .into_iter()
            .map(|id| self.element[id / 2].expect("minimum cut crosses unit arcs only"))
            .collect();
        Separator::from_elements(self.mode, elems)
    }
}

/// Build the capacitated expansion for `(s, v)` in the given mode.
pub fn flow_expansion(
    tg: &TemporalGraph,
    s: usize,
    v: usize,
    mode: DisjointnessMode,
) -> Result<FlowNetwork> {
    check_endpoints(tg, s, v)?;
    let n = tg.node_count();
    let (lo, hi) = tg
        .min_label()
        .zip(tg.max_label())
        .ok_or(Error::EmptyLabeling)?;
    let first = lo - 1;
    let levels = (hi - first + 1) as usize;
    let tn = |u: usize, l: Label| (l - first) as usize * n + u;
    let edges = tg.time_edges();
    let lambda_max = hi as u64;
    let big = (levels + edges.len() + 1) as u64;

    let mut net = FlowNetwork {
        mode,
        graph: FlowGraph::new(levels * n),
        source: 0,
        sink: 0,
        origin: s,
        step: Vec::new(),
        element: Vec::new(),
        value: None,
    };

    match mode {
        DisjointnessMode::Out | DisjointnessMode::In | DisjointnessMode::TimeEdge => {
            net.source = tn(s, first);
            net.sink = tn(v, hi);
            let mut group: Vec<TimeEdge> = edges.to_vec();
            if mode == DisjointnessMode::In {
                group.sort_unstable_by_key(|e| (e.label, e.to, e.from));
            }
            let key = |e: &TimeEdge| match mode {
                DisjointnessMode::In => (e.label, e.to),
                _ => (e.label, e.from),
            };
            for bucket in group.chunk_by(|a, b| key(a) == key(b)) {
                for &e in bucket {
                    let (tail, head) = (tn(e.from, e.label - 1), tn(e.to, e.label));
                    let elem = match mode {
                        DisjointnessMode::Out => Occupancy::Node(e.from, e.label),
                        DisjointnessMode::In => Occupancy::Node(e.to, e.label),
                        _ => Occupancy::Edge(e),
                    };
                    if bucket.len() == 1 || mode == DisjointnessMode::TimeEdge {
                        net.arc(tail, head, 1, Some(e), Some(elem));
                    }
                }
                if bucket.len() > 1 && mode != DisjointnessMode::TimeEdge {
                    let w = net.graph.add_node();
                    let e0 = bucket[0];
                    if mode == DisjointnessMode::Out {
                        let elem = Occupancy::Node(e0.from, e0.label);
                        net.arc(tn(e0.from, e0.label - 1), w, 1, None, Some(elem));
                        for &e in bucket {
                            net.arc(w, tn(e.to, e.label), 1, Some(e), Some(elem));
                        }
                    } else {
                        let elem = Occupancy::Node(e0.to, e0.label);
                        for &e in bucket {
                            net.arc(tn(e.from, e.label - 1), w, 1, Some(e), Some(elem));
                        }
                        net.arc(w, tn(e0.to, e0.label), 1, None, Some(elem));
                    }
                }
            }
            let vertical = if mode == DisjointnessMode::TimeEdge { big } else { lambda_max };
            for l in first..hi {
                for u in 0..n {
                    net.arc(tn(u, l), tn(u, l + 1), vertical, None, None);
                }
            }
        }
        DisjointnessMode::TimeNode => {
            // Node blocks: in-copies, out-copies, lane nodes; then terminals.
            let xin = |u: usize, l: Label| tn(u, l);
            let xout = |u: usize, l: Label| levels * n + tn(u, l);
            let lane = |u: usize, l: Label| 2 * levels * n + tn(u, l);
            net.graph = FlowGraph::new(3 * levels * n + 2);
            net.source = 3 * levels * n;
            net.sink = net.source + 1;
            for l in first..=hi {
                for u in 0..n {
                    net.arc(xin(u, l), xout(u, l), 1, None, Some(Occupancy::Node(u, l)));
                }
            }
            for &e in edges {
                net.arc(xout(e.from, e.label - 1), xin(e.to, e.label), big, Some(e), None);
            }
            for l in first..hi {
                for u in 0..n {
                    net.arc(xout(u, l), lane(u, l + 1), big, None, None);
                    net.arc(lane(u, l + 1), xin(u, l + 1), big, None, None);
                    if l + 1 < hi {
                        net.arc(lane(u, l + 1), lane(u, l + 2), big, None, None);
                    }
                }
            }
            for l in first..hi {
                net.arc(net.source, xin(s, l), big, None, None);
            }
            for l in lo..=hi {
                net.arc(xout(v, l), net.sink, big, None, None);
            }
        }
    }
    Ok(net)
}

fn check_endpoints(tg: &TemporalGraph, s: usize, v: usize) -> Result<()> {
    let n = tg.node_count();
    for x in [s, v] {
        if x >= n {
            return Err(Error::UnknownNode { node: x, n });
        }
    }
    if s == v {
        return Err(Error::SameEndpoints);
    }
    Ok(())
}

/// Result of one max-flow run: the maximum, witnesses and a minimum separator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MengerReport {
    pub k: usize,
    pub witnesses: Vec<Journey>,
    pub separator: Separator,
}

pub fn menger(tg: &TemporalGraph, s: usize, v: usize, mode: DisjointnessMode) -> Result<MengerReport> {
    check_endpoints(tg, s, v)?;
    if tg.min_label().is_none() {
        return Ok(MengerReport {
            k: 0,
            witnesses: Vec::new(),
            separator: Separator::from_elements(mode, BTreeSet::new()),
        });
    }
    let mut net = flow_expansion(tg, s, v, mode)?;
    let k = net.max_flow() as usize;
    let witnesses = net.decompose();
    let separator = net.separator();
    Ok(MengerReport {
        k,
        witnesses,
        separator,
    })
}

/// Maximum number of pairwise disjoint `(s, v)`-journeys, with witnesses.
pub fn max_disjoint_journeys(
    tg: &TemporalGraph,
    s: usize,
    v: usize,
    mode: DisjointnessMode,
) -> Result<(usize, Vec<Journey>)> {
    let r = menger(tg, s, v, mode)?;
    Ok((r.k, r.witnesses))
}

/// A minimum separator; its size equals the disjoint-journey maximum.
pub fn min_separator(
    tg: &TemporalGraph,
    s: usize,
    v: usize,
    mode: DisjointnessMode,
) -> Result<Separator> {
    Ok(menger(tg, s, v, mode)?.separator)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub arrival: Label,
    pub journeys: Vec<Journey>,
}

/// Earliest time `T` by which `q` out-disjoint `(s, v)`-journeys can all
/// arrive, found by binary search over arrival labels at `v`.
pub fn foremost_disjoint_packing(
    tg: &TemporalGraph,
    s: usize,
    v: usize,
    q: usize,
) -> Result<Option<Packing>> {
    if q == 0 {
        return Err(Error::Invalid("q must be positive".into()));
    }
    let truncated = |t: Label| {
        tg.map_labels(|_, set| set.iter().copied().filter(|&l| l <= t).collect())
            .expect("subset of valid labels")
    };
    let mut arrivals: Vec<Label> = tg
        .time_edges()
        .iter()
        .filter(|e| e.to == v)
        .map(|e| e.label)
        .collect();
    arrivals.sort_unstable();
    arrivals.dedup();
    let feasible = |t: Label| -> Result<bool> {
        let mut net = flow_expansion(&truncated(t), s, v, DisjointnessMode::Out)?;
        Ok(net.max_flow() as usize >= q)
    };
    check_endpoints(tg, s, v)?;
    match arrivals.last() {
        Some(&last) if feasible(last)? => {}
        _ => return Ok(None),
    }
    let (mut lo, mut hi) = (0, arrivals.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(arrivals[mid])? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let t = arrivals[lo];
    let mut net = flow_expansion(&truncated(t), s, v, DisjointnessMode::Out)?;
    let mut journeys = net.decompose();
    journeys.truncate(q);
    Ok(Some(Packing {
        arrival: t,
        journeys,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenPacking {
    /// One journey per token; a token already at `v` gets a 0-hop journey.
    pub journeys: Vec<Journey>,
    /// Whether the dissemination guarantee's hypothesis held on the input.
    pub hypothesis_holds: bool,
}

/// Route `Σ k(s)` tokens from their sources to `v` along out-disjoint journeys,
/// `k(s)` of them leaving each source `s`.
///
/// A supersource `s′` gets an arc to the source of token `i` labeled `i`; all
/// original labels shift up by `k` so the token arcs come first.
pub fn multi_source_packing(
    tg: &TemporalGraph,
    sources: &[(usize, usize)],
    v: usize,
) -> Result<Option<TokenPacking>> {
    let n = tg.node_count();
    for &(x, _) in sources.iter().chain(&[(v, 0)]) {
        if x >= n {
            return Err(Error::UnknownNode { node: x, n });
        }
    }
    let mut per_source = vec![0usize; n];
    for &(x, c) in sources {
        per_source[x] += c;
    }
    let k: usize = per_source.iter().sum();
    if k == 0 {
        return Err(Error::Invalid("at least one token is required".into()));
    }
    let shift = k as Label;
    let base = tg.graph().to_directed();
    let mut arcs: Vec<((usize, usize), Vec<Label>)> = Vec::new();
    for &(a, b) in base.edges() {
        let set = tg.labels_between(a, b).expect("arc of the directed copy");
        arcs.push(((a, b), set.iter().map(|l| l + shift).collect()));
    }
    let mut token = 0;
    for (x, &c) in per_source.iter().enumerate() {
        if c > 0 {
            arcs.push(((n, x), (token + 1..=token + c as Label).collect()));
            token += c as Label;
        }
    }
    let g = StaticGraph::new(n + 1, true, arcs.iter().map(|&(e, _)| e))?;
    let mut labels = vec![Vec::new(); g.edge_count()];
    for (e, set) in arcs {
        labels[g.edge_id(e.0, e.1).unwrap()] = set;
    }
    let lifted = TemporalGraph::from_edge_labels(g, labels)?;
    let hypothesis_holds = token_hypothesis_holds(tg, k);
    let (got, witnesses) = if per_source[v] == k {
        (k, Vec::new())
    } else {
        max_disjoint_journeys(&lifted, n, v, DisjointnessMode::Out)?
    };
    if got < k {
        return Ok(None);
    }
    let mut journeys: Vec<Journey> = (0..per_source[v]).map(|_| Journey::empty(v)).collect();
    for w in witnesses {
        let start = w.steps()[0].to;
        if start == v {
            // Token arcs into v carry no flow beyond the 0-hop journeys above.
            continue;
        }
        let rest: Vec<TimeEdge> = w.steps()[1..]
            .iter()
            .map(|e| TimeEdge::new(e.from, e.to, e.label - shift))
            .collect();
        journeys.push(Journey::from_steps(rest));
    }
    journeys.sort_by_key(|j| (j.source(), j.departure()));
    Ok(Some(TokenPacking {
        journeys,
        hypothesis_holds,
    }))
}

/// Age at least `n + k` and every instance over the label range connected
/// (strongly, for digraphs).
pub fn token_hypothesis_holds(tg: &TemporalGraph, k: usize) -> bool {
    let (Some(lo), Some(hi)) = (tg.min_label(), tg.max_label()) else {
        return false;
    };
    let n = tg.node_count();
    if ((hi - lo + 1) as usize) < n + k {
        return false;
    }
    (lo..=hi).all(|r| {
        let inst = tg.instance_at(r);
        if inst.is_directed() {
            is_strongly_connected(&inst)
        } else {
            is_weakly_connected(&inst)
        }
    })
}
