//! Text formats: temporal graphs (`tg 1`) and XOR-CNF (`p xor2 n m`).
//!
//! ```text
//! tg 1
//! directed
//! nodes 3
//! 0 1 : 1,4
//! 1 2 : 2 ; w=3/2
//! 2 0 :          # no labels
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use temporal_core::gadgets::{Lit, XorFormula};
use temporal_core::{Error, Label, Result, StaticGraph, TemporalGraph, Weight};

/// A parsed temporal graph plus non-fatal remarks (duplicate labels).
#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: TemporalGraph,
    pub warnings: Vec<String>,
}

type EdgeLine = ((usize, usize), Vec<Label>, Option<Weight>);

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn num<T: std::str::FromStr>(line: usize, s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| perr(line, format!("bad {what} {s:?}")))
}

pub fn parse_temporal_graph(text: &str) -> Result<Parsed> {
    let mut lines = content_lines(text);
    let mut header = |want: &str| lines.next().ok_or_else(|| perr(0, format!("missing {want} line")));

    let (ln, l) = header("version")?;
    if l != "tg 1" {
        return Err(perr(ln, format!("unsupported header {l:?}, expected \"tg 1\"")));
    }
    let (ln, l) = header("orientation")?;
    let directed = match l {
        "directed" => true,
        "undirected" => false,
        _ => return Err(perr(ln, format!("expected directed or undirected, got {l:?}"))),
    };
    let (ln, l) = header("nodes")?;
    let n: usize = match l.split_whitespace().collect::<Vec<_>>()[..] {
        ["nodes", k] => num(ln, k, "node count")?,
        _ => return Err(perr(ln, format!("expected \"nodes <n>\", got {l:?}"))),
    };

    let mut warnings = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges: Vec<EdgeLine> = Vec::new();
    for (ln, l) in lines {
        let (body, weight) = match l.split_once(';') {
            Some((b, w)) => {
                let w = w.trim();
                let w = w.strip_prefix("w=").ok_or_else(|| perr(ln, format!("expected w=<weight>, got {w:?}")))?;
                (b, Some(num::<Weight>(ln, w, "weight")?))
            }
            None => (l, None),
        };
        let (ends, labels) = body.split_once(':').ok_or_else(|| perr(ln, "missing ':'"))?;
        let (u, v) = match ends.split_whitespace().collect::<Vec<_>>()[..] {
            [a, b] => (num::<usize>(ln, a, "node")?, num::<usize>(ln, b, "node")?),
            _ => return Err(perr(ln, "expected \"<u> <v> : <labels>\"")),
        };
        if u >= n || v >= n {
            return Err(perr(ln, format!("node out of range (nodes {n})")));
        }
        if u == v {
            return Err(perr(ln, format!("self-loop on {u}")));
        }
        let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
        if let Some(first) = seen.insert(key, ln) {
            return Err(perr(ln, format!("edge {u} {v} already given on line {first}")));
        }
        let mut set = Vec::new();
        for tok in labels.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let l: Label = num(ln, tok, "label")?;
            if l == 0 {
                return Err(perr(ln, "labels start at 1"));
            }
            set.push(l);
        }
        let before = set.len();
        set.sort_unstable();
        set.dedup();
        if set.len() < before {
            warnings.push(format!("line {ln}: duplicate labels on {u} {v} merged"));
        }
        edges.push((key, set, weight));
    }

    let weighted = edges.iter().filter(|e| e.2.is_some()).count();
    let g = if weighted == 0 {
        StaticGraph::new(n, directed, edges.iter().map(|e| e.0))?
    } else if weighted == edges.len() {
        StaticGraph::weighted(n, directed, edges.iter().map(|e| (e.0, e.2.unwrap())))?
    } else {
        return Err(perr(0, "weights must be given on every edge or on none"));
    };
    let mut labels = vec![Vec::new(); g.edge_count()];
    for (key, set, _) in edges {
        labels[g.edge_id(key.0, key.1).expect("edge inserted above")] = set;
    }
    Ok(Parsed {
        graph: TemporalGraph::from_edge_labels(g, labels)?,
        warnings,
    })
}

/// Canonical text: edges and labels sorted, one edge per line.
pub fn serialize_temporal_graph(tg: &TemporalGraph) -> String {
    let g = tg.graph();
    let mut out = String::new();
    let orient = if g.is_directed() { "directed" } else { "undirected" };
    let _ = write!(out, "tg 1\n{orient}\nnodes {}\n", g.node_count());
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        let labels: Vec<String> = tg.labels(id).iter().map(|l| l.to_string()).collect();
        let _ = write!(out, "{u} {v} :");
        if !labels.is_empty() {
            let _ = write!(out, " {}", labels.join(","));
        }
        if let Some(w) = g.weight(id) {
            let _ = write!(out, " ; w={w}");
        }
        out.push('\n');
    }
    out
}

/// `p xor2 <n> <m>` then `m` clauses of two signed 1-based literals, an
/// optional trailing `0`. Lines starting with `c` or text after `#` are
/// comments.
pub fn parse_cnf(text: &str) -> Result<XorFormula> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.starts_with('c'));
    let (ln, l) = lines.next().ok_or_else(|| perr(0, "missing \"p xor2\" header"))?;
    let (n, m): (usize, usize) = match l.split_whitespace().collect::<Vec<_>>()[..] {
        ["p", "xor2", n, m] => (num(ln, n, "variable count")?, num(ln, m, "clause count")?),
        _ => return Err(perr(ln, format!("expected \"p xor2 <n> <m>\", got {l:?}"))),
    };
    let mut clauses = Vec::with_capacity(m);
    for (ln, l) in lines {
        let toks: Vec<i64> = l
            .split_whitespace()
            .map(|t| num(ln, t, "literal"))
            .collect::<Result<_>>()?;
        let lits = match toks[..] {
            [a, b] | [a, b, 0] => [a, b],
            _ => return Err(perr(ln, "expected two literals")),
        };
        let mut pair = [Lit::pos(0); 2];
        for (slot, x) in pair.iter_mut().zip(lits) {
            *slot = Lit::from_dimacs(x).ok_or_else(|| perr(ln, "literal 0"))?;
            if slot.var >= n {
                return Err(perr(ln, format!("variable {} exceeds {n}", slot.var + 1)));
            }
        }
        clauses.push((pair[0], pair[1]));
    }
    if clauses.len() != m {
        return Err(perr(0, format!("header promises {m} clauses, found {}", clauses.len())));
    }
    XorFormula::new(n, clauses)
}

pub fn serialize_cnf(phi: &XorFormula) -> String {
    let mut out = format!("p xor2 {} {}\n", phi.vars, phi.clause_count());
    for (a, b) in &phi.clauses {
        let _ = writeln!(out, "{} {}", a.to_dimacs(), b.to_dimacs());
    }
    out
}
