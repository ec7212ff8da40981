//! The directed graph G_φ built from a normalized Max-XOR(3) formula, and the
//! two maps between assignments and reach-preserving labelings of age 9.
//!
//! Each variable owns a trunk `s, u1..u6, v1..v6` and three branches
//! `u7, u8, v7, v8, t`. The p-th clause of a variable is routed through its
//! p-th branch; the two variables of a clause share that branch. For
//! `(x_i ∨ x_j)` the roles u/v of the shared branch are swapped between the
//! two gadgets, for `(x_i ∨ ¬x_j)` they agree.

use std::collections::BTreeSet;

use super::xor::{xor_satisfied_count, XorFormula};
use crate::error::{Error, Result};
use crate::graph::StaticGraph;
use crate::structure::{bfs_distances, cycles_at_most_two, diameter};
use crate::temporal::{Label, Labeling, TemporalGraph};
use crate::verify::preserves_reach;

/// Largest label a canonical labeling uses (and the diameter of G_φ).
pub const GADGET_AGE: Label = 9;

/// One branch as seen from one gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Branch {
    pub u7: usize,
    pub u8: usize,
    pub v7: usize,
    pub v8: usize,
    pub t: usize,
    /// Index into [`GadgetGraph::branches`].
    pub id: usize,
    /// Clause routed through this branch, if any.
    pub clause: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarGadget {
    pub s: usize,
    pub u: [usize; 6],
    pub v: [usize; 6],
    pub branches: [Branch; 3],
}

impl VarGadget {
    /// Arcs of the trunk path `s, u1..u6` (x = 0) or `s, v1..v6` (x = 1).
    pub fn trunk_path(&self, value: bool) -> [(usize, usize); 6] {
        let side = if value { &self.v } else { &self.u };
        let mut out = [(self.s, side[0]); 6];
        for z in 1..6 {
            out[z] = (side[z - 1], side[z]);
        }
        out
    }

    /// Node sequence of P(i, p) (x = 0) or Q(i, p) (x = 1): length 9.
    pub fn long_path(&self, value: bool, p: usize) -> [usize; 10] {
        let b = &self.branches[p];
        let (side, c7, c8) = if value { (&self.v, b.v7, b.v8) } else { (&self.u, b.u7, b.u8) };
        let mut out = [self.s; 10];
        out[1..7].copy_from_slice(side);
        out[7] = c7;
        out[8] = c8;
        out[9] = b.t;
        out
    }
}

/// Distinct branch, in the roles of the gadget that allocated it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchNodes {
    pub u7: usize,
    pub u8: usize,
    pub v7: usize,
    pub v8: usize,
    pub t: usize,
    pub shared: bool,
}

#[derive(Debug, Clone)]
pub struct GadgetGraph {
    /// Normalized formula the graph encodes.
    pub formula: XorFormula,
    pub graph: StaticGraph,
    pub gadgets: Vec<VarGadget>,
    pub branches: Vec<BranchNodes>,
}

/// Normalize `phi`, check occurrence bounds, build G_φ and verify its shape.
pub fn build_gadget_graph(phi: &XorFormula) -> Result<GadgetGraph> {
    let phi = phi.normalized()?;
    for (var, &count) in phi.variable_occurrences().iter().enumerate() {
        if count > 3 {
            return Err(Error::TooManyOccurrences { var, count });
        }
    }
    let n = phi.vars;
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, &(a, b)) in phi.clauses.iter().enumerate() {
        occ[a.var].push(c);
        occ[b.var].push(c);
    }

    let mut next = 0;
    let mut fresh = || {
        next += 1;
        next - 1
    };
    let mut gadgets: Vec<VarGadget> = Vec::with_capacity(n);
    let mut branches = Vec::new();
    for i in 0..n {
        let s = fresh();
        let u = [0; 6].map(|_| fresh());
        let v = [0; 6].map(|_| fresh());
        let mut bs = Vec::with_capacity(3);
        for p in 0..3 {
            let clause = occ[i].get(p).copied();
            let owner = clause.map(|c| phi.clauses[c]).filter(|(a, _)| a.var != i);
            let b = match owner {
                // Second variable of the clause: reuse the first one's branch.
                Some((a, lit)) => {
                    let c = clause.unwrap();
                    let q = occ[a.var].iter().position(|&x| x == c).unwrap();
                    let o = gadgets[a.var].branches[q];
                    let (u7, u8, v7, v8) = if lit.neg {
                        (o.u7, o.u8, o.v7, o.v8)
                    } else {
                        (o.v7, o.v8, o.u7, o.u8)
                    };
                    Branch { u7, u8, v7, v8, t: o.t, id: o.id, clause }
                }
                None => {
                    let nodes = BranchNodes {
                        u7: fresh(),
                        u8: fresh(),
                        v7: fresh(),
                        v8: fresh(),
                        t: fresh(),
                        shared: clause.is_some(),
                    };
                    branches.push(nodes);
                    Branch {
                        u7: nodes.u7,
                        u8: nodes.u8,
                        v7: nodes.v7,
                        v8: nodes.v8,
                        t: nodes.t,
                        id: branches.len() - 1,
                        clause,
                    }
                }
            };
            bs.push(b);
        }
        gadgets.push(VarGadget {
            s,
            u,
            v,
            branches: [bs[0], bs[1], bs[2]],
        });
    }

    let mut arcs = BTreeSet::new();
    for g in &gadgets {
        arcs.insert((g.s, g.u[0]));
        arcs.insert((g.s, g.v[0]));
        for z in 0..6 {
            if z < 5 {
                arcs.insert((g.u[z], g.u[z + 1]));
                arcs.insert((g.v[z], g.v[z + 1]));
            }
            arcs.insert((g.u[z], g.v[z]));
            arcs.insert((g.v[z], g.u[z]));
        }
        for b in &g.branches {
            arcs.extend([
                (g.u[5], b.u7),
                (g.v[5], b.v7),
                (b.u7, b.u8),
                (b.u8, b.t),
                (b.v7, b.v8),
                (b.v8, b.t),
                (b.u7, b.v7),
                (b.v7, b.u7),
                (b.u8, b.v8),
                (b.v8, b.u8),
            ]);
        }
    }
    let graph = StaticGraph::new(next, true, arcs)?;
    let gg = GadgetGraph {
        formula: phi,
        graph,
        gadgets,
        branches,
    };
    gg.check_structure()?;
    Ok(gg)
}

impl GadgetGraph {
    pub fn vars(&self) -> usize {
        self.formula.vars
    }

    /// 39n − 4m − 2k: cost of the canonical labeling of an assignment
    /// satisfying `k` clauses.
    pub fn expected_cost(&self, satisfied: usize) -> usize {
        39 * self.vars() - 4 * self.formula.clause_count() - 2 * satisfied
    }

    /// Diameter 9, no cycle longer than two, 3n − 2m single and m shared
    /// branches, and for every gadget and branch exactly two s→t paths of
    /// length 9 (P and Q) with nothing shorter.
    pub fn check_structure(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Invalid(format!("gadget graph: {what}")));
        let (n, m) = (self.vars(), self.formula.clause_count());
        if n > 0 && diameter(&self.graph) != GADGET_AGE as usize {
            return fail("diameter is not 9");
        }
        if !cycles_at_most_two(&self.graph) {
            return fail("cycle longer than two");
        }
        let shared = self.branches.iter().filter(|b| b.shared).count();
        if shared != m || self.branches.len() - shared != 3 * n - 2 * m {
            return fail("wrong branch counts");
        }
        for g in &self.gadgets {
            let dist = bfs_distances(&self.graph, g.s);
            for (p, b) in g.branches.iter().enumerate() {
                if dist[b.t] != Some(GADGET_AGE as usize) {
                    return fail("terminal not at distance 9");
                }
                let mut found = Vec::new();
                let mut stack = vec![g.s];
                self.paths_of_len(&mut stack, b.t, GADGET_AGE as usize, &mut found);
                let mut want = vec![g.long_path(false, p).to_vec(), g.long_path(true, p).to_vec()];
                found.sort();
                want.sort();
                if found != want {
                    return fail("length-9 paths are not exactly P and Q");
                }
            }
        }
        Ok(())
    }

    fn paths_of_len(&self, stack: &mut Vec<usize>, t: usize, len: usize, out: &mut Vec<Vec<usize>>) {
        let x = *stack.last().unwrap();
        if stack.len() == len + 1 {
            if x == t {
                out.push(stack.clone());
            }
            return;
        }
        for &(y, _) in self.graph.out_neighbors(x) {
            if !stack.contains(&y) {
                stack.push(y);
                self.paths_of_len(stack, t, len, out);
                stack.pop();
            }
        }
    }

    /// Canonical reach-preserving labeling of age 9 for `assignment`.
    pub fn labeling_from_assignment(&self, assignment: &[bool]) -> Result<Labeling> {
        if assignment.len() != self.vars() {
            return Err(Error::IncompleteAssignment {
                got: assignment.len(),
                want: self.vars(),
            });
        }
        let mut lab = Labeling::new();
        let mut entries: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.branches.len()];
        for (g, &x) in self.gadgets.iter().zip(assignment) {
            let (a, b) = if x { (&g.v, &g.u) } else { (&g.u, &g.v) };
            for (z, &(p, q)) in g.trunk_path(x).iter().enumerate() {
                lab.insert(p, q, [z as Label + 1]);
            }
            for z in 0..6 {
                lab.insert(b[z], a[z], [z as Label + 1]);
                lab.insert(a[z], b[z], [z as Label + 2]);
            }
            for br in &g.branches {
                let c7 = if x { br.v7 } else { br.u7 };
                lab.insert(a[5], c7, [7]);
                entries[br.id].insert(c7);
            }
        }
        for (br, ent) in self.branches.iter().zip(&entries) {
            let BranchNodes { u7, u8, v7, v8, t, .. } = *br;
            if ent.len() == 2 {
                for (c7, c8, d7, d8) in [(u7, u8, v7, v8), (v7, v8, u7, u8)] {
                    lab.insert(c7, c8, [8]);
                    lab.insert(c8, t, [9]);
                    lab.insert(c7, d7, [8]);
                    lab.insert(c8, d8, [9]);
                }
            } else {
                let (c7, c8, d7, d8) = if ent.contains(&u7) { (u7, u8, v7, v8) } else { (v7, v8, u7, u8) };
                lab.insert(c7, c8, [8]);
                lab.insert(c8, t, [9]);
                lab.insert(c7, d7, [8]);
                lab.insert(d7, c7, [7]);
                lab.insert(c8, d8, [9]);
                lab.insert(d8, c8, [8]);
            }
        }
        Ok(lab)
    }

    /// Read an assignment off a reach-preserving labeling with labels in
    /// `1..=9`. A gadget whose P trunk alone is labeled gives 0, Q alone
    /// gives 1. When both are labeled either value is admissible; variables
    /// are then fixed in index order to the value satisfying more clauses
    /// among those already decided.
    pub fn assignment_from_labeling(&self, labeling: &Labeling) -> Result<Vec<bool>> {
        let tg = TemporalGraph::new(self.graph.clone(), labeling)?;
        if tg.max_label().is_some_and(|l| l > GADGET_AGE) {
            return Err(Error::Precondition(format!("label above {GADGET_AGE}")));
        }
        if !preserves_reach(&tg) {
            return Err(Error::Precondition("reachability is not preserved".into()));
        }
        let labeled = |arcs: [(usize, usize); 6]| {
            arcs.iter()
                .all(|&(a, b)| tg.labels_between(a, b).is_some_and(|ls| !ls.is_empty()))
        };
        let mut fixed: Vec<Option<bool>> = Vec::with_capacity(self.vars());
        for (i, g) in self.gadgets.iter().enumerate() {
            fixed.push(match (labeled(g.trunk_path(false)), labeled(g.trunk_path(true))) {
                (true, false) => Some(false),
                (false, true) => Some(true),
                (true, true) => None,
                (false, false) => {
                    return Err(Error::Precondition(format!("neither trunk of x{} is labeled", i + 1)))
                }
            });
        }
        let mut out: Vec<bool> = fixed.iter().map(|f| f.unwrap_or(false)).collect();
        let mut decided: Vec<bool> = fixed.iter().map(Option::is_some).collect();
        for i in 0..self.vars() {
            if decided[i] {
                continue;
            }
            decided[i] = true;
            let score = |out: &[bool]| {
                self.formula
                    .clauses
                    .iter()
                    .filter(|(a, b)| decided[a.var] && decided[b.var])
                    .filter(|(a, b)| a.value(out) != b.value(out))
                    .count()
            };
            let zero = score(&out);
            out[i] = true;
            if score(&out) <= zero {
                out[i] = false;
            }
        }
        Ok(out)
    }

    /// |t(φ)| for the encoded (normalized) formula.
    pub fn satisfied(&self, assignment: &[bool]) -> Result<usize> {
        xor_satisfied_count(&self.formula, assignment)
    }
}
