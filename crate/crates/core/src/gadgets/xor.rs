//! 2-CNF formulas read as XOR constraints.

use std::fmt;

use crate::error::{guard, Error, Result};
use crate::limits::Limits;

/// Variable `var` (0-based), negated when `neg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit {
    pub var: usize,
    pub neg: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit { var, neg: false }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, neg: true }
    }

    pub fn negated(self) -> Self {
        Lit {
            neg: !self.neg,
            ..self
        }
    }

    pub fn value(self, assignment: &[bool]) -> bool {
        assignment[self.var] ^ self.neg
    }

    /// DIMACS style: `±(var + 1)`.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.neg {
            -v
        } else {
            v
        }
    }

    pub fn from_dimacs(x: i64) -> Option<Self> {
        (x != 0).then(|| Lit {
            var: x.unsigned_abs() as usize - 1,
            neg: x < 0,
        })
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", if self.neg { "¬" } else { "" }, self.var + 1)
    }
}

/// A 2-CNF formula; a clause counts when exactly one literal is true.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XorFormula {
    pub vars: usize,
    pub clauses: Vec<(Lit, Lit)>,
}

impl XorFormula {
    pub fn new(vars: usize, clauses: Vec<(Lit, Lit)>) -> Result<Self> {
        for &(a, b) in &clauses {
            for l in [a, b] {
                if l.var >= vars {
                    return Err(Error::UnknownNode { node: l.var, n: vars });
                }
            }
        }
        Ok(XorFormula { vars, clauses })
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Number of clauses mentioning each variable (a clause on one variable
    /// twice counts twice).
    pub fn variable_occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.vars];
        for &(a, b) in &self.clauses {
            occ[a.var] += 1;
            occ[b.var] += 1;
        }
        occ
    }

    /// Largest number of clauses any single literal appears in.
    pub fn max_literal_occurrences(&self) -> usize {
        let mut occ = vec![[0usize; 2]; self.vars];
        for &(a, b) in &self.clauses {
            occ[a.var][a.neg as usize] += 1;
            occ[b.var][b.neg as usize] += 1;
        }
        occ.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rewrite every clause as `(x_i ∨ x_j)` or `(x_i ∨ ¬x_j)` with `i < j`,
    /// using `¬a ⊕ ¬b = a ⊕ b` and `¬a ⊕ b = a ⊕ ¬b`.
    pub fn normalized(&self) -> Result<Self> {
        let mut clauses = Vec::with_capacity(self.clauses.len());
        for &(a, b) in &self.clauses {
            if a.var == b.var {
                return Err(Error::DegenerateClause(a.var));
            }
            let (i, j) = (a.var.min(b.var), a.var.max(b.var));
            clauses.push((Lit::pos(i), Lit { var: j, neg: a.neg != b.neg }));
        }
        Ok(XorFormula {
            vars: self.vars,
            clauses,
        })
    }

    pub fn is_normalized(&self) -> bool {
        self.clauses.iter().all(|&(a, b)| !a.neg && a.var < b.var)
    }
}

impl fmt::Display for XorFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.clauses.iter().map(|(a, b)| format!("({a} ∨ {b})")).collect();
        f.write_str(&parts.join(" ∧ "))
    }
}

/// |t(φ)|: clauses whose two literals disagree under `assignment`.
pub fn xor_satisfied_count(phi: &XorFormula, assignment: &[bool]) -> Result<usize> {
    if assignment.len() != phi.vars {
        return Err(Error::IncompleteAssignment {
            got: assignment.len(),
            want: phi.vars,
        });
    }
    Ok(phi
        .clauses
        .iter()
        .filter(|(a, b)| a.value(assignment) != b.value(assignment))
        .count())
}

/// Best count over all `2^n` assignments, with the first assignment (in
/// binary counting order, variable 0 lowest) attaining it.
pub fn max_xor_brute(phi: &XorFormula, limits: &Limits) -> Result<(usize, Vec<bool>)> {
    guard("max-xor variables", limits.xor_vars.min(63), phi.vars)?;
    let mut best = (0, vec![false; phi.vars]);
    let mut tau = vec![false; phi.vars];
    for bits in 0u64..1 << phi.vars {
        for (i, t) in tau.iter_mut().enumerate() {
            *t = bits >> i & 1 == 1;
        }
        let k = xor_satisfied_count(phi, &tau)?;
        if k > best.0 || bits == 0 {
            best = (k, tau.clone());
        }
    }
    Ok(best)
}

/// Replace each clause `α = (ℓ1 ∨ ℓ2)` by `(ℓ1 ∨ x_α), (ℓ2 ∨ y_α),
/// (x_α ∨ y_α)` with fresh `x_α = n + 2α`, `y_α = n + 2α + 1`.
pub fn reduce_maxxor_to_3(phi: &XorFormula) -> XorFormula {
    let n = phi.vars;
    let mut clauses = Vec::with_capacity(3 * phi.clauses.len());
    for (a, &(l1, l2)) in phi.clauses.iter().enumerate() {
        let (x, y) = (Lit::pos(n + 2 * a), Lit::pos(n + 2 * a + 1));
        clauses.extend([(l1, x), (l2, y), (x, y)]);
    }
    XorFormula {
        vars: n + 2 * phi.clauses.len(),
        clauses,
    }
}

/// Lift an assignment of `phi` to its reduction: `x_α = ¬ℓ1`, `y_α = ¬ℓ2`.
pub fn extend_assignment(phi: &XorFormula, assignment: &[bool]) -> Result<Vec<bool>> {
    if assignment.len() != phi.vars {
        return Err(Error::IncompleteAssignment {
            got: assignment.len(),
            want: phi.vars,
        });
    }
    let mut out = assignment.to_vec();
    for &(l1, l2) in &phi.clauses {
        out.push(!l1.value(assignment));
        out.push(!l2.value(assignment));
    }
    Ok(out)
}
