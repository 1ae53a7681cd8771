//! Region-equation systems over a tribracket and exact solution counting.
//!
//! A system is a set of variables (one per diagram region) with constraints
//! `TriEq(p,q,r,s)` meaning `[x_p, x_q, x_r] = x_s` and `EqVar(i,j)` meaning
//! `x_i = x_j`. The number of solutions over a fixed tribracket is the
//! region-coloring invariant of whatever diagram produced the system.
//!
//! [`count_colorings`] is an exact backtracking counter built on unit
//! propagation: any equation with a single undecided variable determines it
//! (axiom 1), fully decided equations are checked, and only then does the
//! search branch. [`brute_force_count`] deliberately shares none of that
//! machinery; it enumerates raw assignments as a reference oracle.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tribracket::{Element, Slot, Tribracket};

#[derive(Debug, Error)]
pub enum SystemError {
    #[error("variable index {index} out of range (var_count {var_count})")]
    VarRange { index: usize, var_count: usize },
    #[error("unknown variable name {0:?}")]
    UnknownName(String),
    #[error("equation op {op:?} expects {want} arguments, got {got}")]
    ArgCount { op: String, want: usize, got: usize },
    #[error("unknown equation op {0:?}")]
    UnknownOp(String),
    #[error("search space {space} exceeds assignment budget {budget}")]
    BudgetExceeded { space: BigUint, budget: u64 },
    #[error("parse: {0}")]
    Parse(#[from] serde_json::Error),
}

/// `[x_p, x_q, x_r] = x_s`. Repeated variables are allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriEq {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
}

impl TriEq {
    pub fn new(p: usize, q: usize, r: usize, s: usize) -> Self {
        TriEq { p, q, r, s }
    }

    fn vars(&self) -> [usize; 4] {
        [self.p, self.q, self.r, self.s]
    }

    fn map(&self, f: impl Fn(usize) -> usize) -> TriEq {
        TriEq::new(f(self.p), f(self.q), f(self.r), f(self.s))
    }
}

/// A region-equation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSystem {
    pub var_count: usize,
    pub var_names: Option<Vec<String>>,
    pub tri_eqs: Vec<TriEq>,
    pub eq_vars: Vec<(usize, usize)>,
}

impl EquationSystem {
    pub fn new(var_count: usize) -> Self {
        EquationSystem { var_count, var_names: None, tri_eqs: Vec::new(), eq_vars: Vec::new() }
    }

    pub fn with_names(names: &[&str]) -> Self {
        EquationSystem {
            var_count: names.len(),
            var_names: Some(names.iter().map(|s| s.to_string()).collect()),
            tri_eqs: Vec::new(),
            eq_vars: Vec::new(),
        }
    }

    pub fn push_tri(&mut self, p: usize, q: usize, r: usize, s: usize) {
        self.tri_eqs.push(TriEq::new(p, q, r, s));
    }

    pub fn push_eq(&mut self, i: usize, j: usize) {
        self.eq_vars.push((i, j));
    }

    pub fn check_indices(&self) -> Result<(), SystemError> {
        let bad = |index: usize| SystemError::VarRange { index, var_count: self.var_count };
        for eq in &self.tri_eqs {
            if let Some(&index) = eq.vars().iter().find(|&&v| v >= self.var_count) {
                return Err(bad(index));
            }
        }
        for &(i, j) in &self.eq_vars {
            if i >= self.var_count || j >= self.var_count {
                return Err(bad(i.max(j)));
            }
        }
        Ok(())
    }

    pub fn var_name(&self, index: usize) -> String {
        match &self.var_names {
            Some(names) => names[index].clone(),
            None => format!("x{index}"),
        }
    }

    /// Does `assignment` satisfy every constraint?
    pub fn check_coloring(&self, t: &Tribracket, assignment: &[Element]) -> bool {
        assignment.len() == self.var_count
            && assignment.iter().all(|&v| v < t.size())
            && self.eq_vars.iter().all(|&(i, j)| assignment[i] == assignment[j])
            && self.tri_eqs.iter().all(|eq| {
                t.eval(assignment[eq.p], assignment[eq.q], assignment[eq.r]) == assignment[eq.s]
            })
    }
}

/// Simple union-find over variable indices.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            self.parent[i] = self.find(self.parent[i]);
        }
        self.parent[i]
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            // keep the smaller index as root so compaction is stable
            let (lo, hi) = (ri.min(rj), ri.max(rj));
            self.parent[hi] = lo;
        }
    }
}

/// `normalize` plus the map from original variables to normalized ones.
pub struct Normalized {
    pub system: EquationSystem,
    pub class_of: Vec<usize>,
}

/// Merges `EqVar` classes, rewrites equations onto class representatives,
/// drops duplicate constraints and compacts variable indices. Free
/// variables are kept, so the solution count is exactly preserved.
pub fn normalize(sys: &EquationSystem) -> EquationSystem {
    normalize_with_map(sys).system
}

pub fn normalize_with_map(sys: &EquationSystem) -> Normalized {
    let mut dsu = Dsu::new(sys.var_count);
    for &(i, j) in &sys.eq_vars {
        dsu.union(i, j);
    }
    // compact class roots in order of first appearance
    let mut class_of = vec![usize::MAX; sys.var_count];
    let mut class_names: Vec<Vec<usize>> = Vec::new();
    for v in 0..sys.var_count {
        let root = dsu.find(v);
        if class_of[root] == usize::MAX {
            class_of[root] = class_names.len();
            class_names.push(Vec::new());
        }
        class_of[v] = class_of[root];
        class_names[class_of[v]].push(v);
    }
    let mut tri_eqs = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for eq in &sys.tri_eqs {
        let mapped = eq.map(|v| class_of[v]);
        if seen.insert(mapped) {
            tri_eqs.push(mapped);
        }
    }
    let var_names = sys.var_names.as_ref().map(|names| {
        class_names
            .iter()
            .map(|members| members.iter().map(|&v| names[v].clone()).collect::<Vec<_>>().join("="))
            .collect()
    });
    Normalized {
        system: EquationSystem { var_count: class_names.len(), var_names, tri_eqs, eq_vars: Vec::new() },
        class_of,
    }
}

/// Replaces each `TriEq(p,q,r,s)` with `TriEq(s,r,q,p)`; this is the
/// equation system of the same diagram with all strand orientations
/// reversed. Involutive.
pub fn reverse_orientation(sys: &EquationSystem) -> EquationSystem {
    EquationSystem {
        var_count: sys.var_count,
        var_names: sys.var_names.clone(),
        tri_eqs: sys.tri_eqs.iter().map(|e| TriEq::new(e.s, e.r, e.q, e.p)).collect(),
        eq_vars: sys.eq_vars.clone(),
    }
}

/// Search statistics; deterministic for a fixed system and tribracket.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub nodes_visited: u64,
    pub propagations: u64,
    pub branch_depth_max: u32,
}

struct Searcher<'a> {
    t: &'a Tribracket,
    eqs: &'a [TriEq],
    occ: &'a [Vec<usize>],
    stats: SolveStats,
}

enum Propagation {
    Consistent,
    Contradiction,
}

enum Resolution {
    Unique(Element),
    Impossible,
    Ambiguous,
}

impl<'a> Searcher<'a> {
    /// Value(s) completing an equation whose single unknown sits in `slot`.
    /// For a quasigroup this is a table lookup and always unique; for a
    /// tensor violating axiom 1 the candidates are scanned, and an
    /// ambiguous slot is left to branching.
    fn resolve_single(&self, slot: Slot, known: [Element; 3]) -> Resolution {
        if matches!(slot, Slot::D) {
            return Resolution::Unique(self.t.eval(known[0], known[1], known[2]));
        }
        if self.t.is_quasigroup() {
            return Resolution::Unique(self.t.solve_slot(slot, known));
        }
        let mut found = None;
        for v in 0..self.t.size() {
            let hit = match slot {
                Slot::A => self.t.eval(v, known[0], known[1]) == known[2],
                Slot::B => self.t.eval(known[0], v, known[1]) == known[2],
                Slot::C => self.t.eval(known[0], known[1], v) == known[2],
                Slot::D => unreachable!(),
            };
            if hit {
                if found.is_some() {
                    return Resolution::Ambiguous;
                }
                found = Some(v);
            }
        }
        match found {
            Some(v) => Resolution::Unique(v),
            None => Resolution::Impossible,
        }
    }

    /// Runs unit propagation to a fixed point. Newly decided variables are
    /// pushed onto `trail` so the caller can undo.
    fn propagate(&mut self, assign: &mut [Option<Element>], trail: &mut Vec<usize>) -> Propagation {
        loop {
            let mut changed = false;
            for eq in self.eqs {
                let vals = [assign[eq.p], assign[eq.q], assign[eq.r], assign[eq.s]];
                let undecided = vals.iter().filter(|v| v.is_none()).count();
                match undecided {
                    0 => {
                        let (a, b, c, d) =
                            (vals[0].unwrap(), vals[1].unwrap(), vals[2].unwrap(), vals[3].unwrap());
                        if self.t.eval(a, b, c) != d {
                            return Propagation::Contradiction;
                        }
                    }
                    1 => {
                        let (slot, var, known) = if vals[0].is_none() {
                            (Slot::A, eq.p, [vals[1].unwrap(), vals[2].unwrap(), vals[3].unwrap()])
                        } else if vals[1].is_none() {
                            (Slot::B, eq.q, [vals[0].unwrap(), vals[2].unwrap(), vals[3].unwrap()])
                        } else if vals[2].is_none() {
                            (Slot::C, eq.r, [vals[0].unwrap(), vals[1].unwrap(), vals[3].unwrap()])
                        } else {
                            (Slot::D, eq.s, [vals[0].unwrap(), vals[1].unwrap(), vals[2].unwrap()])
                        };
                        match self.resolve_single(slot, known) {
                            Resolution::Unique(value) => {
                                assign[var] = Some(value);
                                trail.push(var);
                                self.stats.propagations += 1;
                                changed = true;
                            }
                            Resolution::Impossible => return Propagation::Contradiction,
                            Resolution::Ambiguous => {}
                        }
                    }
                    _ => {}
                }
            }
            if !changed {
                return Propagation::Consistent;
            }
        }
    }

    /// Branch variable: most constraint occurrences, ties to lowest index.
    fn pick_branch_var(&self, assign: &[Option<Element>]) -> Option<usize> {
        assign
            .iter()
            .enumerate()
            .filter(|(v, a)| a.is_none() && !self.occ[*v].is_empty())
            .max_by(|(v1, _), (v2, _)| {
                self.occ[*v1].len().cmp(&self.occ[*v2].len()).then(v2.cmp(v1))
            })
            .map(|(v, _)| v)
    }

    fn count(&mut self, assign: &mut [Option<Element>], depth: u32) -> BigUint {
        self.stats.nodes_visited += 1;
        self.stats.branch_depth_max = self.stats.branch_depth_max.max(depth);
        let mut trail = Vec::new();
        if matches!(self.propagate(assign, &mut trail), Propagation::Contradiction) {
            for v in trail {
                assign[v] = None;
            }
            return BigUint::ZERO;
        }
        let total = match self.pick_branch_var(assign) {
            None => BigUint::from(1u32),
            Some(var) => {
                let mut sum = BigUint::ZERO;
                for value in 0..self.t.size() {
                    assign[var] = Some(value);
                    sum += self.count(assign, depth + 1);
                }
                assign[var] = None;
                sum
            }
        };
        for v in trail {
            assign[v] = None;
        }
        total
    }

    fn enumerate(
        &mut self,
        assign: &mut [Option<Element>],
        free_vars: &[usize],
        limit: usize,
        out: &mut Vec<Vec<Element>>,
    ) {
        if out.len() >= limit {
            return;
        }
        let mut trail = Vec::new();
        if matches!(self.propagate(assign, &mut trail), Propagation::Consistent) {
            match self.pick_branch_var(assign) {
                None => self.emit_free(assign, free_vars, 0, limit, out),
                Some(var) => {
                    for value in 0..self.t.size() {
                        assign[var] = Some(value);
                        self.enumerate(assign, free_vars, limit, out);
                        if out.len() >= limit {
                            break;
                        }
                    }
                    assign[var] = None;
                }
            }
        }
        for v in trail {
            assign[v] = None;
        }
    }

    /// Expands unconstrained variables in lexicographic order.
    fn emit_free(
        &self,
        assign: &mut [Option<Element>],
        free_vars: &[usize],
        i: usize,
        limit: usize,
        out: &mut Vec<Vec<Element>>,
    ) {
        if out.len() >= limit {
            return;
        }
        if i == free_vars.len() {
            out.push(assign.iter().map(|v| v.expect("complete assignment")).collect());
            return;
        }
        for value in 0..self.t.size() {
            assign[free_vars[i]] = Some(value);
            self.emit_free(assign, free_vars, i + 1, limit, out);
            if out.len() >= limit {
                break;
            }
        }
        assign[free_vars[i]] = None;
    }
}

fn occurrences(var_count: usize, eqs: &[TriEq]) -> Vec<Vec<usize>> {
    let mut occ = vec![Vec::new(); var_count];
    for (i, eq) in eqs.iter().enumerate() {
        let mut vars = eq.vars().to_vec();
        vars.sort_unstable();
        vars.dedup();
        for v in vars {
            occ[v].push(i);
        }
    }
    occ
}

/// Exact number of colorings of `sys` over `t`, with search statistics.
///
/// On a valid tribracket every single-unknown equation propagates through
/// the precomputed inverse tables. Tensors violating axiom 1 are still
/// counted exactly: an unknown with no completion prunes, a unique one
/// propagates, and an ambiguous one is left to branching.
pub fn count_colorings(sys: &EquationSystem, t: &Tribracket) -> (BigUint, SolveStats) {
    let norm = normalize(sys);
    let occ = occurrences(norm.var_count, &norm.tri_eqs);
    let free = occ.iter().filter(|o| o.is_empty()).count();
    let mut searcher = Searcher { t, eqs: &norm.tri_eqs, occ: &occ, stats: SolveStats::default() };
    let mut assign = vec![None; norm.var_count];
    let constrained = searcher.count(&mut assign, 0);
    let count = constrained * BigUint::from(t.size()).pow(free as u32);
    (count, searcher.stats)
}

/// Reference oracle: enumerates all `|X|^var_count` assignments and checks
/// every constraint directly. Refuses (never truncates) when the space
/// exceeds `budget`.
pub fn brute_force_count(
    sys: &EquationSystem,
    t: &Tribracket,
    budget: u64,
) -> Result<BigUint, SystemError> {
    let space = BigUint::from(t.size()).pow(sys.var_count as u32);
    if space > BigUint::from(budget) {
        return Err(SystemError::BudgetExceeded { space, budget });
    }
    let n = t.size();
    let mut assign = vec![0usize; sys.var_count];
    let mut count: u64 = 0;
    'outer: loop {
        if sys.check_coloring(t, &assign) {
            count += 1;
        }
        // odometer
        for i in (0..sys.var_count).rev() {
            assign[i] += 1;
            if assign[i] < n {
                continue 'outer;
            }
            assign[i] = 0;
        }
        break;
    }
    Ok(BigUint::from(count))
}

/// Up to `limit` solutions in deterministic (depth-first, ascending color)
/// order, as assignments to the original variables.
pub fn enumerate_colorings(
    sys: &EquationSystem,
    t: &Tribracket,
    limit: usize,
) -> Vec<Vec<Element>> {
    if limit == 0 {
        return Vec::new();
    }
    let norm = normalize_with_map(sys);
    let occ = occurrences(norm.system.var_count, &norm.system.tri_eqs);
    let free_vars: Vec<usize> = (0..norm.system.var_count).filter(|&v| occ[v].is_empty()).collect();
    let mut searcher =
        Searcher { t, eqs: &norm.system.tri_eqs, occ: &occ, stats: SolveStats::default() };
    let mut assign = vec![None; norm.system.var_count];
    let mut found = Vec::new();
    searcher.enumerate(&mut assign, &free_vars, limit, &mut found);
    found
        .into_iter()
        .map(|classes| (0..sys.var_count).map(|v| classes[norm.class_of[v]]).collect())
        .collect()
}

/// Orientation-reversal certificate: differing counts prove the underlying
/// surface-link is not isotopic to its reverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertibilityWitness {
    pub forward: BigUint,
    pub reversed: BigUint,
    pub distinguishes: bool,
}

pub fn invertibility_witness(sys: &EquationSystem, t: &Tribracket) -> InvertibilityWitness {
    let (forward, _) = count_colorings(sys, t);
    let (reversed, _) = count_colorings(&reverse_orientation(sys), t);
    let distinguishes = forward != reversed;
    InvertibilityWitness { forward, reversed, distinguishes }
}

#[derive(Debug, Serialize, Deserialize)]
struct SystemFileEq {
    op: String,
    args: Vec<String>,
}

/// JSON form of a system file.
#[derive(Debug, Serialize, Deserialize)]
pub struct SystemFile {
    variables: Vec<String>,
    equations: Vec<SystemFileEq>,
}

impl SystemFile {
    pub fn parse(json: &str) -> Result<EquationSystem, SystemError> {
        let file: SystemFile = serde_json::from_str(json)?;
        let lookup: std::collections::HashMap<&str, usize> =
            file.variables.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
        let resolve = |name: &String| {
            lookup.get(name.as_str()).copied().ok_or_else(|| SystemError::UnknownName(name.clone()))
        };
        let mut sys = EquationSystem {
            var_count: file.variables.len(),
            var_names: Some(file.variables.clone()),
            tri_eqs: Vec::new(),
            eq_vars: Vec::new(),
        };
        for eq in &file.equations {
            match eq.op.as_str() {
                "tri" => {
                    if eq.args.len() != 4 {
                        return Err(SystemError::ArgCount {
                            op: eq.op.clone(),
                            want: 4,
                            got: eq.args.len(),
                        });
                    }
                    sys.push_tri(
                        resolve(&eq.args[0])?,
                        resolve(&eq.args[1])?,
                        resolve(&eq.args[2])?,
                        resolve(&eq.args[3])?,
                    );
                }
                "eq" => {
                    if eq.args.len() != 2 {
                        return Err(SystemError::ArgCount {
                            op: eq.op.clone(),
                            want: 2,
                            got: eq.args.len(),
                        });
                    }
                    sys.push_eq(resolve(&eq.args[0])?, resolve(&eq.args[1])?);
                }
                other => return Err(SystemError::UnknownOp(other.to_string())),
            }
        }
        Ok(sys)
    }

    pub fn render(sys: &EquationSystem) -> String {
        let name = |v: usize| sys.var_name(v);
        let equations = sys
            .tri_eqs
            .iter()
            .map(|e| SystemFileEq {
                op: "tri".into(),
                args: vec![name(e.p), name(e.q), name(e.r), name(e.s)],
            })
            .chain(sys.eq_vars.iter().map(|&(i, j)| SystemFileEq {
                op: "eq".into(),
                args: vec![name(i), name(j)],
            }))
            .collect();
        let file = SystemFile {
            variables: (0..sys.var_count).map(name).collect(),
            equations,
        };
        serde_json::to_string_pretty(&file).expect("serialize system")
    }
}
