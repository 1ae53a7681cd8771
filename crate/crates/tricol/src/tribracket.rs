//! Finite tribrackets (knot-theoretic ternary quasigroups).
//!
//! A tribracket on a finite set `X = {0, .., n-1}` is a ternary product
//! `[a,b,c]` such that any three of `(a, b, c, [a,b,c])` determine the
//! fourth (axiom 1), and for all `a,b,c,d`
//!
//! ```text
//! [b, [a,b,c], [a,b,d]] = [c, [a,b,c], [a,c,d]] = [d, [a,b,d], [a,c,d]]
//! ```
//!
//! (axiom 2). The tensor is stored row-major as `tensor[a][b][c] = [a,b,c]`,
//! always 0-indexed internally; the JSON format carries a `one_indexed` flag
//! because published tensors are usually written on `{1, .., n}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A color, i.e. an element of the underlying set of a tribracket.
pub type Element = usize;

#[derive(Debug, Error)]
pub enum TribracketError {
    #[error("tensor has {got} entries, expected {want} for size {size}")]
    TensorShape { size: usize, got: usize, want: usize },
    #[error("tensor entry {value} out of range for size {size}")]
    EntryRange { value: usize, size: usize },
    #[error("size must be positive")]
    EmptySet,
    #[error("operation requires a tribracket satisfying axiom 1")]
    NotInvertible,
    #[error("invalid group table: {0}")]
    BadGroup(String),
    #[error("enumeration budget of {budget} nodes exhausted after {found} tribrackets")]
    BudgetExhausted { budget: u64, found: u64 },
    #[error("io: {0}")]
    Io(String),
    #[error("parse: {0}")]
    Parse(#[from] serde_json::Error),
}

/// Which slot of `[a,b,c] = d` is unknown in [`Tribracket::solve_slot`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    A,
    B,
    C,
    D,
}

/// One axiom-1 failure: a line through the tensor that is not a permutation.
///
/// `axis` is the varied argument position (0 = a, 1 = b, 2 = c), `fixed`
/// the two pinned coordinates in argument order, and `value` a product
/// value that occurs more than once on the line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Axiom1Failure {
    pub axis: usize,
    pub fixed: [Element; 2],
    pub value: Element,
}

/// One axiom-2 failure: a quadruple whose three expressions disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Axiom2Failure {
    pub quad: [Element; 4],
    pub values: [Element; 3],
}

/// Result of exhaustively checking both tribracket axioms.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub axiom1_failures: Vec<Axiom1Failure>,
    pub axiom2_failures: Vec<Axiom2Failure>,
}

/// A finite tribracket given by its product tensor.
///
/// When the tensor satisfies axiom 1, the three inverse tables are
/// precomputed at construction so [`Tribracket::solve_slot`] is a lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tribracket {
    size: usize,
    tensor: Vec<Element>,
    inverses: Option<Inverses>,
}

/// `inv_a[d][b][c] = a`, `inv_b[a][d][c] = b`, `inv_c[a][b][d] = c`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Inverses {
    inv_a: Vec<Element>,
    inv_b: Vec<Element>,
    inv_c: Vec<Element>,
}

impl Tribracket {
    /// Builds a tribracket from a flattened `n*n*n` tensor
    /// (`tensor[a*n*n + b*n + c] = [a,b,c]`). Entries are range-checked;
    /// axiom violations are not an error here, see [`Tribracket::validate`].
    pub fn from_flat_tensor(size: usize, tensor: Vec<Element>) -> Result<Self, TribracketError> {
        if size == 0 {
            return Err(TribracketError::EmptySet);
        }
        let want = size * size * size;
        if tensor.len() != want {
            return Err(TribracketError::TensorShape { size, got: tensor.len(), want });
        }
        if let Some(&value) = tensor.iter().find(|&&v| v >= size) {
            return Err(TribracketError::EntryRange { value, size });
        }
        let mut t = Tribracket { size, tensor, inverses: None };
        t.inverses = t.build_inverses();
        Ok(t)
    }

    /// Builds from nested slices `tensor[a][b][c]`.
    pub fn from_tensor(tensor: &[Vec<Vec<Element>>]) -> Result<Self, TribracketError> {
        let size = tensor.len();
        let mut flat = Vec::with_capacity(size * size * size);
        for slice in tensor {
            if slice.len() != size {
                return Err(TribracketError::TensorShape {
                    size,
                    got: slice.len(),
                    want: size,
                });
            }
            for row in slice {
                if row.len() != size {
                    return Err(TribracketError::TensorShape { size, got: row.len(), want: size });
                }
                flat.extend_from_slice(row);
            }
        }
        Self::from_flat_tensor(size, flat)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// True when axiom 1 holds (so `solve_slot` is available).
    pub fn is_quasigroup(&self) -> bool {
        self.inverses.is_some()
    }

    fn idx(&self, a: Element, b: Element, c: Element) -> usize {
        (a * self.size + b) * self.size + c
    }

    /// The product `[a,b,c]`. Panics if an argument is out of range.
    pub fn eval(&self, a: Element, b: Element, c: Element) -> Element {
        assert!(a < self.size && b < self.size && c < self.size, "element out of range");
        self.tensor[self.idx(a, b, c)]
    }

    /// Completes `[a,b,c] = d` for the unknown `slot` given the other three
    /// values in argument order (skipping the unknown).
    ///
    /// Panics if axiom 1 does not hold; check [`Tribracket::is_quasigroup`]
    /// or validate first.
    pub fn solve_slot(&self, slot: Slot, known: [Element; 3]) -> Element {
        let inv = self.inverses.as_ref().expect("solve_slot on a tensor violating axiom 1");
        let [x, y, z] = known;
        match slot {
            // known = (b, c, d), find a
            Slot::A => inv.inv_a[(z * self.size + x) * self.size + y],
            // known = (a, c, d), find b
            Slot::B => inv.inv_b[(x * self.size + z) * self.size + y],
            // known = (a, b, d), find c
            Slot::C => inv.inv_c[(x * self.size + y) * self.size + z],
            Slot::D => self.eval(x, y, z),
        }
    }

    fn build_inverses(&self) -> Option<Inverses> {
        let n = self.size;
        let len = n * n * n;
        let (mut inv_a, mut inv_b, mut inv_c) = (vec![usize::MAX; len], vec![usize::MAX; len], vec![usize::MAX; len]);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let d = self.tensor[self.idx(a, b, c)];
                    let ia = (d * n + b) * n + c;
                    let ib = (a * n + d) * n + c;
                    let ic = (a * n + b) * n + d;
                    if inv_a[ia] != usize::MAX || inv_b[ib] != usize::MAX || inv_c[ic] != usize::MAX {
                        return None;
                    }
                    inv_a[ia] = a;
                    inv_b[ib] = b;
                    inv_c[ic] = c;
                }
            }
        }
        Some(Inverses { inv_a, inv_b, inv_c })
    }

    /// Exhaustively checks both axioms and reports every failure.
    pub fn validate(&self) -> ValidationReport {
        let n = self.size;
        let mut axiom1_failures = Vec::new();
        // Axis 2: lines (a, b, .); axis 1: (a, ., c); axis 0: (., b, c).
        for x in 0..n {
            for y in 0..n {
                for (axis, line) in [
                    (2usize, (0..n).map(|c| self.eval(x, y, c)).collect::<Vec<_>>()),
                    (1, (0..n).map(|b| self.eval(x, b, y)).collect()),
                    (0, (0..n).map(|a| self.eval(a, x, y)).collect()),
                ] {
                    let mut seen = vec![false; n];
                    for &v in &line {
                        if seen[v] {
                            axiom1_failures.push(Axiom1Failure { axis, fixed: [x, y], value: v });
                        }
                        seen[v] = true;
                    }
                }
            }
        }
        let mut axiom2_failures = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let abc = self.eval(a, b, c);
                        let abd = self.eval(a, b, d);
                        let acd = self.eval(a, c, d);
                        let values = [
                            self.eval(b, abc, abd),
                            self.eval(c, abc, acd),
                            self.eval(d, abd, acd),
                        ];
                        if values[0] != values[1] || values[1] != values[2] {
                            axiom2_failures.push(Axiom2Failure { quad: [a, b, c, d], values });
                        }
                    }
                }
            }
        }
        ValidationReport {
            valid: axiom1_failures.is_empty() && axiom2_failures.is_empty(),
            axiom1_failures,
            axiom2_failures,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().valid
    }

    /// True iff `[a,b,c] = [b,c,a] = [a,c,b] = [c,b,a]` for all triples.
    pub fn is_commutative(&self) -> bool {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let v = self.eval(a, b, c);
                    if v != self.eval(b, c, a) || v != self.eval(a, c, b) || v != self.eval(c, b, a) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the product is `[a,b,c] = b - a + c` for some abelian group
    /// structure on the set, i.e. the tribracket is the Dehn tribracket of
    /// an abelian group. The candidate group is reconstructed as
    /// `x + y := [0, x, y]` and then checked everywhere.
    pub fn is_abelian_dehn(&self) -> bool {
        let n = self.size;
        let add = |x: Element, y: Element| self.eval(0, x, y);
        // [0,x,y] must be a commutative group with identity [0,0,0] = 0.
        if add(0, 0) != 0 {
            return false;
        }
        for x in 0..n {
            if add(x, 0) != x || add(0, x) != x {
                return false;
            }
            for y in 0..n {
                if add(x, y) != add(y, x) {
                    return false;
                }
                for z in 0..n {
                    if add(add(x, y), z) != add(x, add(y, z)) {
                        return false;
                    }
                }
            }
        }
        let mut neg = vec![None; n];
        for x in 0..n {
            for y in 0..n {
                if add(x, y) == 0 {
                    neg[x] = Some(y);
                }
            }
        }
        let Some(neg): Option<Vec<Element>> = neg.into_iter().collect() else {
            return false;
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.eval(a, b, c) != add(add(b, neg[a]), c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn flat_tensor(&self) -> &[Element] {
        &self.tensor
    }

    pub fn to_nested_tensor(&self) -> Vec<Vec<Vec<Element>>> {
        let n = self.size;
        (0..n)
            .map(|a| (0..n).map(|b| (0..n).map(|c| self.eval(a, b, c)).collect()).collect())
            .collect()
    }
}

/// A finite group presented by its Cayley table, `cayley[i][j] = i * j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    size: usize,
    cayley: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates associativity, the two-sided identity, two-sided inverses
    /// and that every row and column is a permutation.
    pub fn from_cayley(size: usize, cayley: Vec<usize>, identity: usize) -> Result<Self, TribracketError> {
        let bad = |m: &str| Err(TribracketError::BadGroup(m.to_string()));
        if size == 0 {
            return bad("empty set");
        }
        if cayley.len() != size * size {
            return bad("cayley table shape");
        }
        if identity >= size || cayley.iter().any(|&v| v >= size) {
            return bad("entry out of range");
        }
        let mul = |i: usize, j: usize| cayley[i * size + j];
        for i in 0..size {
            if mul(identity, i) != i || mul(i, identity) != i {
                return bad("identity is not two-sided");
            }
            let mut row = vec![false; size];
            let mut col = vec![false; size];
            for j in 0..size {
                if std::mem::replace(&mut row[mul(i, j)], true) {
                    return bad("row is not a permutation");
                }
                if std::mem::replace(&mut col[mul(j, i)], true) {
                    return bad("column is not a permutation");
                }
            }
        }
        for i in 0..size {
            for j in 0..size {
                for k in 0..size {
                    if mul(mul(i, j), k) != mul(i, mul(j, k)) {
                        return bad("not associative");
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; size];
        for i in 0..size {
            for j in 0..size {
                if mul(i, j) == identity && mul(j, i) == identity {
                    inverse[i] = j;
                }
            }
        }
        if inverse.iter().any(|&v| v == usize::MAX) {
            return bad("missing two-sided inverse");
        }
        Ok(FiniteGroup { size, cayley, identity, inverse })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i * self.size + j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        let cayley = (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect();
        FiniteGroup::from_cayley(n, cayley, 0).expect("cyclic group table")
    }

    /// Direct product; element `(x, y)` is indexed as `x * other.size + y`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let n = self.size * other.size;
        let mut cayley = Vec::with_capacity(n * n);
        for x1 in 0..self.size {
            for y1 in 0..other.size {
                for x2 in 0..self.size {
                    for y2 in 0..other.size {
                        cayley.push(self.mul(x1, x2) * other.size + other.mul(y1, y2));
                    }
                }
            }
        }
        let identity = self.identity * other.size + other.identity;
        FiniteGroup::from_cayley(n, cayley, identity).expect("product group table")
    }

    /// Symmetric group on `n` letters; elements are permutations of
    /// `0..n` in lexicographic order, composed right-to-left.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index: std::collections::HashMap<Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let order = perms.len();
        let mut cayley = Vec::with_capacity(order * order);
        for p in &perms {
            for q in &perms {
                let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                cayley.push(index[&composed]);
            }
        }
        let identity = index[&(0..n).collect::<Vec<_>>()];
        FiniteGroup::from_cayley(order, cayley, identity).expect("symmetric group table")
    }

    /// Dihedral group of order `2n`: element `i + n*j` is `r^i s^j`.
    pub fn dihedral(n: usize) -> Self {
        let order = 2 * n;
        let mut cayley = vec![0; order * order];
        for i in 0..n {
            for j in 0..2 {
                for k in 0..n {
                    for l in 0..2 {
                        // (r^i s^j)(r^k s^l) = r^(i + k or i - k) s^(j xor l)
                        let rot = if j == 0 { (i + k) % n } else { (i + n - k % n) % n };
                        let refl = j ^ l;
                        cayley[(i + n * j) * order + (k + n * l)] = rot + n * refl;
                    }
                }
            }
        }
        FiniteGroup::from_cayley(order, cayley, 0).expect("dihedral group table")
    }

    /// Quaternion group of order 8: `1, -1, i, -i, j, -j, k, -k`.
    pub fn quaternion() -> Self {
        // (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k.
        let idx = |sign: usize, axis: usize| axis * 2 + sign;
        let mut cayley = vec![0; 64];
        for s1 in 0..2 {
            for a1 in 0..4 {
                for s2 in 0..2 {
                    for a2 in 0..4 {
                        let (s3, a3) = quat_mul(a1, a2);
                        let sign = (s1 + s2 + s3) % 2;
                        cayley[idx(s1, a1) * 8 + idx(s2, a2)] = idx(sign, a3);
                    }
                }
            }
        }
        FiniteGroup::from_cayley(8, cayley, 0).expect("quaternion group table")
    }
}

/// Unit quaternion product of axes: returns (sign flip, axis).
fn quat_mul(a: usize, b: usize) -> (usize, usize) {
    match (a, b) {
        (0, x) => (0, x),
        (x, 0) => (0, x),
        (x, y) if x == y => (1, 0),
        // i*j = k, j*k = i, k*i = j, reverses flip sign
        (1, 2) => (0, 3),
        (2, 3) => (0, 1),
        (3, 1) => (0, 2),
        (2, 1) => (1, 3),
        (3, 2) => (1, 1),
        (1, 3) => (1, 2),
        _ => unreachable!(),
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn rec(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        // lexicographic order: choose each remaining element in order
        let rest: Vec<usize> = items[k..].to_vec();
        let mut sorted = rest.clone();
        sorted.sort_unstable();
        for &chosen in &sorted {
            let pos = items[k..].iter().position(|&x| x == chosen).unwrap() + k;
            items.swap(k, pos);
            let moved = items[k..].to_vec();
            rec(k + 1, items, out);
            items[k..].copy_from_slice(&moved);
            let pos = items[k..].iter().position(|&x| x == chosen).unwrap() + k;
            items.swap(k, pos);
        }
    }
    rec(0, &mut items, &mut out);
    out
}

/// The Dehn tribracket of a group: `[a,b,c] = b * a^-1 * c`.
pub fn dehn_tribracket(group: &FiniteGroup) -> Tribracket {
    let n = group.size();
    let mut tensor = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                tensor.push(group.mul(group.mul(b, group.inv(a)), c));
            }
        }
    }
    Tribracket::from_flat_tensor(n, tensor).expect("dehn tensor in range")
}

/// Backtracking enumeration of every valid size-`n` tribracket, in
/// lexicographic order of the flattened tensor.
///
/// Cells are filled in row-major order; a branch is pruned as soon as an
/// axiom-1 line repeats a value or an axiom-2 quadruple with all entries
/// decided disagrees. Each attempted cell assignment costs one node of
/// `budget`; when the budget runs out the iterator yields
/// [`TribracketError::BudgetExhausted`] once and stops.
pub fn enumerate_tribrackets(n: usize, budget: Option<u64>) -> TribracketEnumerator {
    TribracketEnumerator::new(n, budget)
}

pub struct TribracketEnumerator {
    n: usize,
    cells: Vec<Option<Element>>,
    // used values per line: (a,b,.), (a,.,c), (.,b,c)
    used_ab: Vec<Vec<bool>>,
    used_ac: Vec<Vec<bool>>,
    used_bc: Vec<Vec<bool>>,
    pos: usize,
    nodes: u64,
    budget: Option<u64>,
    found: u64,
    exhausted: bool,
    budget_reported: bool,
}

impl TribracketEnumerator {
    fn new(n: usize, budget: Option<u64>) -> Self {
        let lines = n * n;
        TribracketEnumerator {
            n,
            cells: vec![None; n * n * n],
            used_ab: vec![vec![false; n]; lines],
            used_ac: vec![vec![false; n]; lines],
            used_bc: vec![vec![false; n]; lines],
            pos: 0,
            nodes: 0,
            budget,
            found: 0,
            exhausted: n == 0,
            budget_reported: false,
        }
    }

    pub fn nodes_visited(&self) -> u64 {
        self.nodes
    }

    fn coords(&self, pos: usize) -> (usize, usize, usize) {
        let n = self.n;
        (pos / (n * n), (pos / n) % n, pos % n)
    }

    fn partial_eval(&self, a: Element, b: Element, c: Element) -> Option<Element> {
        self.cells[(a * self.n + b) * self.n + c]
    }

    /// Checks every axiom-2 quadruple that is fully decided.
    fn axiom2_ok(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let (Some(abc), Some(abd), Some(acd)) = (
                            self.partial_eval(a, b, c),
                            self.partial_eval(a, b, d),
                            self.partial_eval(a, c, d),
                        ) else {
                            continue;
                        };
                        let (Some(x), Some(y)) =
                            (self.partial_eval(b, abc, abd), self.partial_eval(c, abc, acd))
                        else {
                            continue;
                        };
                        if x != y {
                            return false;
                        }
                        if let Some(z) = self.partial_eval(d, abd, acd) {
                            if y != z {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    fn place(&mut self, pos: usize, v: Element) {
        let (a, b, c) = self.coords(pos);
        self.cells[pos] = Some(v);
        self.used_ab[a * self.n + b][v] = true;
        self.used_ac[a * self.n + c][v] = true;
        self.used_bc[b * self.n + c][v] = true;
    }

    fn unplace(&mut self, pos: usize) -> Element {
        let (a, b, c) = self.coords(pos);
        let v = self.cells[pos].take().expect("cell was placed");
        self.used_ab[a * self.n + b][v] = false;
        self.used_ac[a * self.n + c][v] = false;
        self.used_bc[b * self.n + c][v] = false;
        v
    }

    fn line_free(&self, pos: usize, v: Element) -> bool {
        let (a, b, c) = self.coords(pos);
        !self.used_ab[a * self.n + b][v]
            && !self.used_ac[a * self.n + c][v]
            && !self.used_bc[b * self.n + c][v]
    }
}

impl Iterator for TribracketEnumerator {
    type Item = Result<Tribracket, TribracketError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        let total = self.n * self.n * self.n;
        // Resume depth-first search. `pos` is the next cell to fill; when a
        // complete tensor was just yielded, backtrack first.
        let mut next_value: Vec<Element> = vec![0; total + 1];
        // Rebuild resume state: next candidate value at each filled depth.
        for p in 0..self.pos {
            next_value[p] = self.cells[p].unwrap() + 1;
        }
        let mut backtracking = self.pos == total;
        loop {
            if backtracking {
                if self.pos == 0 {
                    self.exhausted = true;
                    return None;
                }
                self.pos -= 1;
                let v = self.unplace(self.pos);
                next_value[self.pos] = v + 1;
                backtracking = false;
            }
            let pos = self.pos;
            let mut v = next_value[pos];
            loop {
                if v >= self.n {
                    backtracking = true;
                    break;
                }
                if let Some(budget) = self.budget {
                    if self.nodes >= budget {
                        self.exhausted = true;
                        if !self.budget_reported {
                            self.budget_reported = true;
                            return Some(Err(TribracketError::BudgetExhausted {
                                budget,
                                found: self.found,
                            }));
                        }
                        return None;
                    }
                }
                self.nodes += 1;
                if self.line_free(pos, v) {
                    self.place(pos, v);
                    if self.axiom2_ok() {
                        next_value[pos] = v + 1;
                        self.pos += 1;
                        next_value[self.pos] = 0;
                        break;
                    }
                    self.unplace(pos);
                }
                v += 1;
            }
            if !backtracking && self.pos == total {
                let tensor: Vec<Element> = self.cells.iter().map(|c| c.unwrap()).collect();
                self.found += 1;
                let t = Tribracket::from_flat_tensor(self.n, tensor).expect("enumerated tensor");
                debug_assert!(t.is_quasigroup());
                return Some(Ok(t));
            }
        }
    }
}

/// JSON form of a tribracket file.
#[derive(Debug, Serialize, Deserialize)]
pub struct TribracketFile {
    pub size: usize,
    #[serde(default)]
    pub one_indexed: bool,
    pub tensor: Vec<Vec<Vec<usize>>>,
}

impl TribracketFile {
    pub fn parse(json: &str) -> Result<Tribracket, TribracketError> {
        let file: TribracketFile = serde_json::from_str(json)?;
        let mut tensor = file.tensor;
        if file.one_indexed {
            for slice in &mut tensor {
                for row in slice {
                    for v in row {
                        if *v == 0 {
                            return Err(TribracketError::EntryRange { value: 0, size: file.size });
                        }
                        *v -= 1;
                    }
                }
            }
        }
        if tensor.len() != file.size {
            return Err(TribracketError::TensorShape {
                size: file.size,
                got: tensor.len(),
                want: file.size,
            });
        }
        Tribracket::from_tensor(&tensor)
    }

    pub fn render(t: &Tribracket, one_indexed: bool) -> String {
        let mut tensor = t.to_nested_tensor();
        if one_indexed {
            for slice in &mut tensor {
                for row in slice {
                    for v in row {
                        *v += 1;
                    }
                }
            }
        }
        serde_json::to_string_pretty(&TribracketFile { size: t.size(), one_indexed, tensor })
            .expect("serialize tribracket")
    }
}

/// JSON form of a group file.
#[derive(Debug, Serialize, Deserialize)]
pub struct GroupFile {
    pub size: usize,
    pub cayley: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupFile {
    pub fn parse(json: &str) -> Result<FiniteGroup, TribracketError> {
        let file: GroupFile = serde_json::from_str(json)?;
        let flat: Vec<usize> = file.cayley.into_iter().flatten().collect();
        FiniteGroup::from_cayley(file.size, flat, file.identity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn x4_display_values() {
        let t = catalog::x4();
        assert_eq!(t.eval(0, 0, 0), 3);
        assert!(t.validate().valid);
    }

    #[test]
    fn x3_table_tensor_values_and_axiom_status() {
        let t = catalog::x3();
        assert_eq!(t.eval(0, 0, 0), 0);
        assert!(!t.is_abelian_dehn());
        // the table tensor is pinned by the expected counts and is not a
        // ternary quasigroup: lines (0,1,.) and (1,2,.) repeat a value
        let report = t.validate();
        assert!(!report.valid);
        assert!(!t.is_quasigroup());
        assert!(report.axiom1_failures.iter().any(|f| f.axis == 2 && f.fixed == [0, 1]));
        assert!(report.axiom1_failures.iter().any(|f| f.axis == 2 && f.fixed == [1, 2]));
    }

    #[test]
    fn x3_misprint_fails_axiom1() {
        let t = catalog::x3_misprint();
        let report = t.validate();
        assert!(!report.valid);
        // the bad line is (a=1, b=1, .), with value 1 repeated
        assert!(report
            .axiom1_failures
            .iter()
            .any(|f| f.axis == 2 && f.fixed == [1, 1] && f.value == 1));
        assert!(!t.is_quasigroup());
    }

    #[test]
    fn dehn_z3_products() {
        let t = dehn_tribracket(&FiniteGroup::cyclic(3));
        // b - a + c mod 3
        assert_eq!(t.eval(1, 2, 0), 1);
        assert!(t.validate().valid);
        assert!(t.is_abelian_dehn());
    }

    #[test]
    fn dehn_z2_tensor_slices() {
        let t = dehn_tribracket(&FiniteGroup::cyclic(2));
        assert_eq!(t.to_nested_tensor(), vec![
            vec![vec![0, 1], vec![1, 0]],
            vec![vec![1, 0], vec![0, 1]],
        ]);
    }

    #[test]
    fn dehn_of_trivial_group() {
        let t = dehn_tribracket(&FiniteGroup::cyclic(1));
        assert_eq!(t.size(), 1);
        assert!(t.validate().valid);
        assert!(t.is_commutative());
    }

    #[test]
    fn dehn_valid_for_small_groups() {
        for n in 2..=6 {
            assert!(dehn_tribracket(&FiniteGroup::cyclic(n)).validate().valid, "Z{n}");
        }
        assert!(dehn_tribracket(&FiniteGroup::symmetric(3)).validate().valid);
    }

    #[test]
    #[should_panic(expected = "axiom 1")]
    fn solve_slot_panics_without_axiom1() {
        catalog::x3().solve_slot(Slot::A, [0, 0, 0]);
    }

    #[test]
    fn solve_slot_round_trips() {
        for t in [catalog::x4(), dehn_tribracket(&FiniteGroup::cyclic(3)), dehn_tribracket(&FiniteGroup::cyclic(5))] {
            let n = t.size();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let d = t.eval(a, b, c);
                        assert_eq!(t.solve_slot(Slot::A, [b, c, d]), a);
                        assert_eq!(t.solve_slot(Slot::B, [a, c, d]), b);
                        assert_eq!(t.solve_slot(Slot::C, [a, b, d]), c);
                        assert_eq!(t.solve_slot(Slot::D, [a, b, c]), d);
                    }
                }
            }
        }
    }

    #[test]
    fn solve_slot_dehn_examples() {
        let t = dehn_tribracket(&FiniteGroup::cyclic(3));
        assert_eq!(t.solve_slot(Slot::D, [1, 2, 0]), 1);
        assert_eq!(t.solve_slot(Slot::A, [2, 0, 1]), 1);
    }

    #[test]
    fn abelian_dehn_is_middle_symmetric() {
        let z6 = FiniteGroup::cyclic(6);
        let t = dehn_tribracket(&z6);
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(t.eval(a, b, c), t.eval(a, c, b));
                }
            }
        }
        // full commutativity needs 2-torsion
        assert!(!t.is_commutative());
        assert!(dehn_tribracket(&FiniteGroup::cyclic(2)).is_commutative());
    }

    #[test]
    fn commutativity_agrees_with_direct_check() {
        for t in [catalog::x3(), catalog::x4(), dehn_tribracket(&FiniteGroup::cyclic(2)), dehn_tribracket(&FiniteGroup::cyclic(3))] {
            let n = t.size();
            let mut direct = true;
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let v = t.eval(a, b, c);
                        direct &= v == t.eval(b, c, a)
                            && v == t.eval(a, c, b)
                            && v == t.eval(c, b, a);
                    }
                }
            }
            assert_eq!(t.is_commutative(), direct);
        }
        assert!(dehn_tribracket(&FiniteGroup::cyclic(2)).is_commutative());
        assert!(!catalog::x3().is_commutative());
    }

    #[test]
    fn group_corpus_of_order_up_to_8() {
        let z2 = FiniteGroup::cyclic(2);
        let groups: Vec<(&str, FiniteGroup)> = vec![
            ("Z1", FiniteGroup::cyclic(1)),
            ("Z2", FiniteGroup::cyclic(2)),
            ("Z3", FiniteGroup::cyclic(3)),
            ("Z4", FiniteGroup::cyclic(4)),
            ("Z5", FiniteGroup::cyclic(5)),
            ("Z6", FiniteGroup::cyclic(6)),
            ("Z7", FiniteGroup::cyclic(7)),
            ("Z8", FiniteGroup::cyclic(8)),
            ("Z2xZ2", z2.direct_product(&z2)),
            ("Z2xZ4", z2.direct_product(&FiniteGroup::cyclic(4))),
            ("Z2xZ2xZ2", z2.direct_product(&z2).direct_product(&z2)),
            ("S3", FiniteGroup::symmetric(3)),
            ("D4", FiniteGroup::dihedral(4)),
            ("Q8", FiniteGroup::quaternion()),
        ];
        for (name, g) in groups {
            assert!(dehn_tribracket(&g).validate().valid, "Dehn({name})");
        }
        assert!(!FiniteGroup::symmetric(3).is_abelian());
        assert!(!FiniteGroup::quaternion().is_abelian());
        assert!(!FiniteGroup::dihedral(4).is_abelian());
    }

    #[test]
    fn enumerate_size_1() {
        let all: Result<Vec<_>, _> = enumerate_tribrackets(1, None).collect();
        assert_eq!(all.unwrap().len(), 1);
    }

    #[test]
    fn enumerate_size_2_matches_brute_force() {
        // independent oracle: push all 256 tensors through validate
        let mut expected = Vec::new();
        for bits in 0..256u32 {
            let tensor: Vec<usize> = (0..8).map(|i| ((bits >> i) & 1) as usize).collect();
            let t = Tribracket::from_flat_tensor(2, tensor).unwrap();
            if t.validate().valid {
                expected.push(t.flat_tensor().to_vec());
            }
        }
        expected.sort();
        let enumerated: Vec<Vec<usize>> = enumerate_tribrackets(2, None)
            .map(|r| r.unwrap().flat_tensor().to_vec())
            .collect();
        assert!(!enumerated.is_empty());
        assert!(enumerated.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
        assert_eq!(enumerated, expected);
    }

    #[test]
    fn enumerate_size_3_contains_dehn_but_not_the_table_tensor() {
        let found: Vec<Vec<usize>> = enumerate_tribrackets(3, None)
            .map(|r| r.unwrap().flat_tensor().to_vec())
            .collect();
        assert!(found.contains(&dehn_tribracket(&FiniteGroup::cyclic(3)).flat_tensor().to_vec()));
        // the table tensor fails axiom 1, so a correct enumerator skips it
        assert!(!found.contains(&catalog::x3().flat_tensor().to_vec()));
        for tensor in &found {
            assert!(Tribracket::from_flat_tensor(3, tensor.clone()).unwrap().validate().valid);
        }
    }

    #[test]
    fn enumerate_budget_exhaustion() {
        let results: Vec<_> = enumerate_tribrackets(3, Some(10)).collect();
        let last = results.last().unwrap();
        assert!(matches!(last, Err(TribracketError::BudgetExhausted { budget: 10, .. })));
    }

    #[test]
    fn tribracket_file_round_trip() {
        let t = catalog::x3();
        let json = TribracketFile::render(&t, true);
        let back = TribracketFile::parse(&json).unwrap();
        assert_eq!(back, t);
    }
}
