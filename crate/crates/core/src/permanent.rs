//! Diagonals, exact permanents and positive-diagonal search.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::group::permutations;
use crate::matrix::{HyperMatrix, Q};
use crate::shape::{Index, PlaneSelector, Shape};
use crate::support::SupportSet;

/// `n` indices pairwise distinct in every coordinate, sorted by first coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagonal {
    indices: Vec<Index>,
}

impl Diagonal {
    pub fn new(shape: Shape, mut indices: Vec<Index>) -> Result<Diagonal> {
        if indices.len() != shape.n() {
            return Err(Error::Malformed(format!("a diagonal has {} indices", shape.n())));
        }
        for idx in &indices {
            shape.check_index(idx)?;
        }
        for pos in 0..shape.d() {
            let mut seen = 0u32;
            for idx in &indices {
                seen |= 1 << idx[pos];
            }
            if seen.count_ones() as usize != shape.n() {
                return Err(Error::Malformed("diagonal indices share a coordinate".into()));
            }
        }
        indices.sort();
        Ok(Diagonal { indices })
    }

    pub fn indices(&self) -> &[Index] {
        &self.indices
    }

    pub fn within(&self, s: &SupportSet) -> bool {
        self.indices.iter().all(|idx| s.contains_index(idx))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PermanentOptions {
    /// Largest admissible `(n!)^{d-1}`.
    pub diagonal_budget: u128,
}

impl Default for PermanentOptions {
    fn default() -> Self {
        PermanentOptions { diagonal_budget: 200_000_000 }
    }
}

fn diagonal_total(shape: Shape) -> u128 {
    let f: u128 = (1..=shape.n() as u128).product();
    (0..shape.d() - 1).fold(1u128, |acc, _| acc.saturating_mul(f))
}

fn check_budget(shape: Shape, opts: PermanentOptions) -> Result<()> {
    let needed = diagonal_total(shape);
    if needed > opts.diagonal_budget {
        return Err(Error::Budget { what: "diagonal enumeration", needed, budget: opts.diagonal_budget });
    }
    Ok(())
}

/// Iterates all `(n!)^{d-1}` diagonals; the `k`-th index has first coordinate `k`
/// and the tuples of coordinate permutations advance lexicographically.
pub struct Diagonals {
    shape: Shape,
    perms: Vec<Vec<usize>>,
    state: Vec<usize>,
    done: bool,
}

impl Iterator for Diagonals {
    type Item = Diagonal;

    fn next(&mut self) -> Option<Diagonal> {
        if self.done {
            return None;
        }
        let indices = (0..self.shape.n())
            .map(|k| std::iter::once(k).chain(self.state.iter().map(|&p| self.perms[p][k])).collect())
            .collect();
        let mut i = self.state.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.state[i] += 1;
            if self.state[i] < self.perms.len() {
                break;
            }
            self.state[i] = 0;
        }
        Some(Diagonal { indices })
    }
}

pub fn diagonals(shape: Shape, opts: PermanentOptions) -> Result<Diagonals> {
    check_budget(shape, opts)?;
    Ok(Diagonals { shape, perms: permutations(shape.n()), state: vec![0; shape.d() - 1], done: false })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermanentResult {
    pub value: Q,
    /// Diagonals reached by the traversal, which skips any branch through a zero entry.
    pub diagonals_visited: u64,
}

struct Expand<'a> {
    m: &'a HyperMatrix,
    used: Vec<u32>,
    idx: Vec<usize>,
    total: Q,
    visited: u64,
}

impl Expand<'_> {
    fn element(&mut self, k: usize, acc: &Q) {
        let shape = self.m.shape();
        if k == shape.n() {
            self.total += acc;
            self.visited += 1;
            return;
        }
        self.idx[0] = k;
        self.coordinate(k, 1, acc);
    }

    fn coordinate(&mut self, k: usize, pos: usize, acc: &Q) {
        let shape = self.m.shape();
        if pos == shape.d() {
            let e = self.m.get(&self.idx);
            if e.is_zero() {
                return;
            }
            let next = acc * e;
            let saved = self.idx.clone();
            self.element(k + 1, &next);
            self.idx = saved;
            return;
        }
        for v in 0..shape.n() {
            if self.used[pos] >> v & 1 == 0 {
                self.used[pos] |= 1 << v;
                self.idx[pos] = v;
                self.coordinate(k, pos + 1, acc);
                self.used[pos] &= !(1 << v);
            }
        }
    }
}

/// `per A = Σ_{p ∈ D(A)} Π_{α ∈ p} a_α`.
pub fn permanent_exact(m: &HyperMatrix, opts: PermanentOptions) -> Result<PermanentResult> {
    let shape = m.shape();
    check_budget(shape, opts)?;
    let mut ex = Expand { m, used: vec![0; shape.d()], idx: vec![0; shape.d()], total: Q::zero(), visited: 0 };
    ex.element(0, &Q::one());
    Ok(PermanentResult { value: ex.total, diagonals_visited: ex.visited })
}

/// Outcome of a positivity search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityWitness {
    Positive(Diagonal),
    /// No positive diagonal; `nodes` counts search nodes expanded.
    Exhausted { nodes: u64 },
}

impl PositivityWitness {
    pub fn diagonal(&self) -> Option<&Diagonal> {
        match self {
            PositivityWitness::Positive(dg) => Some(dg),
            PositivityWitness::Exhausted { .. } => None,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.diagonal().is_some()
    }
}

/// One bit per (position, value): bit `pos·n + α_pos`.
fn cell_mask(shape: Shape, cell: usize) -> u64 {
    let n = shape.n();
    let mut c = cell;
    let mut mask = 0u64;
    for pos in (0..shape.d()).rev() {
        mask |= 1 << (pos * n + c % n);
        c /= n;
    }
    mask
}

struct Search {
    width: usize,
    nodes: u64,
}

impl Search {
    /// Fail-first: branch on the (position, value) with fewest candidates.
    fn run(&mut self, cands: &[(u64, usize)], used: u64, remaining: usize, chosen: &mut Vec<usize>) -> bool {
        if remaining == 0 {
            return true;
        }
        self.nodes += 1;
        let mut counts = [0u32; 64];
        for &(mask, _) in cands {
            let mut m = mask;
            while m != 0 {
                counts[m.trailing_zeros() as usize] += 1;
                m &= m - 1;
            }
        }
        let mut best: Option<(u32, usize)> = None;
        for (b, &count) in counts.iter().enumerate().take(self.width) {
            if used >> b & 1 == 0 && best.is_none_or(|(k, _)| count < k) {
                best = Some((count, b));
            }
        }
        let Some((count, bit)) = best else { return false };
        if count == 0 {
            return false;
        }
        for &(mask, cell) in cands {
            if mask >> bit & 1 == 0 {
                continue;
            }
            let next_used = used | mask;
            let next: Vec<(u64, usize)> = cands.iter().copied().filter(|&(m, _)| m & next_used == 0).collect();
            chosen.push(cell);
            if self.run(&next, next_used, remaining - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

fn search_from(s: &SupportSet, forced: Option<usize>) -> (Option<Diagonal>, u64) {
    let shape = s.shape();
    let n = shape.n();
    let mut used = 0u64;
    let mut chosen = Vec::new();
    if let Some(c) = forced {
        used = cell_mask(shape, c);
        chosen.push(c);
    }
    let cands: Vec<(u64, usize)> =
        s.cells().map(|c| (cell_mask(shape, c), c)).filter(|&(m, _)| m & used == 0).collect();
    let mut search = Search { width: shape.d() * n, nodes: 0 };
    let found = search.run(&cands, used, n - chosen.len(), &mut chosen);
    let diag = found.then(|| Diagonal::new(shape, chosen.iter().map(|&c| shape.index(c)).collect()).unwrap());
    (diag, search.nodes)
}

/// Finds a diagonal inside `s`, or certifies that none exists.
pub fn has_positive_diagonal(s: &SupportSet) -> PositivityWitness {
    match search_from(s, None) {
        (Some(dg), _) => PositivityWitness::Positive(dg),
        (None, nodes) => PositivityWitness::Exhausted { nodes },
    }
}

/// A diagonal through `forced` whose other indices lie in `s`.
pub fn diagonal_through(s: &SupportSet, forced: &[usize]) -> Result<Option<Diagonal>> {
    let shape = s.shape();
    shape.check_index(forced)?;
    Ok(search_from(s, Some(shape.cell(forced))).0)
}

/// `per A` as the sum over tuples of pairwise diagonally located planes of the
/// permanents of the `(k+1)`-dimensional matrices they form.
pub fn plane_decomposition_permanent(m: &HyperMatrix, fixed: &[usize], opts: PermanentOptions) -> Result<Q> {
    let shape = m.shape();
    let mut fixed = fixed.to_vec();
    fixed.sort_unstable();
    fixed.dedup();
    if fixed.is_empty() || fixed.len() >= shape.d() {
        return Err(Error::Malformed("planes need between 1 and d-1 free positions".into()));
    }
    for &p in &fixed {
        shape.check_position(p)?;
    }
    let outer = Shape::new(fixed.len(), shape.n())?;
    let mut total = Q::zero();
    for dg in diagonals(outer, opts)? {
        let planes = dg
            .indices()
            .iter()
            .map(|vals| m.extract_plane(&PlaneSelector::new(&fixed, vals)?))
            .collect::<Result<Vec<_>>>()?;
        let stacked = HyperMatrix::from_hyperplanes(0, &planes)?;
        total += permanent_exact(&stacked, opts)?.value;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::q;

    #[test]
    fn diagonal_counts() {
        let o = PermanentOptions::default();
        assert_eq!(diagonals(Shape::new(2, 4).unwrap(), o).unwrap().count(), 24);
        assert_eq!(diagonals(Shape::new(3, 4).unwrap(), o).unwrap().count(), 576);
        let one: Vec<_> = diagonals(Shape::new(1, 4).unwrap(), o).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].indices(), &[vec![0], vec![1], vec![2], vec![3]]);
        let first = diagonals(Shape::new(2, 4).unwrap(), o).unwrap().next().unwrap();
        assert_eq!(first.indices()[1], vec![1, 1]);
    }

    #[test]
    fn uniform_permanent() {
        let sh = Shape::new(2, 4).unwrap();
        let m = HyperMatrix::constant(sh, q(1, 4)).unwrap();
        assert_eq!(permanent_exact(&m, PermanentOptions::default()).unwrap().value, q(3, 32));
    }

    #[test]
    fn budget_guard() {
        let sh = Shape::new(3, 4).unwrap();
        let tight = PermanentOptions { diagonal_budget: 100 };
        assert!(matches!(
            permanent_exact(&HyperMatrix::zeros(sh), tight),
            Err(Error::Budget { needed: 576, .. })
        ));
    }

    #[test]
    fn identity_witness() {
        let sh = Shape::new(2, 4).unwrap();
        let s = SupportSet::from_cells(sh, [0, 5, 10, 15]);
        let w = has_positive_diagonal(&s);
        assert_eq!(w.diagonal().unwrap().indices(), &[vec![0, 0], vec![1, 1], vec![2, 2], vec![3, 3]]);
        assert_eq!(diagonal_through(&SupportSet::empty(sh), &[0, 0]).unwrap(), None);
    }
}
