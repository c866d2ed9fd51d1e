//! The equivalence group: position permutations combined with one symbol
//! permutation per position, and lex-min canonical forms of supports.

use crate::error::{Error, Result};
use crate::matrix::HyperMatrix;
use crate::shape::Shape;
use crate::support::SupportSet;

/// Sends `α` to `β` with `β[pos_perm[i]] = sym_perms[i][α[i]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EquivalenceElement {
    pos_perm: Vec<usize>,
    sym_perms: Vec<Vec<usize>>,
}

fn is_bijection(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl EquivalenceElement {
    pub fn new(pos_perm: Vec<usize>, sym_perms: Vec<Vec<usize>>) -> Result<EquivalenceElement> {
        let n = sym_perms.first().map_or(0, |p| p.len());
        if pos_perm.len() != sym_perms.len()
            || !is_bijection(&pos_perm)
            || sym_perms.iter().any(|p| p.len() != n || !is_bijection(p))
        {
            return Err(Error::Malformed("equivalence element components must be bijections".into()));
        }
        Ok(EquivalenceElement { pos_perm, sym_perms })
    }

    pub fn identity(shape: Shape) -> EquivalenceElement {
        EquivalenceElement {
            pos_perm: (0..shape.d()).collect(),
            sym_perms: vec![(0..shape.n()).collect(); shape.d()],
        }
    }

    pub fn pos_perm(&self) -> &[usize] {
        &self.pos_perm
    }

    pub fn sym_perms(&self) -> &[Vec<usize>] {
        &self.sym_perms
    }

    fn check(&self, shape: Shape) -> Result<()> {
        if self.pos_perm.len() != shape.d() || self.sym_perms[0].len() != shape.n() {
            return Err(Error::ShapeMismatch("equivalence element sized for another shape".into()));
        }
        Ok(())
    }

    pub fn apply_index(&self, idx: &[usize]) -> Vec<usize> {
        let mut out = vec![0; idx.len()];
        for (i, &a) in idx.iter().enumerate() {
            out[self.pos_perm[i]] = self.sym_perms[i][a];
        }
        out
    }

    /// Image cell of every cell.
    pub fn cell_map(&self, shape: Shape) -> Vec<usize> {
        (0..shape.cells()).map(|c| shape.cell(&self.apply_index(&shape.index(c)))).collect()
    }

    /// `self ∘ g`: first `g`, then `self`.
    pub fn after(&self, g: &EquivalenceElement) -> EquivalenceElement {
        let d = g.pos_perm.len();
        EquivalenceElement {
            pos_perm: (0..d).map(|i| self.pos_perm[g.pos_perm[i]]).collect(),
            sym_perms: (0..d)
                .map(|i| g.sym_perms[i].iter().map(|&a| self.sym_perms[g.pos_perm[i]][a]).collect())
                .collect(),
        }
    }

    pub fn apply_support(&self, s: &SupportSet) -> Result<SupportSet> {
        let shape = s.shape();
        self.check(shape)?;
        Ok(SupportSet::from_cells(shape, s.cells().map(|c| shape.cell(&self.apply_index(&shape.index(c))))))
    }

    pub fn apply_matrix(&self, m: &HyperMatrix) -> Result<HyperMatrix> {
        let shape = m.shape();
        self.check(shape)?;
        let mut entries = vec![Default::default(); shape.cells()];
        for (c, e) in m.entries().iter().enumerate() {
            entries[shape.cell(&self.apply_index(&shape.index(c)))] = e.clone();
        }
        HyperMatrix::new(shape, entries)
    }
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

/// Every group element, position permutation slowest. Size `d!·(n!)^d`.
pub fn all_elements(shape: Shape) -> impl Iterator<Item = EquivalenceElement> {
    let (d, n) = (shape.d(), shape.n());
    let pos = permutations(d);
    let sym = permutations(n);
    let per_pos = sym.len();
    let total_sym = per_pos.pow(d as u32);
    pos.into_iter().flat_map(move |pp| {
        let sym = sym.clone();
        (0..total_sym).map(move |mut k| {
            let mut sym_perms = vec![Vec::new(); d];
            for slot in sym_perms.iter_mut().rev() {
                *slot = sym[k % per_pos].clone();
                k /= per_pos;
            }
            EquivalenceElement { pos_perm: pp.clone(), sym_perms }
        })
    })
}

struct Canon<'a> {
    s: &'a SupportSet,
    shape: Shape,
    /// Input position feeding each output position.
    src: Vec<usize>,
    /// Input symbol for each already assigned output value, per output position.
    rho: Vec<Vec<usize>>,
    used: Vec<u32>,
    cur: Vec<bool>,
    best: Vec<bool>,
    has_best: bool,
}

impl Canon<'_> {
    fn bit(&self, out: &[usize]) -> bool {
        let mut cell = 0;
        let mut input = vec![0; self.shape.d()];
        for (j, &v) in out.iter().enumerate() {
            input[self.src[j]] = self.rho[j][v];
        }
        for &a in &input {
            cell = cell * self.shape.n() + a;
        }
        self.s.contains(cell)
    }

    /// Returns true when the incumbent was replaced inside this subtree.
    fn search(&mut self, start: usize, mut tight: bool) -> bool {
        let cells = self.shape.cells();
        let mut c = start;
        while c < cells {
            let out = self.shape.index(c);
            if let Some(j) = (0..out.len()).find(|&j| self.rho[j].len() == out[j]) {
                let mut improved = false;
                for a in 0..self.shape.n() {
                    if self.used[j] >> a & 1 == 1 {
                        continue;
                    }
                    self.rho[j].push(a);
                    self.used[j] |= 1 << a;
                    if self.search(c, tight) {
                        improved = true;
                        tight = true;
                    }
                    self.rho[j].pop();
                    self.used[j] &= !(1 << a);
                }
                return improved;
            }
            let b = self.bit(&out);
            self.cur[c] = b;
            if self.has_best && tight {
                if b && !self.best[c] {
                    return false;
                }
                if !b && self.best[c] {
                    tight = false;
                }
            }
            c += 1;
        }
        if !self.has_best || !tight {
            self.best.clone_from(&self.cur);
            self.has_best = true;
            return true;
        }
        false
    }
}

/// Lexicographically smallest bit-vector in the orbit of `s`.
pub fn canonical_form(s: &SupportSet) -> SupportSet {
    let shape = s.shape();
    let count = s.len();
    if count == 0 || count == shape.cells() {
        return s.clone();
    }
    let mut canon = Canon {
        s,
        shape,
        src: Vec::new(),
        rho: vec![Vec::new(); shape.d()],
        used: vec![0; shape.d()],
        cur: vec![false; shape.cells()],
        best: vec![false; shape.cells()],
        has_best: false,
    };
    for perm in permutations(shape.d()) {
        // perm[i] is the output position of input position i
        let mut src = vec![0; shape.d()];
        for (i, &j) in perm.iter().enumerate() {
            src[j] = i;
        }
        canon.src = src;
        canon.search(0, true);
    }
    SupportSet::from_cells(shape, (0..shape.cells()).filter(|&c| canon.best[c]))
}

pub fn equivalent(a: &SupportSet, b: &SupportSet) -> bool {
    a.shape() == b.shape() && a.len() == b.len() && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_listing() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4)[1], vec![0, 1, 3, 2]);
        assert_eq!(permutations(1), vec![vec![0]]);
    }

    #[test]
    fn group_size() {
        let sh = Shape::new(2, 3).unwrap();
        assert_eq!(all_elements(sh).count(), 2 * 36);
    }

    #[test]
    fn transpose() {
        let sh = Shape::new(2, 4).unwrap();
        let g = EquivalenceElement::new(vec![1, 0], vec![(0..4).collect(), (0..4).collect()]).unwrap();
        let s = SupportSet::from_indices(sh, &[[0, 1], [2, 3]]).unwrap();
        let t = g.apply_support(&s).unwrap();
        assert!(t.contains_index(&[1, 0]) && t.contains_index(&[3, 2]));
    }

    #[test]
    fn canonical_matches_orbit_scan() {
        let sh = Shape::new(2, 3).unwrap();
        let all: Vec<_> = all_elements(sh).collect();
        for word in [0b000_010_101u64, 0b100_010_001, 0b110_011_000, 0b111_000_001] {
            let s = SupportSet::from_word(sh, word);
            let min = all.iter().map(|g| g.apply_support(&s).unwrap()).min().unwrap();
            assert_eq!(canonical_form(&s), min);
        }
    }
}
