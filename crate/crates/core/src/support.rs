//! Supports as bit-vectors over the cells of `I_n^d`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::shape::{Index, PlaneSelector, Shape};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SupportSet {
    shape: Shape,
    bits: Vec<u64>,
}

impl SupportSet {
    pub fn empty(shape: Shape) -> SupportSet {
        SupportSet { shape, bits: vec![0; shape.cells().div_ceil(64)] }
    }

    pub fn full(shape: Shape) -> SupportSet {
        let mut s = SupportSet::empty(shape);
        for c in 0..shape.cells() {
            s.insert(c);
        }
        s
    }

    pub fn from_cells(shape: Shape, cells: impl IntoIterator<Item = usize>) -> SupportSet {
        let mut s = SupportSet::empty(shape);
        for c in cells {
            s.insert(c);
        }
        s
    }

    pub fn from_indices<I: AsRef<[usize]>>(shape: Shape, indices: &[I]) -> Result<SupportSet> {
        let mut s = SupportSet::empty(shape);
        for idx in indices {
            shape.check_index(idx.as_ref())?;
            s.insert(shape.cell(idx.as_ref()));
        }
        Ok(s)
    }

    /// A support of at most 64 cells from its packed word (cell `c` is bit `c`).
    pub fn from_word(shape: Shape, word: u64) -> SupportSet {
        assert!(shape.cells() <= 64);
        let mut s = SupportSet::empty(shape);
        s.bits[0] = word;
        s
    }

    pub fn word(&self) -> u64 {
        assert!(self.shape.cells() <= 64);
        self.bits[0]
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn contains(&self, cell: usize) -> bool {
        self.bits[cell / 64] >> (cell % 64) & 1 == 1
    }

    pub fn contains_index(&self, idx: &[usize]) -> bool {
        self.contains(self.shape.cell(idx))
    }

    pub fn insert(&mut self, cell: usize) {
        self.bits[cell / 64] |= 1 << (cell % 64);
    }

    pub fn remove(&mut self, cell: usize) {
        self.bits[cell / 64] &= !(1 << (cell % 64));
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Cells in increasing order.
    pub fn cells(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(64 * k + b)
            })
        })
    }

    pub fn indices(&self) -> Vec<Index> {
        self.cells().map(|c| self.shape.index(c)).collect()
    }

    fn check_same(&self, other: &SupportSet) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!("{:?} vs {:?}", self.shape, other.shape)));
        }
        Ok(())
    }

    fn zip(&self, other: &SupportSet, f: impl Fn(u64, u64) -> u64) -> Result<SupportSet> {
        self.check_same(other)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect();
        Ok(SupportSet { shape: self.shape, bits })
    }

    pub fn union(&self, other: &SupportSet) -> Result<SupportSet> {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &SupportSet) -> Result<SupportSet> {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &SupportSet) -> Result<SupportSet> {
        self.zip(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &SupportSet) -> bool {
        self.shape == other.shape && self.bits.iter().zip(&other.bits).all(|(&a, &b)| a & !b == 0)
    }

    /// Number of support cells on the line through `cell` varying `pos`.
    pub fn line_count(&self, cell: usize, pos: usize) -> usize {
        self.shape.line_cells(cell, pos).filter(|&c| self.contains(c)).count()
    }

    /// Calls `f(pos, count)` for every line of every direction.
    pub fn for_each_line(&self, mut f: impl FnMut(usize, usize, usize)) {
        for pos in 0..self.shape.d() {
            for base in self.shape.line_bases(pos) {
                f(pos, base, self.line_count(base, pos));
            }
        }
    }

    fn all_lines(&self, ok: impl Fn(usize) -> bool) -> bool {
        let mut good = true;
        self.for_each_line(|_, _, k| good &= ok(k));
        good
    }

    /// Every line holds exactly one cell.
    pub fn is_permutation(&self) -> bool {
        self.all_lines(|k| k == 1)
    }

    /// Largest number of cells on any line.
    pub fn max_line_count(&self) -> usize {
        let mut m = 0;
        self.for_each_line(|_, _, k| m = m.max(k));
        m
    }

    pub fn has_empty_line(&self) -> bool {
        !self.all_lines(|k| k > 0)
    }

    pub fn extract_plane(&self, sel: &PlaneSelector) -> Result<SupportSet> {
        let (sub, cells) = sel.cells(self.shape)?;
        Ok(SupportSet::from_cells(sub, cells.iter().enumerate().filter(|(_, &c)| self.contains(c)).map(|(k, _)| k)))
    }

    /// Bit-vector as a string of `0`/`1` in cell order.
    pub fn bit_string(&self) -> String {
        (0..self.shape.cells()).map(|c| if self.contains(c) { '1' } else { '0' }).collect()
    }
}

impl Ord for SupportSet {
    /// Lexicographic order of the bit-vectors read in cell order, `0 < 1`.
    fn cmp(&self, other: &SupportSet) -> Ordering {
        self.shape.cmp(&other.shape).then_with(|| {
            for (&a, &b) in self.bits.iter().zip(&other.bits) {
                let x = a ^ b;
                if x != 0 {
                    let low = x & x.wrapping_neg();
                    return if a & low == 0 { Ordering::Less } else { Ordering::Greater };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for SupportSet {
    fn partial_cmp(&self, other: &SupportSet) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Parses a picture made of `•`/`∘` (or `1`/`0`, `#`/`.`) characters.
///
/// Each picture row lists the rows of all blocks side by side, so for
/// `d = 3` the block index is the first coordinate, the picture row the
/// second and the column inside the block the third. Whitespace separates
/// blocks. For `d = 2` there is a single block.
pub fn from_picture(d: usize, rows: &[&str]) -> Result<SupportSet> {
    let n = rows.len();
    let shape = Shape::new(d, n)?;
    let blocks = if d == 3 { n } else if d == 2 { 1 } else {
        return Err(Error::Malformed("pictures describe d = 2 or d = 3".into()));
    };
    let mut s = SupportSet::empty(shape);
    for (r, row) in rows.iter().enumerate() {
        let marks: Vec<bool> = row
            .chars()
            .filter_map(|ch| match ch {
                '•' | '1' | '#' => Some(true),
                '∘' | '0' | '.' => Some(false),
                _ => None,
            })
            .collect();
        if marks.len() != blocks * n {
            return Err(Error::Malformed(format!("picture row {r} has {} marks", marks.len())));
        }
        for (k, &m) in marks.iter().enumerate() {
            if m {
                let idx = if d == 3 { vec![k / n, r, k % n] } else { vec![r, k] };
                s.insert(shape.cell(&idx));
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let sh = Shape::new(2, 4).unwrap();
        let a = SupportSet::from_cells(sh, [0, 5, 10, 15]);
        let b = SupportSet::from_cells(sh, [0, 1]);
        assert_eq!(a.len(), 4);
        assert!(a.is_permutation());
        assert_eq!(a.union(&b).unwrap().len(), 5);
        assert_eq!(a.intersection(&b).unwrap().cells().collect::<Vec<_>>(), vec![0]);
        assert!(!b.is_subset(&a));
        assert_eq!(a.max_line_count(), 1);
    }

    #[test]
    fn lex_order_reads_cells_in_order() {
        let sh = Shape::new(2, 4).unwrap();
        let a = SupportSet::from_cells(sh, [1]);
        let b = SupportSet::from_cells(sh, [0]);
        assert!(a < b);
        assert_eq!(a.bit_string().cmp(&b.bit_string()), a.cmp(&b));
        let big = Shape::new(3, 5).unwrap();
        let x = SupportSet::from_cells(big, [100]);
        let y = SupportSet::from_cells(big, [70]);
        assert_eq!(x.bit_string().cmp(&y.bit_string()), x.cmp(&y));
    }

    #[test]
    fn pictures() {
        let s = from_picture(2, &["•∘∘∘", "∘•∘∘", "∘∘•∘", "∘∘∘•"]).unwrap();
        assert!(s.is_permutation());
        let t = from_picture(3, &["10 00", "00 01"]).unwrap();
        assert!(t.contains_index(&[0, 0, 0]));
        assert!(t.contains_index(&[1, 1, 1]));
        assert_eq!(t.len(), 2);
    }
}
