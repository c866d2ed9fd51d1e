//! Shapes, indices and the geometry of lines and planes.
//!
//! Cells of `I_n^d` are numbered lexicographically with the last coordinate
//! varying fastest. Positions are 0-based throughout the library.

use crate::error::{Error, Result};

/// Default bound on `n^d`.
pub const DEFAULT_CELL_BUDGET: u128 = 1 << 24;

/// A coordinate tuple `(α_1, …, α_d)`.
pub type Index = Vec<usize>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    d: usize,
    n: usize,
}

impl Shape {
    pub fn new(d: usize, n: usize) -> Result<Shape> {
        Shape::with_budget(d, n, DEFAULT_CELL_BUDGET)
    }

    pub fn with_budget(d: usize, n: usize, budget: u128) -> Result<Shape> {
        if d == 0 {
            return Err(Error::InvalidShape { d, n, reason: "dimension must be positive" });
        }
        if !(2..=5).contains(&n) {
            return Err(Error::InvalidShape { d, n, reason: "order must lie in 2..=5" });
        }
        let mut cells: u128 = 1;
        for _ in 0..d {
            cells = cells.saturating_mul(n as u128);
        }
        if cells > budget {
            return Err(Error::Capacity { d, n, cells, budget });
        }
        Ok(Shape { d, n })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> usize {
        self.n.pow(self.d as u32)
    }

    /// Distance between consecutive values of coordinate `pos` in the cell numbering.
    pub fn stride(&self, pos: usize) -> usize {
        self.n.pow((self.d - 1 - pos) as u32)
    }

    pub fn check_position(&self, pos: usize) -> Result<()> {
        if pos < self.d {
            Ok(())
        } else {
            Err(Error::Position { pos, d: self.d })
        }
    }

    pub fn check_index(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.d || idx.iter().any(|&a| a >= self.n) {
            return Err(Error::BadIndex(idx.to_vec()));
        }
        Ok(())
    }

    /// Cell number of a valid index.
    pub fn cell(&self, idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &a| acc * self.n + a)
    }

    pub fn index(&self, mut cell: usize) -> Index {
        let mut idx = vec![0; self.d];
        for slot in idx.iter_mut().rev() {
            *slot = cell % self.n;
            cell /= self.n;
        }
        idx
    }

    /// Coordinate `pos` of a cell without decoding the whole index.
    pub fn coord(&self, cell: usize, pos: usize) -> usize {
        (cell / self.stride(pos)) % self.n
    }

    /// Cells of the line through `cell` varying position `pos`, in coordinate order.
    pub fn line_cells(&self, cell: usize, pos: usize) -> impl Iterator<Item = usize> {
        let stride = self.stride(pos);
        let base = cell - self.coord(cell, pos) * stride;
        (0..self.n).map(move |v| base + v * stride)
    }

    /// One representative cell (coordinate `pos` equal to 0) per line of direction `pos`.
    pub fn line_bases(&self, pos: usize) -> impl Iterator<Item = usize> + '_ {
        let stride = self.stride(pos);
        (0..self.cells()).filter(move |&c| (c / stride) % self.n == 0)
    }

    /// Number of lines of all directions: `d · n^{d-1}`.
    pub fn line_count(&self) -> usize {
        self.d * self.cells() / self.n
    }
}

/// The `n` indices agreeing with `idx` except at `pos`.
pub fn line_through(shape: Shape, idx: &[usize], pos: usize) -> Result<Vec<Index>> {
    shape.check_index(idx)?;
    shape.check_position(pos)?;
    Ok((0..shape.n())
        .map(|v| {
            let mut x = idx.to_vec();
            x[pos] = v;
            x
        })
        .collect())
}

/// Hamming distance `ρ(α, β)`.
pub fn hamming(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Fixed positions and values of a plane `A^{α_1…}_{i_1…}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneSelector {
    fixed: Vec<(usize, usize)>,
}

impl PlaneSelector {
    pub fn new(positions: &[usize], values: &[usize]) -> Result<PlaneSelector> {
        if positions.len() != values.len() {
            return Err(Error::Malformed("plane selector lists differ in length".into()));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Malformed("plane positions must be strictly increasing".into()));
        }
        Ok(PlaneSelector { fixed: positions.iter().copied().zip(values.iter().copied()).collect() })
    }

    /// The hyperplane with position `pos` fixed to `value`.
    pub fn hyperplane(pos: usize, value: usize) -> PlaneSelector {
        PlaneSelector { fixed: vec![(pos, value)] }
    }

    pub fn fixed(&self) -> &[(usize, usize)] {
        &self.fixed
    }

    pub fn free_positions(&self, d: usize) -> Vec<usize> {
        (0..d).filter(|p| !self.fixed.iter().any(|&(q, _)| q == *p)).collect()
    }

    /// Shape of the plane and the parent cells of its cells in plane order.
    pub fn cells(&self, shape: Shape) -> Result<(Shape, Vec<usize>)> {
        for &(p, v) in &self.fixed {
            shape.check_position(p)?;
            if v >= shape.n() {
                return Err(Error::BadIndex(vec![v]));
            }
        }
        let free = self.free_positions(shape.d());
        if free.is_empty() {
            return Err(Error::Malformed("a plane needs at least one free position".into()));
        }
        let sub = Shape::new(free.len(), shape.n())?;
        let mut base = vec![0; shape.d()];
        for &(p, v) in &self.fixed {
            base[p] = v;
        }
        let cells = (0..sub.cells())
            .map(|c| {
                let local = sub.index(c);
                let mut idx = base.clone();
                for (k, &p) in free.iter().enumerate() {
                    idx[p] = local[k];
                }
                shape.cell(&idx)
            })
            .collect();
        Ok((sub, cells))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_numbering_is_lexicographic() {
        let s = Shape::new(3, 4).unwrap();
        assert_eq!(s.cell(&[0, 0, 1]), 1);
        assert_eq!(s.cell(&[1, 0, 0]), 16);
        for c in 0..s.cells() {
            assert_eq!(s.cell(&s.index(c)), c);
        }
        assert_eq!(s.coord(s.cell(&[2, 3, 1]), 1), 3);
    }

    #[test]
    fn lines() {
        let s2 = Shape::new(2, 4).unwrap();
        assert_eq!(
            line_through(s2, &[1, 2], 0).unwrap(),
            vec![vec![0, 2], vec![1, 2], vec![2, 2], vec![3, 2]]
        );
        let s3 = Shape::new(3, 4).unwrap();
        assert_eq!(
            line_through(s3, &[0, 0, 0], 2).unwrap(),
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 2], vec![0, 0, 3]]
        );
        let s1 = Shape::new(1, 4).unwrap();
        assert_eq!(line_through(s1, &[2], 0).unwrap().len(), 4);
        assert!(line_through(s3, &[0, 0, 0], 3).is_err());
        assert_eq!(s3.line_bases(1).count(), 16);
        assert_eq!(s3.line_count(), 48);
    }

    #[test]
    fn hamming_distance() {
        assert_eq!(hamming(&[0, 0, 0], &[0, 0, 0]), 0);
        for d in 3..8 {
            let a = vec![2; d];
            let mut b = vec![3; d];
            b[0] = 2;
            b[1] = 2;
            assert_eq!(hamming(&a, &b), d - 2);
        }
    }

    #[test]
    fn budget() {
        assert!(matches!(Shape::new(13, 4), Err(Error::Capacity { .. })));
        assert!(Shape::new(12, 4).is_ok());
        assert!(Shape::new(3, 6).is_err());
        assert!(Shape::new(0, 4).is_err());
    }
}
