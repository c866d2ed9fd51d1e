//! Dense hypermatrices with exact nonnegative rational entries.

use num::{BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::shape::{PlaneSelector, Shape};
use crate::support::SupportSet;

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperMatrix {
    shape: Shape,
    entries: Vec<Q>,
}

impl HyperMatrix {
    /// Entries in cell order; negative entries are rejected.
    pub fn new(shape: Shape, entries: Vec<Q>) -> Result<HyperMatrix> {
        if entries.len() != shape.cells() {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for {} cells",
                entries.len(),
                shape.cells()
            )));
        }
        if let Some(c) = entries.iter().position(|e| e.is_negative()) {
            return Err(Error::Negative(shape.index(c)));
        }
        Ok(HyperMatrix { shape, entries })
    }

    pub fn zeros(shape: Shape) -> HyperMatrix {
        HyperMatrix { shape, entries: vec![Q::zero(); shape.cells()] }
    }

    pub fn constant(shape: Shape, value: Q) -> Result<HyperMatrix> {
        HyperMatrix::new(shape, vec![value; shape.cells()])
    }

    /// The 0/1 matrix of a support.
    pub fn indicator(s: &SupportSet) -> HyperMatrix {
        let shape = s.shape();
        let entries = (0..shape.cells()).map(|c| if s.contains(c) { Q::one() } else { Q::zero() }).collect();
        HyperMatrix { shape, entries }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn entry(&self, cell: usize) -> &Q {
        &self.entries[cell]
    }

    pub fn get(&self, idx: &[usize]) -> &Q {
        &self.entries[self.shape.cell(idx)]
    }

    pub fn support(&self) -> SupportSet {
        SupportSet::from_cells(self.shape, (0..self.shape.cells()).filter(|&c| !self.entries[c].is_zero()))
    }

    /// Sum of all entries `w(A)`.
    pub fn weight(&self) -> Q {
        self.entries.iter().fold(Q::zero(), |acc, e| acc + e)
    }

    pub fn line_sum(&self, cell: usize, pos: usize) -> Q {
        self.shape.line_cells(cell, pos).fold(Q::zero(), |acc, c| acc + &self.entries[c])
    }

    pub fn extract_plane(&self, sel: &PlaneSelector) -> Result<HyperMatrix> {
        let (sub, cells) = sel.cells(self.shape)?;
        Ok(HyperMatrix { shape: sub, entries: cells.iter().map(|&c| self.entries[c].clone()).collect() })
    }

    /// Places `planes[v]` as the hyperplane with position `pos` equal to `v`.
    pub fn from_hyperplanes(pos: usize, planes: &[HyperMatrix]) -> Result<HyperMatrix> {
        let first = planes.first().ok_or_else(|| Error::Malformed("no hyperplanes".into()))?;
        let n = planes.len();
        let sub = first.shape;
        if sub.n() != n || planes.iter().any(|p| p.shape != sub) {
            return Err(Error::ShapeMismatch("hyperplanes must share shape and order".into()));
        }
        let shape = Shape::new(sub.d() + 1, n)?;
        shape.check_position(pos)?;
        let mut m = HyperMatrix::zeros(shape);
        for (v, p) in planes.iter().enumerate() {
            let (_, cells) = PlaneSelector::hyperplane(pos, v).cells(shape)?;
            for (k, &c) in cells.iter().enumerate() {
                m.entries[c] = p.entries[k].clone();
            }
        }
        Ok(m)
    }

    /// Convex combination `λ·self + (1−λ)·other`.
    pub fn convex(&self, other: &HyperMatrix, lambda: &Q) -> Result<HyperMatrix> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch("convex sum of different shapes".into()));
        }
        let mu = Q::one() - lambda;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a * lambda + b * &mu).collect();
        HyperMatrix::new(self.shape, entries)
    }
}
