//! Latin hypercubes and multidimensional permutations of one more dimension.

use num::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{HyperMatrix, Q};
use crate::shape::Shape;
use crate::support::SupportSet;

fn symbol(e: &Q, n: usize) -> Option<usize> {
    if !e.is_integer() {
        return None;
    }
    e.to_integer().to_usize().filter(|&v| v < n)
}

/// Checks that every line of `q` carries every symbol `0..n` once.
pub fn is_latin(q: &HyperMatrix) -> bool {
    let shape = q.shape();
    let n = shape.n();
    if q.entries().iter().any(|e| symbol(e, n).is_none()) {
        return false;
    }
    (0..shape.d()).all(|pos| {
        shape.line_bases(pos).all(|base| {
            let mut seen = 0u32;
            for c in shape.line_cells(base, pos) {
                seen |= 1 << symbol(q.entry(c), n).unwrap();
            }
            seen == (1 << n) - 1
        })
    })
}

/// The support `{(α, q_α)}` of the permutation attached to a latin hypercube.
pub fn latin_to_permutation(q: &HyperMatrix) -> Result<SupportSet> {
    if !is_latin(q) {
        return Err(Error::NotLatin("some line misses a symbol".into()));
    }
    let shape = q.shape();
    let out = Shape::new(shape.d() + 1, shape.n())?;
    Ok(SupportSet::from_cells(
        out,
        (0..shape.cells()).map(|c| c * shape.n() + symbol(q.entry(c), shape.n()).unwrap()),
    ))
}

/// Inverse of [`latin_to_permutation`].
pub fn permutation_to_latin(s: &SupportSet) -> Result<HyperMatrix> {
    let shape = s.shape();
    if shape.d() < 2 || !s.is_permutation() {
        return Err(Error::Malformed("not a multidimensional permutation".into()));
    }
    let sub = Shape::new(shape.d() - 1, shape.n())?;
    let mut entries = vec![Q::zero(); sub.cells()];
    for c in s.cells() {
        entries[c / shape.n()] = Q::from_integer((c % shape.n()).into());
    }
    HyperMatrix::new(sub, entries)
}

/// The Cayley table `q_α = α_1 + ⋯ + α_d mod n`.
pub fn cyclic_latin(shape: Shape) -> HyperMatrix {
    let entries = (0..shape.cells())
        .map(|c| Q::from_integer((shape.index(c).iter().sum::<usize>() % shape.n()).into()))
        .collect();
    HyperMatrix::new(shape, entries).unwrap()
}
