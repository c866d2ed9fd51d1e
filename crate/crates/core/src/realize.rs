//! Realizability of supports by polystochastic, sesquialteral and double
//! permutations.

use num::{One, Signed, Zero};

use crate::matrix::{q, HyperMatrix, Q};
use crate::simplex::{maximize, LpOutcome};
use crate::support::SupportSet;

/// Nonnegative with every line of every direction summing to 1.
pub fn is_polystochastic(m: &HyperMatrix) -> bool {
    let shape = m.shape();
    if m.entries().iter().any(|e| e.is_negative()) {
        return false;
    }
    (0..shape.d()).all(|pos| shape.line_bases(pos).all(|b| m.line_sum(b, pos).is_one()))
}

/// Polystochastic with at most two nonzero entries per line.
pub fn is_sesquialteral(m: &HyperMatrix) -> bool {
    is_polystochastic(m) && m.support().max_line_count() <= 2
}

/// A polystochastic matrix with support exactly `s`, if one exists.
///
/// Solves `max t` over `x_c = t + y_c` with `y ≥ 0`, `t ≥ 0` and every line
/// sum equal to 1; the support is realizable iff the optimum is positive.
pub fn realize_polystochastic(s: &SupportSet) -> Option<HyperMatrix> {
    let shape = s.shape();
    if s.has_empty_line() {
        return None;
    }
    let cells: Vec<usize> = s.cells().collect();
    let mut col = vec![usize::MAX; shape.cells()];
    for (k, &c) in cells.iter().enumerate() {
        col[c] = k;
    }
    let t = cells.len();
    let mut rows = Vec::new();
    for pos in 0..shape.d() {
        for base in shape.line_bases(pos) {
            let mut row = vec![Q::zero(); t + 1];
            let mut count = 0;
            for c in shape.line_cells(base, pos) {
                if s.contains(c) {
                    row[col[c]] = Q::one();
                    count += 1;
                }
            }
            row[t] = q(count, 1);
            rows.push(row);
        }
    }
    let mut obj = vec![Q::zero(); t + 1];
    obj[t] = Q::one();
    let rhs = vec![Q::one(); rows.len()];
    let LpOutcome::Optimal { x, value } = maximize(&obj, &rows, &rhs) else { return None };
    if !value.is_positive() {
        return None;
    }
    let mut entries = vec![Q::zero(); shape.cells()];
    for (k, &c) in cells.iter().enumerate() {
        entries[c] = &x[k] + &value;
    }
    HyperMatrix::new(shape, entries).ok()
}

/// The forced sesquialteral matrix on `s`: cells alone on their lines get 1,
/// cells sharing every line get 1/2; anything else fails.
pub fn realize_sesquialteral(s: &SupportSet) -> Option<HyperMatrix> {
    let shape = s.shape();
    let mut entries = vec![Q::zero(); shape.cells()];
    for c in s.cells() {
        let counts: Vec<usize> = (0..shape.d()).map(|pos| s.line_count(c, pos)).collect();
        entries[c] = if counts.iter().all(|&k| k == 1) {
            Q::one()
        } else if counts.iter().all(|&k| k == 2) {
            q(1, 2)
        } else {
            return None;
        };
    }
    if s.has_empty_line() {
        return None;
    }
    HyperMatrix::new(shape, entries).ok()
}

/// Every line holds exactly two cells.
pub fn is_double_permutation_support(s: &SupportSet) -> bool {
    let mut ok = true;
    s.for_each_line(|_, _, k| ok &= k == 2);
    ok
}
