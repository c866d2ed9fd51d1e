//! Dense exact simplex method with Bland's anti-cycling rule.

use num::{One, Signed, Zero};

use crate::matrix::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Q>, value: Q },
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    basis: Vec<usize>,
    reduced: Vec<Q>,
    value: Q,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for a in self.rows[r].iter_mut() {
            *a /= &p;
        }
        self.rhs[r] /= &p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for (a, b) in self.rows[i].iter_mut().zip(&prow) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !self.reduced[col].is_zero() {
            let f = self.reduced[col].clone();
            for (a, b) in self.reduced.iter_mut().zip(&prow) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
            self.value += &f * &prhs;
        }
        self.basis[r] = col;
    }

    /// Maximizes over the columns below `limit`. Returns false when unbounded.
    fn optimize(&mut self, limit: usize) -> bool {
        loop {
            let Some(col) = (0..limit).find(|&j| self.reduced[j].is_positive()) else { return true };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, col);
        }
    }
}

/// Maximizes `c·x` subject to `A x = b`, `x ≥ 0`, with `b ≥ 0`.
pub fn maximize(c: &[Q], a: &[Vec<Q>], b: &[Q]) -> LpOutcome {
    let nvar = c.len();
    let m = a.len();
    let width = nvar + m;
    let mut rows = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), nvar);
        assert!(!b[i].is_negative());
        let mut r = row.clone();
        r.resize(width, Q::zero());
        r[nvar + i] = Q::one();
        rows.push(r);
    }
    let mut reduced = vec![Q::zero(); width];
    for row in &rows {
        for (j, v) in row.iter().enumerate().take(nvar) {
            reduced[j] += v;
        }
    }
    let value = -b.iter().fold(Q::zero(), |acc, v| acc + v);
    let mut t = Tableau { rows, rhs: b.to_vec(), basis: (nvar..width).collect(), reduced, value };
    t.optimize(nvar);
    if t.value.is_negative() {
        return LpOutcome::Infeasible;
    }
    // drive artificial variables out of the basis, dropping redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= nvar {
            if let Some(col) = (0..nvar).find(|&j| !t.rows[i][j].is_zero()) {
                t.pivot(i, col);
            } else {
                t.rows.remove(i);
                t.rhs.remove(i);
                t.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }
    let mut reduced: Vec<Q> = c.to_vec();
    reduced.resize(width, Q::zero());
    let mut value = Q::zero();
    for (i, &bv) in t.basis.iter().enumerate() {
        if c[bv].is_zero() {
            continue;
        }
        for (j, v) in t.rows[i].iter().enumerate() {
            reduced[j] -= &c[bv] * v;
        }
        value += &c[bv] * &t.rhs[i];
    }
    t.reduced = reduced;
    t.value = value;
    if !t.optimize(nvar) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Q::zero(); nvar];
    for (i, &bv) in t.basis.iter().enumerate() {
        x[bv] = t.rhs[i].clone();
    }
    LpOutcome::Optimal { x, value: t.value }
}
