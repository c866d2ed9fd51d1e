#![allow(dead_code)]

use polyperm_core::block::{block_permutation, BlockParams};
use polyperm_core::{EquivalenceElement, HyperMatrix, Q, Shape, SupportSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_matrix(r: &mut ChaCha8Rng, shape: Shape, zero_rate: f64) -> HyperMatrix {
    let entries = (0..shape.cells())
        .map(|_| {
            if r.gen_bool(zero_rate) {
                Q::from_integer(0.into())
            } else {
                Q::new(r.gen_range(1..6).into(), r.gen_range(1..5).into())
            }
        })
        .collect();
    HyperMatrix::new(shape, entries).unwrap()
}

pub fn random_element(r: &mut ChaCha8Rng, shape: Shape) -> EquivalenceElement {
    let mut pos: Vec<usize> = (0..shape.d()).collect();
    pos.shuffle(r);
    let sym = (0..shape.d())
        .map(|_| {
            let mut p: Vec<usize> = (0..shape.n()).collect();
            p.shuffle(r);
            p
        })
        .collect();
    EquivalenceElement::new(pos, sym).unwrap()
}

pub fn random_block_params(r: &mut ChaCha8Rng, d: usize) -> BlockParams {
    let eps = (0..d).map(|_| r.gen_range(1..=3)).collect();
    let lambda = (0..1 << d).map(|_| r.gen_bool(0.5)).collect();
    BlockParams::new(eps, r.gen_range(0..2), lambda).unwrap()
}

/// A random order-4 permutation: a block permutation moved by a random group element.
pub fn random_permutation(r: &mut ChaCha8Rng, d: usize) -> SupportSet {
    let p = block_permutation(&random_block_params(r, d));
    let g = random_element(r, p.shape());
    g.apply_support(&p).unwrap()
}

/// Random convex combination of `k` random permutations.
pub fn random_convex(r: &mut ChaCha8Rng, d: usize, k: usize) -> HyperMatrix {
    let shape = Shape::new(d, 4).unwrap();
    let weights: Vec<i64> = (0..k).map(|_| r.gen_range(1..5)).collect();
    let total: i64 = weights.iter().sum();
    let mut entries = vec![Q::from_integer(0.into()); shape.cells()];
    for &w in &weights {
        let p = random_permutation(r, d);
        for c in p.cells() {
            entries[c] += Q::new(w.into(), total.into());
        }
    }
    HyperMatrix::new(shape, entries).unwrap()
}

/// All permutations of `0..k` by plain recursion.
pub fn naive_perms(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in naive_perms(k - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, k - 1);
            out.push(q);
        }
    }
    out
}

/// Permanent straight from the definition: every tuple of `d-1` coordinate permutations.
pub fn naive_permanent(m: &HyperMatrix) -> Q {
    let shape = m.shape();
    let perms = naive_perms(shape.n());
    let slots = shape.d() - 1;
    let mut total = Q::from_integer(0.into());
    let count = perms.len().pow(slots as u32);
    for mut code in 0..count {
        let mut chosen = Vec::with_capacity(slots);
        for _ in 0..slots {
            chosen.push(&perms[code % perms.len()]);
            code /= perms.len();
        }
        let mut prod = Q::from_integer(1.into());
        for k in 0..shape.n() {
            let mut idx = vec![k];
            idx.extend(chosen.iter().map(|p| p[k]));
            prod *= m.get(&idx);
        }
        total += prod;
    }
    total
}

/// Whether some `n` cells of `s` are pairwise distinct in every coordinate, by brute force.
pub fn naive_positive(s: &SupportSet) -> bool {
    let cells: Vec<Vec<usize>> = s.indices();
    let n = s.shape().n();
    fn rec(cells: &[Vec<usize>], chosen: &mut Vec<usize>, start: usize, n: usize) -> bool {
        if chosen.len() == n {
            return true;
        }
        for i in start..cells.len() {
            if chosen.iter().all(|&j| cells[j].iter().zip(&cells[i]).all(|(a, b)| a != b)) {
                chosen.push(i);
                if rec(cells, chosen, i + 1, n) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(&cells, &mut Vec::new(), 0, n)
}
