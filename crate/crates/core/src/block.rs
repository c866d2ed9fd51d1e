//! Block permutations of order 4 built from order-2 subcubes.
//!
//! A partition tuple `ℰ ∈ {1,2,3}^d` cuts `I_4^d` into `2^d` subcubes `C_y`;
//! the parity bit `s` selects which subcubes are filled and `λ` picks one of
//! the two order-2 permutations inside each filled subcube.

use crate::error::{Error, Result};
use crate::shape::Shape;
use crate::support::SupportSet;

/// `p_i(a)`: which part of `𝒫_i` holds `a` (`𝒫_1 = 01|23`, `𝒫_2 = 02|13`, `𝒫_3 = 03|12`).
pub fn part_function(i: u8, a: usize) -> u8 {
    const P: [[u8; 4]; 3] = [[0, 0, 1, 1], [0, 1, 0, 1], [0, 1, 1, 0]];
    P[i as usize - 1][a]
}

/// `μ_i(a)`: the parity function attached to `𝒫_i`.
pub fn parity_function(i: u8, a: usize) -> u8 {
    const MU: [[u8; 4]; 3] = [[0, 1, 0, 1], [0, 0, 1, 1], [0, 1, 0, 1]];
    MU[i as usize - 1][a]
}

/// Bit `i` of a subcube id is `y_i`.
pub type SubcubeId = u32;

fn check_eps(eps: &[u8]) -> Result<()> {
    if eps.is_empty() || eps.len() > 16 || eps.iter().any(|&e| !(1..=3).contains(&e)) {
        return Err(Error::Malformed("partition tuple entries must lie in 1..=3".into()));
    }
    Ok(())
}

fn part_bits(eps: &[u8], idx: &[usize]) -> SubcubeId {
    idx.iter().enumerate().fold(0, |y, (i, &a)| y | (part_function(eps[i], a) as u32) << i)
}

fn parity_bit(eps: &[u8], idx: &[usize]) -> u8 {
    idx.iter().enumerate().fold(0, |m, (i, &a)| m ^ parity_function(eps[i], a))
}

/// Cells of `C_y` under `ℰ`.
pub fn subcube_cells(eps: &[u8], y: SubcubeId) -> Result<SupportSet> {
    check_eps(eps)?;
    let shape = Shape::new(eps.len(), 4)?;
    Ok(SupportSet::from_cells(shape, (0..shape.cells()).filter(|&c| part_bits(eps, &shape.index(c)) == y)))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockParams {
    eps: Vec<u8>,
    s: u8,
    /// `λ(y)` indexed by the subcube id; entries off `Q_s^d` stay false.
    lambda: Vec<bool>,
}

impl BlockParams {
    pub fn new(eps: Vec<u8>, s: u8, lambda: Vec<bool>) -> Result<BlockParams> {
        check_eps(&eps)?;
        if s > 1 || lambda.len() != 1 << eps.len() {
            return Err(Error::Malformed("λ needs one entry per subcube and s must be 0 or 1".into()));
        }
        let mut lambda = lambda;
        for (y, v) in lambda.iter_mut().enumerate() {
            if (y.count_ones() % 2) as u8 != s {
                *v = false;
            }
        }
        Ok(BlockParams { eps, s, lambda })
    }

    /// `λ` from a bit string over `Q_s^d` listed in increasing subcube id.
    pub fn from_bits(eps: Vec<u8>, s: u8, bits: u128) -> Result<BlockParams> {
        let d = eps.len();
        let mut lambda = vec![false; 1 << d];
        let mut k = 0;
        for (y, v) in lambda.iter_mut().enumerate() {
            if (y.count_ones() % 2) as u8 == s {
                *v = bits >> k & 1 == 1;
                k += 1;
            }
        }
        if k < 128 && bits >> k != 0 {
            return Err(Error::Malformed("λ bit string longer than 2^(d-1)".into()));
        }
        BlockParams::new(eps, s, lambda)
    }

    pub fn eps(&self) -> &[u8] {
        &self.eps
    }

    pub fn s(&self) -> u8 {
        self.s
    }

    pub fn d(&self) -> usize {
        self.eps.len()
    }

    pub fn lambda(&self, y: SubcubeId) -> bool {
        self.lambda[y as usize]
    }

    pub fn with_lambda_flipped(&self, y: SubcubeId) -> BlockParams {
        let mut p = self.clone();
        p.lambda[y as usize] ^= (y.count_ones() % 2) as u8 == self.s;
        p
    }
}

/// `a_α = 1 ⇔ ⊕ p_{ε_i}(α_i) = s` and `⊕ μ_{ε_i}(α_i) ⊕ λ(p(α)) = 0`.
pub fn block_permutation(params: &BlockParams) -> SupportSet {
    let shape = Shape::new(params.d(), 4).unwrap();
    SupportSet::from_cells(
        shape,
        (0..shape.cells()).filter(|&c| {
            let idx = shape.index(c);
            let y = part_bits(&params.eps, &idx);
            (y.count_ones() % 2) as u8 == params.s && parity_bit(&params.eps, &idx) ^ params.lambda(y) as u8 == 0
        }),
    )
}

/// `λ_M(x) = 0` if `w(x) ≡ 0 mod 4`, `1` if `w(x) ≡ 2 mod 4`.
pub fn lambda_m(d: usize) -> Vec<bool> {
    (0u32..1 << d).map(|y| y.count_ones() % 2 == 0 && y.count_ones() % 4 == 2).collect()
}

/// `supp ℳ_4^d = {α : α_1 + ⋯ + α_d ≡ 0 mod 4}`.
pub fn m4d(d: usize) -> Result<SupportSet> {
    let shape = Shape::new(d, 4)?;
    Ok(SupportSet::from_cells(shape, (0..shape.cells()).filter(|&c| shape.index(c).iter().sum::<usize>() % 4 == 0)))
}

/// `{α : α_1 + ⋯ + α_{d-1} + π(α_d) ≡ 0 mod 4}` with `π = (01)`.
pub fn l4d_partner(d: usize) -> Result<SupportSet> {
    let shape = Shape::new(d, 4)?;
    Ok(SupportSet::from_cells(
        shape,
        (0..shape.cells()).filter(|&c| {
            let idx = shape.index(c);
            let last = match idx[d - 1] {
                0 => 1,
                1 => 0,
                a => a,
            };
            (idx[..d - 1].iter().sum::<usize>() + last) % 4 == 0
        }),
    ))
}

/// Recovers `(λ, s)` for a permutation support under a fixed `ℰ`.
pub fn extract_block_params(perm: &SupportSet, eps: &[u8]) -> Result<Option<BlockParams>> {
    check_eps(eps)?;
    let shape = perm.shape();
    if shape.n() != 4 || shape.d() != eps.len() {
        return Err(Error::ShapeMismatch("partition tuple does not fit the support".into()));
    }
    let mut s = None;
    let mut lambda = vec![None; 1 << eps.len()];
    for c in perm.cells() {
        let idx = shape.index(c);
        let y = part_bits(eps, &idx);
        let parity = (y.count_ones() % 2) as u8;
        if *s.get_or_insert(parity) != parity {
            return Ok(None);
        }
        let want = parity_bit(eps, &idx) == 1;
        if *lambda[y as usize].get_or_insert(want) != want {
            return Ok(None);
        }
    }
    let Some(s) = s else { return Ok(None) };
    let params = BlockParams::new(eps.to_vec(), s, lambda.iter().map(|v| v.unwrap_or(false)).collect())?;
    Ok((block_permutation(&params) == *perm).then_some(params))
}

/// Subcube ids of parity `s`, increasing.
pub fn filled_subcubes(params: &BlockParams) -> Vec<SubcubeId> {
    (0u32..1 << params.d()).filter(|y| (y.count_ones() % 2) as u8 == params.s).collect()
}

/// Union of the cells of all filled subcubes.
pub fn filled_cells(params: &BlockParams) -> SupportSet {
    let shape = Shape::new(params.d(), 4).unwrap();
    SupportSet::from_cells(
        shape,
        (0..shape.cells()).filter(|&c| (part_bits(&params.eps, &shape.index(c)).count_ones() % 2) as u8 == params.s),
    )
}

fn part_set(e: u8, bit: u32) -> u8 {
    (0..4).filter(|&a| part_function(e, a) as u32 == bit).fold(0, |m, a| m | 1 << a)
}

/// Dimension of `C_y(ℰ_1) ∩ C_z(ℰ_2)`, `None` when empty.
pub fn intersection_dim(eps1: &[u8], y: SubcubeId, eps2: &[u8], z: SubcubeId) -> Option<usize> {
    let mut dim = 0;
    for i in 0..eps1.len() {
        let common = (part_set(eps1[i], y >> i & 1) & part_set(eps2[i], z >> i & 1)).count_ones();
        match common {
            0 => return None,
            2 => dim += 1,
            _ => {}
        }
    }
    Some(dim)
}

/// For each filled subcube of `b1`: the nonempty intersections with filled
/// subcubes of `b2` as `(dimension, partner count)` pairs.
pub fn intersection_profile(b1: &BlockParams, b2: &BlockParams) -> Vec<(SubcubeId, Vec<(usize, usize)>)> {
    filled_subcubes(b1)
        .into_iter()
        .map(|y| {
            let mut tally = std::collections::BTreeMap::new();
            for z in filled_subcubes(b2) {
                if let Some(k) = intersection_dim(&b1.eps, y, &b2.eps, z) {
                    *tally.entry(k).or_insert(0) += 1;
                }
            }
            (y, tally.into_iter().collect())
        })
        .collect()
}

/// Largest dimension of an intersection of filled subcubes; `None` stands for `−∞`.
pub fn tesselation_index(b1: &BlockParams, b2: &BlockParams) -> Option<usize> {
    intersection_profile(b1, b2).iter().flat_map(|(_, t)| t.iter().map(|&(k, _)| k)).max()
}
