//! Bit-level toolkit for order-4 matrices of dimension 2 and 3.
//!
//! A 2-dimensional support is a `u16` with bit `4r + c`; a 3-dimensional
//! support is a `u64` with bit `16a + 4b + c`, so its layer `a` is the
//! 16-bit word at offset `16a`. This is the same cell order as
//! [`SupportSet`], which makes conversion a plain word copy.

use polyperm_core::group::permutations;
use polyperm_core::{Shape, SupportSet};

pub type Plane = u16;
pub type Cube = u64;

/// Index of the unordered pair `{a, b}` of distinct symbols of `0..4`.
/// Complementary pairs have indices summing to 5.
pub fn pair_index(a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("pair ({a}, {b}) is not a pair of distinct symbols below 4"),
    }
}

/// Row-pair/column-pair mask of two planes: bit `6 rp + cp` is set when a
/// cell of `l` and a cell of `m` differ in both coordinates and occupy the
/// row pair `rp` and the column pair `cp`.
pub fn pair_mask(l: Plane, m: Plane) -> u64 {
    let mut r = 0u64;
    for x in bits16(l) {
        for y in bits16(m) {
            let (r0, c0, r1, c1) = (x / 4, x % 4, y / 4, y % 4);
            if r0 != r1 && c0 != c1 {
                r |= 1 << (pair_index(r0, r1) * 6 + pair_index(c0, c1));
            }
        }
    }
    r
}

/// Replaces every row pair and column pair by its complement. Bit
/// `6 rp + cp` goes to `35 - (6 rp + cp)`, a reversal of the 36-bit word.
pub fn complement_pairs(v: u64) -> u64 {
    (v & FULL36).reverse_bits() >> 28
}

pub const FULL36: u64 = (1 << 36) - 1;

/// Whether the 3-dimensional stack with layers `l0..l3` has zero permanent.
pub fn stack_is_zero(l: [Plane; 4]) -> bool {
    pair_mask(l[0], l[1]) & complement_pairs(pair_mask(l[2], l[3])) == 0
}

pub fn bits16(l: Plane) -> impl Iterator<Item = usize> {
    (0..16).filter(move |&x| l >> x & 1 == 1)
}

pub fn layer(s: Cube, a: usize) -> Plane {
    (s >> (16 * a)) as Plane
}

pub fn stack(layers: [Plane; 4]) -> Cube {
    layers.iter().enumerate().fold(0, |acc, (a, &l)| acc | (l as Cube) << (16 * a))
}

pub fn shape2() -> Shape {
    Shape::new(2, 4).expect("order-4 planes fit")
}

pub fn shape3() -> Shape {
    Shape::new(3, 4).expect("order-4 cubes fit")
}

pub fn plane_support(l: Plane) -> SupportSet {
    SupportSet::from_word(shape2(), l as u64)
}

pub fn cube_support(s: Cube) -> SupportSet {
    SupportSet::from_word(shape3(), s)
}

/// The 24 permutation planes, in lex order of the permutations.
pub fn permutation_planes() -> Vec<Plane> {
    permutations(4)
        .iter()
        .map(|p| p.iter().enumerate().fold(0, |acc, (r, &c)| acc | 1 << (r * 4 + c)))
        .collect()
}

/// Whether the plane is the support of a doubly stochastic matrix, that is
/// a union of the permutation planes it contains.
pub fn plane_realizable(l: Plane, perms: &[Plane]) -> bool {
    perms.iter().filter(|&&p| p & !l == 0).fold(0, |acc, &p| acc | p) == l && l != 0
}

pub fn max_line_2d(l: Plane) -> u32 {
    (0..4)
        .flat_map(|i| {
            let row = (l >> (4 * i)) & 0xf;
            let col = (0..4).filter(|&r| l >> (4 * r + i) & 1 == 1).count() as u32;
            [row.count_ones(), col]
        })
        .max()
        .unwrap_or(0)
}

/// Entries of a 2-dimensional sesquialteral plane in halves: 2 for a cell
/// alone in its row, 1 for a cell sharing it.
pub fn halves(l: Plane) -> [u8; 16] {
    let mut a = [0u8; 16];
    for x in bits16(l) {
        let row = (l >> (x / 4 * 4)) & 0xf;
        a[x] = if row.count_ones() == 1 { 2 } else { 1 };
    }
    a
}

/// All `{0,1,2}` arrays of order 4 with every line summing to 2, as supports.
/// These are exactly the 2-dimensional sesquialteral supports.
pub fn sesquialteral_planes() -> Vec<Plane> {
    fn rec(pos: usize, m: &mut [u8; 16], out: &mut Vec<Plane>) {
        if pos == 16 {
            if (0..4).all(|c| (0..4).map(|r| m[r * 4 + c]).sum::<u8>() == 2) {
                out.push((0..16).filter(|&i| m[i] > 0).fold(0, |acc, i| acc | 1 << i));
            }
            return;
        }
        let (r, c) = (pos / 4, pos % 4);
        let rs: u8 = (0..c).map(|j| m[r * 4 + j]).sum();
        let cs: u8 = (0..r).map(|i| m[i * 4 + c]).sum();
        for v in 0..=2u8 {
            if rs + v > 2 || cs + v > 2 || (c == 3 && rs + v != 2) {
                continue;
            }
            m[pos] = v;
            rec(pos + 1, m, out);
        }
        m[pos] = 0;
    }
    let mut out = Vec::new();
    rec(0, &mut [0; 16], &mut out);
    out
}

/// All 3-dimensional sesquialteral supports of order 4, in the order of
/// their first three layers.
pub fn sesquialteral_cubes() -> Vec<Cube> {
    let planes = sesquialteral_planes();
    let h: Vec<[u8; 16]> = planes.iter().map(|&l| halves(l)).collect();
    let mut out = Vec::new();
    for h0 in &h {
        for h1 in &h {
            let mut s01 = [0u8; 16];
            if (0..16).any(|i| {
                s01[i] = h0[i] + h1[i];
                s01[i] > 2
            }) {
                continue;
            }
            for h2 in &h {
                let mut rest = [0u8; 16];
                if (0..16).any(|i| {
                    let s = s01[i] + h2[i];
                    rest[i] = 2u8.wrapping_sub(s);
                    s > 2
                }) {
                    continue;
                }
                if (0..4).any(|r| rest[r * 4..r * 4 + 4].iter().sum::<u8>() != 2) {
                    continue;
                }
                let sup = |a: &[u8; 16]| (0..16).filter(|&i| a[i] > 0).fold(0 as Plane, |acc, i| acc | 1 << i);
                out.push(stack([sup(h0), sup(h1), sup(h2), sup(&rest)]));
            }
        }
    }
    out
}

/// Every element of the 3-dimensional equivalence group as a cell map.
pub fn group3() -> Vec<[u8; 64]> {
    let ps = permutations(4);
    let pos = permutations(3);
    let mut g = Vec::with_capacity(6 * 24 * 24 * 24);
    for pp in &pos {
        for s0 in &ps {
            for s1 in &ps {
                for s2 in &ps {
                    let mut m = [0u8; 64];
                    for (c, slot) in m.iter_mut().enumerate() {
                        let img = [s0[c / 16], s1[c / 4 % 4], s2[c % 4]];
                        let mut nc = [0; 3];
                        for i in 0..3 {
                            nc[pp[i]] = img[i];
                        }
                        *slot = (nc[0] * 16 + nc[1] * 4 + nc[2]) as u8;
                    }
                    g.push(m);
                }
            }
        }
    }
    g
}

/// Every element of the 2-dimensional equivalence group as a cell map.
pub fn group2() -> Vec<[u8; 16]> {
    let ps = permutations(4);
    let mut g = Vec::with_capacity(2 * 24 * 24);
    for transpose in [false, true] {
        for s0 in &ps {
            for s1 in &ps {
                let mut m = [0u8; 16];
                for (c, slot) in m.iter_mut().enumerate() {
                    let (r, col) = (s0[c / 4], s1[c % 4]);
                    *slot = if transpose { col * 4 + r } else { r * 4 + col } as u8;
                }
                g.push(m);
            }
        }
    }
    g
}

pub fn apply64(g: &[u8; 64], s: Cube) -> Cube {
    let mut r = 0;
    let mut x = s;
    while x != 0 {
        r |= 1 << g[x.trailing_zeros() as usize];
        x &= x - 1;
    }
    r
}

pub fn apply16(g: &[u8; 16], l: Plane) -> Plane {
    bits16(l).fold(0, |acc, c| acc | 1 << g[c])
}

/// Lex-min canonical form of a plane (lowest differing cell decides, 0 < 1).
pub fn canonical_plane(l: Plane, g2: &[[u8; 16]]) -> Plane {
    g2.iter().map(|g| apply16(g, l)).min_by_key(|&x| x.reverse_bits()).expect("group is not empty")
}

/// Whether some `n` cells of the cube are pairwise distinct in every coordinate.
pub fn cube_positive(s: Cube) -> bool {
    !stack_is_zero([layer(s, 0), layer(s, 1), layer(s, 2), layer(s, 3)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyperm_core::has_positive_diagonal;

    #[test]
    fn complement_reverses_pairs() {
        for b in 0..36 {
            let (rp, cp) = (b / 6, b % 6);
            assert_eq!(complement_pairs(1 << b), 1 << ((5 - rp) * 6 + (5 - cp)));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(sesquialteral_planes().len(), 282);
        assert_eq!(permutation_planes().len(), 24);
        assert_eq!(group2().len(), 1152);
    }

    #[test]
    fn pair_mask_zero_test_matches_search() {
        let perms = permutation_planes();
        let ses = sesquialteral_planes();
        for (i, &a) in ses.iter().enumerate().step_by(7) {
            for (j, &b) in ses.iter().enumerate().skip(i % 5).step_by(13) {
                let c = perms[(i + j) % 24];
                let e = perms[(3 * i + j) % 24];
                let s = stack([a, b, c, e]);
                assert_eq!(stack_is_zero([a, b, c, e]), !has_positive_diagonal(&cube_support(s)).is_positive());
            }
        }
    }

    #[test]
    fn group_elements_are_bijections() {
        for g in group3().iter().step_by(997) {
            let mut seen = [false; 64];
            for &x in g {
                assert!(!std::mem::replace(&mut seen[x as usize], true));
            }
        }
    }
}
