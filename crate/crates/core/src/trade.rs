//! Unitrades, bitrades, line complements, even completions, plane types and
//! direct sums of double permutations.

use std::collections::{BTreeMap, VecDeque};
use std::sync::OnceLock;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::group::canonical_form;
use crate::matrix::HyperMatrix;
use crate::realize::{is_double_permutation_support, is_sesquialteral};
use crate::shape::{PlaneSelector, Shape};
use crate::support::{from_picture, SupportSet};

/// Every line meets `s` in zero or two cells.
pub fn is_unitrade(s: &SupportSet) -> bool {
    let mut ok = true;
    s.for_each_line(|_, _, k| ok &= k == 0 || k == 2);
    ok
}

fn require_unitrade(s: &SupportSet) -> Result<()> {
    if is_unitrade(s) {
        Ok(())
    } else {
        Err(Error::NotUnitrade)
    }
}

fn neighbours(s: &SupportSet, c: usize) -> impl Iterator<Item = usize> + '_ {
    let shape = s.shape();
    (0..shape.d()).flat_map(move |pos| shape.line_cells(c, pos).filter(move |&x| x != c && s.contains(x)))
}

/// Connected components of the same-line graph, ordered by smallest cell.
pub fn unitrade_components(s: &SupportSet) -> Result<Vec<SupportSet>> {
    require_unitrade(s)?;
    Ok(components(s))
}

fn components(s: &SupportSet) -> Vec<SupportSet> {
    let shape = s.shape();
    let mut seen = SupportSet::empty(shape);
    let mut out = Vec::new();
    for root in s.cells() {
        if seen.contains(root) {
            continue;
        }
        let mut comp = SupportSet::empty(shape);
        let mut queue = VecDeque::from([root]);
        seen.insert(root);
        while let Some(c) = queue.pop_front() {
            comp.insert(c);
            for x in neighbours(s, c) {
                if !seen.contains(x) {
                    seen.insert(x);
                    queue.push_back(x);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Signs alternating along every line that meets the support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignFunction {
    shape: Shape,
    signs: BTreeMap<usize, i8>,
}

impl SignFunction {
    pub fn sign(&self, cell: usize) -> Option<i8> {
        self.signs.get(&cell).copied()
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// `(cell, sign)` in cell order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.signs.iter().map(|(&c, &s)| (c, s))
    }
}

/// Two-colors the same-line graph; component roots (smallest cells) get `+1`.
pub fn bitrade_sign(s: &SupportSet) -> Result<Option<SignFunction>> {
    require_unitrade(s)?;
    let mut signs: BTreeMap<usize, i8> = BTreeMap::new();
    for root in s.cells() {
        if signs.contains_key(&root) {
            continue;
        }
        signs.insert(root, 1);
        let mut queue = VecDeque::from([root]);
        while let Some(c) = queue.pop_front() {
            let sc = signs[&c];
            for x in neighbours(s, c) {
                match signs.get(&x) {
                    Some(&sx) if sx == sc => return Ok(None),
                    Some(_) => {}
                    None => {
                        signs.insert(x, -sc);
                        queue.push_back(x);
                    }
                }
            }
        }
    }
    Ok(Some(SignFunction { shape: s.shape(), signs }))
}

/// `∖_i S = 𝒯_i(S) ∖ S`, where `𝒯_i(S)` is the union of direction-`i` lines meeting `S`.
pub fn complement_in_direction(s: &SupportSet, pos: usize) -> Result<SupportSet> {
    require_unitrade(s)?;
    s.shape().check_position(pos)?;
    Ok(line_complement(s, pos))
}

fn line_complement(s: &SupportSet, pos: usize) -> SupportSet {
    let shape = s.shape();
    let mut out = SupportSet::empty(shape);
    for base in shape.line_bases(pos) {
        if shape.line_cells(base, pos).any(|c| s.contains(c)) {
            for c in shape.line_cells(base, pos) {
                if !s.contains(c) {
                    out.insert(c);
                }
            }
        }
    }
    out
}

/// `∖_y U`, applying single-direction complements in increasing position order.
///
/// Only `U` itself must be a unitrade: a complement of a unitrade need not be
/// one (a 6-cycle in a plane leaves a line of three), so later steps take
/// plain line complements.
pub fn complement_iterated(s: &SupportSet, positions: &[usize]) -> Result<SupportSet> {
    require_unitrade(s)?;
    let mut ps = positions.to_vec();
    ps.sort_unstable();
    let mut cur = s.clone();
    for p in ps {
        s.shape().check_position(p)?;
        cur = line_complement(&cur, p);
    }
    Ok(cur)
}

/// `E(U)`: the union of `∖_y U` over all even-size direction sets `y`.
///
/// A double permutation for the unitrades of the printed plane types, but
/// not for every unitrade of order 4.
pub fn even_completion(u: &SupportSet) -> Result<SupportSet> {
    require_unitrade(u)?;
    let d = u.shape().d();
    let mut out = SupportSet::empty(u.shape());
    for mask in 0u32..(1 << d) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let ys: Vec<usize> = (0..d).filter(|&i| mask >> i & 1 == 1).collect();
        out = out.union(&complement_iterated(u, &ys)?)?;
    }
    Ok(out)
}

/// Type of a 2-dimensional double permutation of order 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlaneType {
    /// Two 2×2 blocks.
    F,
    /// One cyclic band of eight cells.
    H,
    Other,
}

fn pattern_f() -> &'static SupportSet {
    static F: OnceLock<SupportSet> = OnceLock::new();
    F.get_or_init(|| canonical_form(&from_picture(2, &["••∘∘", "••∘∘", "∘∘••", "∘∘••"]).unwrap()))
}

fn pattern_h() -> &'static SupportSet {
    static H: OnceLock<SupportSet> = OnceLock::new();
    H.get_or_init(|| canonical_form(&from_picture(2, &["••∘∘", "∘••∘", "∘∘••", "•∘∘•"]).unwrap()))
}

pub fn classify_plane_2d(s: &SupportSet) -> PlaneType {
    let shape = s.shape();
    if shape.d() != 2 || shape.n() != 4 || s.len() != 8 {
        return PlaneType::Other;
    }
    let c = canonical_form(s);
    if &c == pattern_f() {
        PlaneType::F
    } else if &c == pattern_h() {
        PlaneType::H
    } else {
        PlaneType::Other
    }
}

/// All 2-dimensional planes with free positions `i < j`.
fn planes_2d(s: &SupportSet, i: usize, j: usize) -> Vec<(Vec<usize>, SupportSet)> {
    let shape = s.shape();
    let fixed: Vec<usize> = (0..shape.d()).filter(|&p| p != i && p != j).collect();
    if fixed.is_empty() {
        return vec![(Vec::new(), s.clone())];
    }
    let outer = Shape::new(fixed.len(), shape.n()).unwrap();
    (0..outer.cells())
        .map(|c| {
            let vals = outer.index(c);
            let plane = s.extract_plane(&PlaneSelector::new(&fixed, &vals).unwrap()).unwrap();
            (vals, plane)
        })
        .collect()
}

/// Edge coloring `φ` of `K_d` by the common type of parallel 2-dimensional planes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectionColoring {
    d: usize,
    colors: BTreeMap<(usize, usize), PlaneType>,
}

impl DirectionColoring {
    pub fn color(&self, i: usize, j: usize) -> PlaneType {
        self.colors[&(i.min(j), i.max(j))]
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), PlaneType)> + '_ {
        self.colors.iter().map(|(&e, &t)| (e, t))
    }

    /// Classes of positions joined by H edges.
    pub fn h_partition(&self) -> Vec<Vec<usize>> {
        let mut class: Vec<usize> = (0..self.d).collect();
        for (&(i, j), &t) in &self.colors {
            if t == PlaneType::H {
                let (a, b) = (class[i], class[j]);
                for c in class.iter_mut() {
                    if *c == b {
                        *c = a;
                    }
                }
            }
        }
        group_by_label(&class)
    }
}

fn group_by_label(label: &[usize]) -> Vec<Vec<usize>> {
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (p, &l) in label.iter().enumerate() {
        groups.entry(l).or_default().push(p);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

pub fn direction_coloring(dp: &SupportSet) -> Result<DirectionColoring> {
    if !is_double_permutation_support(dp) || dp.shape().n() != 4 {
        return Err(Error::Malformed("not a double permutation of order 4".into()));
    }
    let d = dp.shape().d();
    let mut colors = BTreeMap::new();
    for i in 0..d {
        for j in i + 1..d {
            let mut kind = None;
            for (vals, plane) in planes_2d(dp, i, j) {
                let t = classify_plane_2d(&plane);
                if t == PlaneType::Other || kind.is_some_and(|k| k != t) {
                    return Err(Error::Malformed(format!(
                        "plane of free positions ({i}, {j}) at fixed values {vals:?} breaks the common type"
                    )));
                }
                kind = Some(t);
            }
            colors.insert((i, j), kind.unwrap());
        }
    }
    for a in 0..d {
        for b in a + 1..d {
            for c in b + 1..d {
                let hs = [(a, b), (a, c), (b, c)].iter().filter(|e| colors[e] == PlaneType::H).count();
                if hs == 2 {
                    return Err(Error::Malformed(format!("H edges of ({a}, {b}, {c}) do not close a clique")));
                }
            }
        }
    }
    Ok(DirectionColoring { d, colors })
}

/// Classes of `i ~ j ⇔ ∖_i S = ∖_j S` on the component `S` holding the smallest cell.
pub fn direction_equivalence_classes(dp: &SupportSet) -> Result<Vec<Vec<usize>>> {
    if !is_double_permutation_support(dp) {
        return Err(Error::Malformed("not a double permutation".into()));
    }
    let comp = components(dp).swap_remove(0);
    let d = dp.shape().d();
    let comps: Vec<SupportSet> = (0..d).map(|i| line_complement(&comp, i)).collect();
    let mut label: Vec<usize> = (0..d).collect();
    for i in 0..d {
        for j in 0..i {
            if comps[i] == comps[j] {
                label[i] = label[j];
                break;
            }
        }
    }
    Ok(group_by_label(&label))
}

/// `c_{α,β} = a_α ⊕ b_β` on `I_n^{d_1 + d_2}`.
pub fn direct_sum(a: &SupportSet, b: &SupportSet) -> Result<SupportSet> {
    let (sa, sb) = (a.shape(), b.shape());
    if sa.n() != sb.n() {
        return Err(Error::ShapeMismatch("direct sum of different orders".into()));
    }
    let shape = Shape::new(sa.d() + sb.d(), sa.n())?;
    let nb = sb.cells();
    Ok(SupportSet::from_cells(
        shape,
        (0..shape.cells()).filter(|&c| a.contains(c / nb) != b.contains(c % nb)),
    ))
}

fn permute_positions(s: &SupportSet, order: &[usize]) -> SupportSet {
    // position k of `s` becomes position order[k]
    let shape = s.shape();
    SupportSet::from_cells(
        shape,
        s.cells().map(|c| {
            let idx = shape.index(c);
            let mut out = vec![0; idx.len()];
            for (k, &p) in order.iter().enumerate() {
                out[p] = idx[k];
            }
            shape.cell(&out)
        }),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub classes: Vec<Vec<usize>>,
    pub factors: Vec<SupportSet>,
}

impl Decomposition {
    /// Direct sum of the factors with positions restored to their classes.
    pub fn recombine(&self) -> Result<SupportSet> {
        let mut acc = self.factors[0].clone();
        for f in &self.factors[1..] {
            acc = direct_sum(&acc, f)?;
        }
        let order: Vec<usize> = self.classes.iter().flatten().copied().collect();
        Ok(permute_positions(&acc, &order))
    }
}

/// Splits a double permutation as `⊕ B_j` over its direction classes.
///
/// Each factor is the restriction to a class with the other coordinates held
/// at the smallest cell; when the number of classes is even one factor is
/// complemented to fix the parity.
pub fn direct_sum_decompose(dp: &SupportSet) -> Result<Decomposition> {
    let classes = direction_equivalence_classes(dp)?;
    let shape = dp.shape();
    let base = shape.index(dp.cells().next().unwrap());
    let mut factors = Vec::new();
    for class in &classes {
        let sub = Shape::new(class.len(), shape.n())?;
        let f = SupportSet::from_cells(
            sub,
            (0..sub.cells()).filter(|&c| {
                let local = sub.index(c);
                let mut idx = base.clone();
                for (k, &p) in class.iter().enumerate() {
                    idx[p] = local[k];
                }
                dp.contains_index(&idx)
            }),
        );
        factors.push(f);
    }
    if classes.len() % 2 == 0 {
        factors[0] = SupportSet::full(factors[0].shape()).difference(&factors[0])?;
    }
    let dec = Decomposition { classes, factors };
    if dec.recombine()? != *dp {
        return Err(Error::Malformed("support is not a direct sum over its direction classes".into()));
    }
    Ok(dec)
}

/// `U(A) = {α : 0 < a_α < 1}` of a sesquialteral permutation.
pub fn fractional_unitrade(m: &HyperMatrix) -> Result<SupportSet> {
    if !is_sesquialteral(m) {
        return Err(Error::Malformed("not a sesquialteral permutation".into()));
    }
    Ok(SupportSet::from_cells(
        m.shape(),
        (0..m.shape().cells()).filter(|&c| {
            let e = m.entry(c);
            !e.is_zero() && !e.is_one()
        }),
    ))
}
