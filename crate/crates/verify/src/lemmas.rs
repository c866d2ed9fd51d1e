//! Finite checks around `ℳ₄ᵈ`: completing residue-2 cells to diagonals,
//! pairwise compatibility of permutations equivalent to `ℳ₄³`, filled-subcube
//! intersection profiles and the small-dimension zero/positive pattern.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use polyperm_core::block::{
    filled_cells, intersection_profile, l4d_partner, lambda_m, m4d, subcube_cells, BlockParams,
};
use polyperm_core::catalog::{DIAGONALS_D3, DIAGONALS_D5};
use polyperm_core::permanent::diagonal_through;
use polyperm_core::{canonical_form, has_positive_diagonal, Diagonal, Error as CoreError, SupportSet};

use crate::config::RunConfig;
use crate::cube::{apply64, cube_positive, cube_support, group3, Cube};
use crate::error::{Error, Result};
use crate::report::{EnumerationReport, Witness};

fn residue(idx: &[usize]) -> usize {
    idx.iter().sum::<usize>() % 4
}

/// Replay predicate for a residue-2 completion: `n` cells pairwise distinct
/// in every coordinate, exactly one of them outside `ℳ₄ᵈ` and that one of
/// residue 2.
pub fn is_residue2_completion(s: &SupportSet) -> bool {
    let shape = s.shape();
    let idx = s.indices();
    let outside: Vec<&Vec<usize>> = idx.iter().filter(|a| residue(a) != 0).collect();
    Diagonal::new(shape, idx.clone()).is_ok() && outside.len() == 1 && residue(outside[0]) == 2
}

fn printed_completions(d: usize) -> Vec<(Vec<usize>, Vec<Vec<usize>>)> {
    match d {
        3 => DIAGONALS_D3.iter().map(|(a, rest)| (a.to_vec(), rest.iter().map(|x| x.to_vec()).collect())).collect(),
        5 => DIAGONALS_D5.iter().map(|(a, rest)| (a.to_vec(), rest.iter().map(|x| x.to_vec()).collect())).collect(),
        _ => Vec::new(),
    }
}

pub fn verify_addtofilled(d: usize, config: &RunConfig) -> Result<EnumerationReport> {
    if d != 3 && d != 5 {
        return Err(Error::Config(format!("addtofilled runs for d = 3 or 5, not {d}")));
    }
    let start = Instant::now();
    let mut report = EnumerationReport::new(&format!("addtofilled-{d}"), config.echo());
    let m = m4d(d)?;
    let shape = m.shape();

    let mut printed_ok = 0;
    for (alpha, rest) in printed_completions(d) {
        let mut all = vec![alpha.clone()];
        all.extend(rest.iter().cloned());
        let ok = residue(&alpha) == 2
            && rest.iter().all(|x| m.contains_index(x))
            && Diagonal::new(shape, all).is_ok();
        if ok {
            printed_ok += 1;
        } else {
            report.refute(format!("printed completion of {alpha:?} is not a diagonal through it"));
        }
    }

    let targets: Vec<usize> = (0..shape.cells()).filter(|&c| residue(&shape.index(c)) == 2).collect();
    let mut witnessed = 0;
    for &c in &targets {
        let alpha = shape.index(c);
        match diagonal_through(&m, &alpha)? {
            Some(dg) => {
                witnessed += 1;
                let cells = SupportSet::from_indices(shape, dg.indices())?;
                report.witnesses.push(Witness::new("residue2-completion", format!("{alpha:?}"), &[cells]));
            }
            None => report.refute(format!("no diagonal of supp(M) plus {alpha:?}")),
        }
    }
    report.count("printed-completions", printed_completions(d).len());
    report.count("printed-completions-valid", printed_ok);
    report.count("residue2-indices", targets.len());
    report.count("residue2-witnessed", witnessed);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// A permutation equivalent to `ℳ₄³` with its four filled subcubes.
#[derive(Clone, Debug)]
pub struct FilledPermutation {
    pub cells: Cube,
    pub subcubes: [Cube; 4],
}

impl FilledPermutation {
    pub fn filled(&self) -> Cube {
        self.subcubes.iter().fold(0, |a, &c| a | c)
    }
}

/// The orbit of `ℳ₄³` under equivalence, each member with the image of
/// `ℳ₄³`'s filled subcubes. Parameters of `ℳ₄³` as a block permutation are
/// unique, so the filled subcubes are well defined.
pub fn m4_orbit() -> Result<Vec<FilledPermutation>> {
    let m = m4d(3)?.word();
    let params = BlockParams::new(vec![2, 2, 2], 0, lambda_m(3))?;
    let subcubes: Vec<Cube> = (0u32..8)
        .filter(|y| y.count_ones() % 2 == 0)
        .map(|y| subcube_cells(params.eps(), y).map(|s| s.word()))
        .collect::<polyperm_core::Result<_>>()?;
    let mut seen: HashMap<Cube, [Cube; 4]> = HashMap::new();
    let mut order = Vec::new();
    for g in group3() {
        let img = apply64(&g, m);
        let mut subs: [Cube; 4] = std::array::from_fn(|i| apply64(&g, subcubes[i]));
        subs.sort_unstable();
        match seen.get(&img) {
            Some(prev) if *prev != subs => {
                return Err(CoreError::Malformed("filled subcubes of an equivalent copy are not unique".into()).into())
            }
            Some(_) => {}
            None => {
                seen.insert(img, subs);
                order.push(img);
            }
        }
    }
    order.sort_unstable();
    Ok(order.into_iter().map(|c| FilledPermutation { cells: c, subcubes: seen[&c] }).collect())
}

/// Looks up a permutation equivalent to `ℳ₄³` together with its filled subcubes.
pub fn filled_permutation(cells: Cube) -> Result<Option<FilledPermutation>> {
    Ok(m4_orbit()?.into_iter().find(|p| p.cells == cells))
}

/// Neither permutation puts a cell into the other's filled subcubes beyond
/// that subcube's own cells.
pub fn adds_nothing_to_filled(a: &FilledPermutation, b: &FilledPermutation) -> bool {
    b.cells & a.filled() & !a.cells == 0 && a.cells & b.filled() & !b.cells == 0
}

/// Largest dimension of an intersection of filled subcubes, `None` when disjoint.
pub fn filled_tesselation(a: &FilledPermutation, b: &FilledPermutation) -> Option<u32> {
    a.subcubes
        .iter()
        .flat_map(|x| b.subcubes.iter().map(move |y| (x & y).count_ones()))
        .filter(|&n| n > 0)
        .max()
        .map(|n| n.trailing_zeros())
}

pub fn verify_nonewinfilled_base(config: &RunConfig) -> Result<EnumerationReport> {
    let start = Instant::now();
    let mut report = EnumerationReport::new("nonewinfilled-3", config.echo());
    let orbit = m4_orbit()?;
    let l_canon = canonical_form(&m4d(3)?.union(&l4d_partner(3)?)?);
    let n = orbit.len();
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if adds_nothing_to_filled(&orbit[i], &orbit[j]) {
                adj[i][j] = true;
                adj[j][i] = true;
                edges.push((i, j));
            }
        }
    }
    let mut triangles = Vec::new();
    for &(i, j) in &edges {
        triangles.extend((j + 1..n).filter(|&k| adj[i][k] && adj[j][k]).map(|k| [i, j, k]));
    }
    let mut level: Vec<Vec<usize>> = triangles.iter().map(|t| t.to_vec()).collect();
    let mut largest = if edges.is_empty() { 1 } else { 2 };
    let mut clique_counts = Vec::new();
    while !level.is_empty() {
        largest = level[0].len();
        clique_counts.push((largest, level.len()));
        level = level
            .iter()
            .flat_map(|c| {
                let last = *c.last().expect("cliques are nonempty");
                (last + 1..n).filter(|&x| c.iter().all(|&y| adj[x][y])).map(|x| {
                    let mut e = c.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    let positive_triples = triangles
        .iter()
        .filter(|t| cube_positive(t.iter().fold(0, |acc, &x| acc | orbit[x].cells)))
        .count();
    let disjoint_in_triples = triangles
        .iter()
        .map(|&[i, j, k]| {
            [(i, j), (i, k), (j, k)].iter().filter(|(a, b)| filled_tesselation(&orbit[*a], &orbit[*b]).is_none()).count()
        })
        .collect::<BTreeSet<_>>();
    if let Some(t) = triangles.first() {
        report.witnesses.push(Witness::new("compatible-triple", "k = 3", &t.map(|x| cube_support(orbit[x].cells))));
    }
    let mut disjoint = 0;
    let mut l_type = 0;
    let mut other = 0;
    let mut l_tesselation = BTreeSet::new();
    let mut reps = BTreeSet::new();
    for &(i, j) in &edges {
        let union = cube_support(orbit[i].cells | orbit[j].cells);
        match filled_tesselation(&orbit[i], &orbit[j]) {
            None => disjoint += 1,
            Some(t) => {
                let canon = canonical_form(&union);
                if canon == l_canon {
                    l_type += 1;
                    l_tesselation.insert(t);
                } else {
                    other += 1;
                    if reps.insert(canon.clone()) {
                        report.witnesses.push(Witness::new("exception", "compatible pair", &[canon]));
                    }
                }
            }
        }
    }
    let disjoint_classes: BTreeSet<SupportSet> = edges
        .iter()
        .filter(|(i, j)| filled_tesselation(&orbit[*i], &orbit[*j]).is_none())
        .map(|(i, j)| canonical_form(&cube_support(orbit[*i].cells | orbit[*j].cells)))
        .collect();

    report.count("orbit-size", n);
    report.count("compatible-pairs", edges.len());
    report.count("triangles", triangles.len());
    for (size, count) in &clique_counts {
        report.count(&format!("configurations-of-size-{size}"), *count);
    }
    report.count("largest-configuration", largest);
    report.count("triangle-unions-positive", positive_triples);
    report.count("disjoint-pairs-per-triangle", disjoint_in_triples.iter().next().copied().unwrap_or(0));
    report.count("disjoint-pairs", disjoint);
    report.count("l-pairs", l_type);
    report.count("exceptions", other);
    report.count("l-tesselation-index", l_tesselation.iter().next().copied().unwrap_or(0));
    if !triangles.is_empty() {
        report.refute(format!(
            "{} triples of pairwise compatible permutations, so k = 2 fails; every triple union has a positive permanent: {}",
            triangles.len(),
            positive_triples == triangles.len()
        ));
    }
    if other > 0 {
        report.refute(format!("{other} compatible pairs are neither disjoint nor of L type"));
    }
    let mut all_reps: Vec<SupportSet> = disjoint_classes.into_iter().collect();
    if l_type > 0 {
        all_reps.push(l_canon);
    }
    report.set_representatives(all_reps);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Filled-subcube intersections of `ℳ₄ᵈ` with a block permutation `(ℰ, ·, s)`
/// for every `ℰ` and `s`. Returns `(cases, failures)`.
pub fn filled_intersection_profile(d: usize) -> Result<(u64, u64)> {
    let m = BlockParams::new(vec![2; d], 0, lambda_m(d))?;
    let mut cases = 0;
    let mut failures = 0;
    for code in 0..3usize.pow(d as u32) {
        let eps: Vec<u8> = (0..d).map(|i| (code / 3usize.pow(i as u32) % 3 + 1) as u8).collect();
        let k = eps.iter().filter(|&&e| e == 2).count();
        for s in 0..2u8 {
            cases += 1;
            let a = BlockParams::new(eps.clone(), s, vec![false; 1 << d])?;
            let ok = if k < d {
                intersection_profile(&m, &a).iter().all(|(_, hits)| hits[..] == [(k, 1 << (d - k - 1))])
            } else {
                let fm = filled_cells(&m);
                let fa = filled_cells(&a);
                if s == 0 { fm == fa } else { fm.intersection(&fa)?.is_empty() }
            };
            if !ok {
                failures += 1;
            }
        }
    }
    Ok((cases, failures))
}

pub fn verify_theorem_small(d: usize, config: &RunConfig) -> Result<EnumerationReport> {
    if d % 2 == 0 || !(3..=7).contains(&d) {
        return Err(Error::Config(format!("theorem-small runs for odd 3 <= d <= 7, not {d}")));
    }
    let start = Instant::now();
    let mut report = EnumerationReport::new(&format!("theorem-small-{d}"), config.echo());
    let m = m4d(d)?;
    let l = m.union(&l4d_partner(d)?)?;
    for (name, s) in [("m4", &m), ("l4", &l)] {
        let w = has_positive_diagonal(s);
        report.count(&format!("{name}-d{d}-positive"), w.is_positive() as u64);
        if w.is_positive() {
            report.refute(format!("{name} at d = {d} has a positive diagonal"));
        }
    }
    for e in [d - 1, d + 1] {
        let me = m4d(e)?;
        match has_positive_diagonal(&me).diagonal() {
            Some(dg) => {
                report.count(&format!("m4-d{e}-positive"), 1u64);
                let cells = SupportSet::from_indices(me.shape(), dg.indices())?;
                report.witnesses.push(Witness::new("diagonal-in", format!("m4 d={e}"), &[me.clone(), cells]));
            }
            None => {
                report.count(&format!("m4-d{e}-positive"), 0u64);
                report.refute(format!("m4 at even d = {e} has no positive diagonal"));
            }
        }
    }
    report.set_representatives(vec![canonical_form_if_small(&m), canonical_form_if_small(&l)]);
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Canonical forms are only computed up to `d = 5`; beyond that the support
/// itself stands in.
fn canonical_form_if_small(s: &SupportSet) -> SupportSet {
    if s.shape().d() <= 5 { canonical_form(s) } else { s.clone() }
}
