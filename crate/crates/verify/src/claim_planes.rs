//! Four-dimensional stochastic matrices of order 4 whose first-direction
//! hyperplanes are sesquialteral permutations and whose permanent is zero.
//!
//! Every hyperplane `Γᵥ` is cut by its first inner coordinate into layers
//! `Γᵥᵖ`. A diagonal of the whole matrix picks layers along a permutation
//! `σ` and then a diagonal of the 3-dimensional stack
//! `(Γ₀^σ₀, Γ₁^σ₁, Γ₂^σ₂, Γ₃^σ₃)`, so the permanent vanishes iff for every
//! `σ` the pair mask of the first two layers avoids the complemented pair
//! mask of the last two. With `Γ₀` and `Γ₁` fixed this leaves, for each
//! ordered pair `(v₂, v₃)`, an allowed mask `K[v₂][v₃]` that must contain the
//! pair mask of `(Γ₂^v₂, Γ₃^v₃)`. `Γ₂` is then enumerated layer by layer
//! with the last layer forced by the line sums, and `Γ₃` likewise.
//!
//! `Γ₀` is a canonical class representative and `Γ₁` runs over every
//! sesquialteral support, so a class is reported as admitting exactly when
//! some zero-permanent matrix has a hyperplane in it.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use polyperm_core::catalog;
use polyperm_core::{canonical_form, has_positive_diagonal, Shape, SupportSet};
use rayon::prelude::*;

use crate::census::classify;
use crate::checkpoint::Checkpoint;
use crate::config::RunConfig;
use crate::cube::{
    complement_pairs, cube_support, halves, layer, pair_mask, sesquialteral_cubes, sesquialteral_planes, stack, Cube,
    Plane, FULL36,
};
use crate::error::{Error, Result};
use crate::report::{EnumerationReport, Status, Witness};

/// `Γ₁` candidates handled per work unit.
pub const UNIT: usize = 8192;

pub struct PlanesSpace {
    pub cubes: Vec<Cube>,
    layers: Vec<Plane>,
    layer_id: HashMap<Plane, usize>,
    halves: Vec<[u8; 16]>,
    cube_layers: Vec<[usize; 4]>,
    /// Pair masks of all layer pairs, indexed `i * layers + j`.
    masks: Vec<u64>,
    /// Inclusion-minimal pair masks over all layer pairs.
    minimal: Vec<u64>,
    /// Inclusion-minimal pair masks `(l, ·)` for each layer `l`.
    minimal_from: Vec<Vec<u64>>,
}

fn minimal_by_inclusion(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_by_key(|x| (x.count_ones(), *x));
    v.dedup();
    let mut out: Vec<u64> = Vec::new();
    for x in v {
        if !out.iter().any(|m| m & !x == 0) {
            out.push(x);
        }
    }
    out
}

fn fits(minimal: &[u64], allowed: u64) -> bool {
    minimal.iter().any(|m| m & !allowed == 0)
}

/// A zero-permanent configuration `[Γ₀, Γ₁, Γ₂, Γ₃]`.
pub type Configuration = [Cube; 4];

impl PlanesSpace {
    pub fn new() -> PlanesSpace {
        let layers = sesquialteral_planes();
        let layer_id: HashMap<Plane, usize> = layers.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let nl = layers.len();
        let masks: Vec<u64> = layers.iter().flat_map(|&a| layers.iter().map(move |&b| pair_mask(a, b))).collect();
        let minimal = minimal_by_inclusion(masks.clone());
        let minimal_from = (0..nl).map(|i| minimal_by_inclusion(masks[i * nl..(i + 1) * nl].to_vec())).collect();
        let cubes = sesquialteral_cubes();
        let cube_layers = cubes.iter().map(|&s| std::array::from_fn(|a| layer_id[&layer(s, a)])).collect();
        PlanesSpace {
            cubes,
            halves: layers.iter().map(|&l| halves(l)).collect(),
            layers,
            layer_id,
            cube_layers,
            masks,
            minimal,
            minimal_from,
        }
    }

    fn mask(&self, i: usize, j: usize) -> u64 {
        self.masks[i * self.layers.len() + j]
    }

    fn layer_ids(&self, s: Cube) -> Option<[usize; 4]> {
        let mut out = [0; 4];
        for (a, slot) in out.iter_mut().enumerate() {
            *slot = *self.layer_id.get(&layer(s, a))?;
        }
        Some(out)
    }

    /// The layer whose halves are `2 - x0 - x1 - x2`, if it exists.
    fn forced_layer(&self, parts: [usize; 3]) -> Option<usize> {
        let mut rest = [0u8; 16];
        let mut support: Plane = 0;
        for i in 0..16 {
            let s: u8 = parts.iter().map(|&p| self.halves[p][i]).sum();
            if s > 2 {
                return None;
            }
            rest[i] = 2 - s;
            if rest[i] > 0 {
                support |= 1 << i;
            }
        }
        let id = *self.layer_id.get(&support)?;
        (self.halves[id] == rest).then_some(id)
    }

    /// Completes fixed `Γ₀`, `Γ₁` to a zero-permanent configuration; returns
    /// the first `(Γ₂, Γ₃)` in enumeration order.
    pub fn complete(&self, g0: [usize; 4], g1: [usize; 4]) -> Option<(Cube, Cube)> {
        let mut allowed = [[0u64; 4]; 4];
        for v2 in 0..4 {
            for v3 in 0..4 {
                if v2 == v3 {
                    continue;
                }
                let mut rest = (0..4).filter(|&v| v != v2 && v != v3);
                let (p, q) = (rest.next()?, rest.next()?);
                let used = self.mask(g0[p], g1[q]) | self.mask(g0[q], g1[p]);
                let k = FULL36 & !complement_pairs(used);
                if !fits(&self.minimal, k) {
                    return None;
                }
                allowed[v2][v3] = k;
            }
        }
        let nl = self.layers.len();
        let domain = |v: usize, other: &dyn Fn(usize, usize) -> bool| -> Vec<bool> {
            (0..nl).map(|l| (0..4).filter(|&w| w != v).all(|w| other(l, w))).collect()
        };
        let d2: Vec<Vec<bool>> =
            (0..4).map(|v2| domain(v2, &|l, v3| fits(&self.minimal_from[l], allowed[v2][v3]))).collect();
        let list = |d: &[bool]| -> Vec<usize> { (0..nl).filter(|&l| d[l]).collect() };
        let l2: Vec<Vec<usize>> = d2.iter().map(|d| list(d)).collect();
        if l2.iter().any(|d| d.is_empty()) {
            return None;
        }
        for &a0 in &l2[0] {
            for &a1 in &l2[1] {
                for &a2 in &l2[2] {
                    let Some(a3) = self.forced_layer([a0, a1, a2]) else { continue };
                    if !d2[3][a3] {
                        continue;
                    }
                    let g2 = [a0, a1, a2, a3];
                    let d3: Vec<Vec<bool>> = (0..4)
                        .map(|v3| {
                            (0..nl)
                                .map(|l| (0..4).filter(|&v2| v2 != v3).all(|v2| self.mask(g2[v2], l) & !allowed[v2][v3] == 0))
                                .collect()
                        })
                        .collect();
                    let l3: Vec<Vec<usize>> = d3.iter().map(|d| list(d)).collect();
                    if l3.iter().any(|d| d.is_empty()) {
                        continue;
                    }
                    for &b0 in &l3[0] {
                        for &b1 in &l3[1] {
                            for &b2 in &l3[2] {
                                let Some(b3) = self.forced_layer([b0, b1, b2]) else { continue };
                                if d3[3][b3] {
                                    let cube = |ids: [usize; 4]| stack(ids.map(|i| self.layers[i]));
                                    return Some((cube(g2), cube([b0, b1, b2, b3])));
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Scans `Γ₁` over `range` of the support list. Returns how many admit a
    /// zero completion and the first configuration found.
    pub fn scan(&self, g0: Cube, range: std::ops::Range<usize>) -> Result<(u64, Option<Configuration>)> {
        let ids0 = self.layer_ids(g0).ok_or_else(|| Error::Config("hyperplane 0 is not sesquialteral".into()))?;
        let mut count = 0;
        let mut first = None;
        for i in range {
            if let Some((g2, g3)) = self.complete(ids0, self.cube_layers[i]) {
                count += 1;
                first.get_or_insert([g0, self.cubes[i], g2, g3]);
            }
        }
        Ok((count, first))
    }

    /// Directed search: the first zero-permanent configuration with the given
    /// hyperplane 0, in the order of the support list.
    pub fn directed(&self, g0: Cube) -> Result<Option<Configuration>> {
        let ids0 = self.layer_ids(g0).ok_or_else(|| Error::Config("hyperplane 0 is not sesquialteral".into()))?;
        Ok(self
            .cube_layers
            .iter()
            .enumerate()
            .find_map(|(i, &ids1)| self.complete(ids0, ids1).map(|(g2, g3)| [g0, self.cubes[i], g2, g3])))
    }
}

impl Default for PlanesSpace {
    fn default() -> Self {
        PlanesSpace::new()
    }
}

/// The configuration as a 4-dimensional support, hyperplane `v` at offset `64 v`.
pub fn configuration_support(c: &Configuration) -> SupportSet {
    let shape = Shape::new(4, 4).expect("order-4 four-dimensional shape fits");
    SupportSet::from_cells(shape, c.iter().enumerate().flat_map(|(v, &s)| cube_support(s).cells().map(move |x| v * 64 + x).collect::<Vec<_>>()))
}

/// Independent check of a configuration: sesquialteral hyperplanes and no
/// positive diagonal in the whole 4-dimensional support.
pub fn check_configuration(c: &Configuration) -> bool {
    c.iter().all(|&s| polyperm_core::realize::realize_sesquialteral(&cube_support(s)).is_some())
        && !has_positive_diagonal(&configuration_support(c)).is_positive()
}

fn encode(count: u64, first: &Option<Configuration>) -> String {
    match first {
        None => format!("n={count}"),
        Some(c) => format!("n={count} w={:x},{:x},{:x}", c[1], c[2], c[3]),
    }
}

fn decode(status: &str, g0: Cube) -> Option<(u64, Option<Configuration>)> {
    let mut parts = status.split(' ');
    let count = parts.next()?.strip_prefix("n=")?.parse().ok()?;
    let first = match parts.next() {
        None => None,
        Some(w) => {
            let v: Vec<Cube> = w.strip_prefix("w=")?.split(',').map(|x| Cube::from_str_radix(x, 16).ok()).collect::<Option<_>>()?;
            Some([g0, *v.first()?, *v.get(1)?, *v.get(2)?])
        }
    };
    Some((count, first))
}

fn class_name(canon: &SupportSet, printed: &[(&'static str, SupportSet)]) -> Option<&'static str> {
    printed.iter().find(|(_, c)| c == canon).map(|(n, _)| *n)
}

pub fn verify_claim_planes(config: &RunConfig) -> Result<EnumerationReport> {
    let start = Instant::now();
    let mut report = EnumerationReport::new("claim-planes", config.echo());
    let space = PlanesSpace::new();
    let mut classes: Vec<Cube> = classify(&space.cubes, config)?;
    classes.sort_by_key(|&w| cube_support(w));
    let printed: Vec<(&str, SupportSet)> =
        catalog::plane_types().into_iter().map(|(n, s)| (n, canonical_form(&s))).collect();

    let checkpoint = config.checkpoint_path.as_deref().map(Checkpoint::open).transpose()?;
    let chunks = space.cubes.len().div_ceil(UNIT);
    let units: Vec<(usize, usize, String)> = (0..classes.len())
        .flat_map(|c| (0..chunks).map(move |k| (c, k, format!("c{c:02}-g{:06}", k * UNIT))))
        .collect();

    let mut results: BTreeMap<usize, (u64, Option<Configuration>)> = BTreeMap::new();
    let mut pending = Vec::new();
    for (u, (c, _, id)) in units.iter().enumerate() {
        match checkpoint.as_ref().and_then(|cp| cp.get(id)) {
            Some(status) => {
                let r = decode(status, classes[*c]).ok_or_else(|| Error::Checkpoint {
                    path: config.checkpoint_path.as_ref().map(|p| p.display().to_string()).unwrap_or_default(),
                    line: 0,
                    msg: format!("unreadable status for unit {id}"),
                })?;
                results.insert(u, r);
            }
            None => pending.push(u),
        }
    }
    let run_now = config.node_budget.map_or(pending.len(), |b| (b as usize).min(pending.len()));
    if checkpoint.is_some() {
        eprintln!("claim-planes: {} units from the checkpoint, {run_now} run now", results.len());
    }
    let pool = config.pool()?;
    let fresh: Vec<(usize, (u64, Option<Configuration>))> = pool.install(|| {
        pending[..run_now]
            .par_iter()
            .map(|&u| {
                let (c, k, id) = &units[u];
                let end = ((k + 1) * UNIT).min(space.cubes.len());
                let r = space.scan(classes[*c], k * UNIT..end)?;
                if let Some(cp) = &checkpoint {
                    cp.record(id, &encode(r.0, &r.1))?;
                }
                Ok((u, r))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    results.extend(fresh);

    report.stat("units", units.len());
    report.stat("gamma1-candidates", space.cubes.len());
    report.stat("layers", space.layers.len());
    report.stat("minimal-pair-masks", space.minimal.len());
    let complete = results.len() == units.len();

    let mut per_class: BTreeMap<usize, (u64, Option<Configuration>)> = BTreeMap::new();
    for (u, (count, first)) in &results {
        let e = per_class.entry(units[*u].0).or_insert((0, None));
        e.0 += count;
        if e.1.is_none() {
            e.1 = *first;
        }
    }
    let admitting: Vec<usize> = per_class.iter().filter(|(_, (n, _))| *n > 0).map(|(&c, _)| c).collect();
    let mut reps = Vec::new();
    let mut printed_admitting = 0;
    let mut unprinted = 0;
    let mut failed_checks = 0;
    for &c in &admitting {
        let canon = cube_support(classes[c]);
        let name = class_name(&canon, &printed);
        match name {
            Some(_) => printed_admitting += 1,
            None => unprinted += 1,
        }
        let config4 = per_class[&c].1.expect("admitting class has a configuration");
        if !check_configuration(&config4) {
            failed_checks += 1;
        }
        let label = match name {
            Some(n) => format!("class {c} ({n})"),
            None => format!("class {c}"),
        };
        report.witnesses.push(Witness::new("zero-configuration", label, &config4.map(cube_support)));
        reps.push(canon);
    }
    report.count("classes", classes.len());
    report.count("admitting-classes", admitting.len());
    report.count("printed-types", printed.len());
    report.count("printed-types-admitting", printed_admitting);
    report.count("unprinted-admitting", unprinted);
    report.count("admitting-gamma1", per_class.values().map(|(n, _)| n).sum::<u64>());
    report.count("witness-check-failures", failed_checks);
    report.set_representatives(reps);

    if !complete {
        report.status = Status::BudgetExhausted;
        report.notes.push(format!("{} of {} units remain", units.len() - results.len(), units.len()));
    } else {
        if unprinted > 0 || printed_admitting != printed.len() {
            report.refute(format!(
                "{} classes admit a zero-permanent configuration: {} of the 8 printed types and {} others",
                admitting.len(),
                printed_admitting,
                unprinted
            ));
        }
        if failed_checks > 0 {
            report.refute("a configuration failed the independent diagonal check");
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
