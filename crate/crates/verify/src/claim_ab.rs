//! Stacks `(A, B, C₁, C₂)` of order-4 planes with zero permanent, where `A`
//! is doubly stochastic with a line of three or more nonzero entries, `B` is
//! doubly stochastic with a line of two or more, and `C₁`, `C₂` are
//! permutations.
//!
//! A stack has zero permanent exactly when the pair mask of `(A, B)` avoids
//! the complemented pair mask of `(C₁, C₂)`. Both masks grow with the
//! supports, so a pair `(A, B)` admits some zero stack iff its mask fits
//! under one of the maximal "allowed" masks of permutation pairs, and it is
//! enough to test the inclusion-minimal `B`.

use std::collections::BTreeSet;
use std::time::Instant;

use polyperm_core::catalog;
use polyperm_core::realize::realize_polystochastic;
use polyperm_core::{canonical_form, has_positive_diagonal, SupportSet};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::cube::{
    complement_pairs, max_line_2d, pair_mask, permutation_planes, plane_realizable, plane_support, stack, cube_support,
    Plane, FULL36,
};
use crate::error::Result;
use crate::report::{EnumerationReport, Status, Witness};

/// Candidate `A` planes handled per work unit.
const UNIT: usize = 256;

pub struct AbSpace {
    pub perms: Vec<Plane>,
    pub a_candidates: Vec<Plane>,
    pub b_candidates: Vec<Plane>,
    b_minimal: Vec<Plane>,
    /// Allowed mask of every ordered permutation pair, indexed `24 i + j`.
    allowed: Vec<u64>,
    allowed_max: Vec<u64>,
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

impl AbSpace {
    pub fn new() -> AbSpace {
        let perms = permutation_planes();
        let realizable: Vec<Plane> = (1..=Plane::MAX).filter(|&l| plane_realizable(l, &perms)).collect();
        let a_candidates: Vec<Plane> = realizable.iter().copied().filter(|&l| max_line_2d(l) >= 3).collect();
        let b_candidates: Vec<Plane> = realizable.iter().copied().filter(|&l| max_line_2d(l) >= 2).collect();
        let b_minimal =
            minimal_by_inclusion(b_candidates.iter().map(|&b| b as u64).collect()).into_iter().map(|b| b as Plane).collect();
        let allowed: Vec<u64> = perms
            .iter()
            .flat_map(|&c1| perms.iter().map(move |&c2| FULL36 & !complement_pairs(pair_mask(c1, c2))))
            .collect();
        let complements: Vec<u64> = allowed.iter().map(|k| FULL36 & !k).collect();
        let allowed_max = minimal_by_inclusion(complements).into_iter().map(|k| FULL36 & !k).collect();
        AbSpace { perms, a_candidates, b_candidates, b_minimal, allowed, allowed_max }
    }

    pub fn is_zero_pair(&self, a: Plane, b: Plane) -> bool {
        let n = pair_mask(a, b);
        self.allowed_max.iter().any(|k| n & !k == 0)
    }

    pub fn qualifies(&self, a: Plane) -> bool {
        self.b_minimal.iter().any(|&b| self.is_zero_pair(a, b))
    }

    pub fn qualifying_b(&self, a: Plane) -> Vec<Plane> {
        self.b_candidates.iter().copied().filter(|&b| self.is_zero_pair(a, b)).collect()
    }

    /// Every permutation pair `(C₁, C₂)` completing `(A, B)` to a zero stack.
    pub fn zero_completions(&self, a: Plane, b: Plane) -> Vec<(Plane, Plane)> {
        let n = pair_mask(a, b);
        (0..self.allowed.len())
            .filter(|&i| n & !self.allowed[i] == 0)
            .map(|i| (self.perms[i / 24], self.perms[i % 24]))
            .collect()
    }
}

impl Default for AbSpace {
    fn default() -> Self {
        AbSpace::new()
    }
}

fn word(s: &SupportSet) -> Plane {
    s.word() as Plane
}

fn stack_supports(l: [Plane; 4]) -> Vec<SupportSet> {
    l.iter().map(|&p| plane_support(p)).collect()
}

/// Row 0 and column 0 each hold a single cell, so any realization puts 1
/// there and 0 elsewhere on those lines.
fn zero_row_and_column_are_01(b: Plane) -> bool {
    (b & 0xf).count_ones() == 1 && (b & 0x1111).count_ones() == 1
}

pub fn verify_claim_ab(config: &RunConfig) -> Result<EnumerationReport> {
    let start = Instant::now();
    let mut report = EnumerationReport::new("claim-ab", config.echo());
    let space = AbSpace::new();
    let pool = config.pool()?;

    let units: Vec<&[Plane]> = space.a_candidates.chunks(UNIT).collect();
    let allowed_units = config.node_budget.map_or(units.len(), |b| (b as usize).min(units.len()));
    let qualifying: Vec<Plane> = pool.install(|| {
        units[..allowed_units]
            .par_iter()
            .flat_map_iter(|chunk| chunk.iter().copied().filter(|&a| space.qualifies(a)).collect::<Vec<_>>())
            .collect()
    });
    report.stat("units", units.len());
    report.stat("units-done", allowed_units);
    report.stat("a-candidates", space.a_candidates.len());
    report.stat("b-candidates", space.b_candidates.len());
    report.stat("b-minimal", space.b_minimal.len());
    report.stat("allowed-masks-maximal", space.allowed_max.len());
    if allowed_units < units.len() {
        report.status = Status::BudgetExhausted;
        report.notes.push(format!("node budget stopped the search after {allowed_units} of {} units", units.len()));
    }

    let minimal: Vec<Plane> = qualifying
        .iter()
        .copied()
        .filter(|&a| !qualifying.iter().any(|&x| x != a && x & !a == 0))
        .collect();
    let classes: BTreeSet<SupportSet> = minimal.iter().map(|&a| canonical_form(&plane_support(a))).collect();
    let printed_a = [catalog::a1(), catalog::a2()];
    let printed_classes: BTreeSet<SupportSet> = printed_a.iter().map(canonical_form).collect();
    report.count("qualifying-a", qualifying.len());
    report.count("minimal-a", minimal.len());
    report.count("minimal-a-classes", classes.len());
    if classes != printed_classes {
        report.refute("minimal A supports do not form exactly the classes (A1) and (A2)");
    }

    let mut prop1_bad = 0;
    let mut prop2_bad = 0;
    let mut stacks_checked = 0;
    let mut list2_zero_pairs = 0;
    for (k, (a_set, printed)) in [(&printed_a[0], catalog::list_1()), (&printed_a[1], catalog::list_2())].into_iter().enumerate()
    {
        let tag = format!("list-{}", k + 1);
        let a = word(a_set);
        let found = space.qualifying_b(a);
        let printed: BTreeSet<Plane> = printed.iter().map(word).collect();
        let found_set: BTreeSet<Plane> = found.iter().copied().collect();
        let extra: Vec<Plane> = found_set.difference(&printed).copied().collect();
        let missing = printed.difference(&found_set).count();
        report.count(&format!("{tag}-size"), found.len());
        report.count(&format!("{tag}-printed-found"), printed.len() - missing);
        report.count(&format!("{tag}-unprinted"), extra.len());
        report.count(&format!("{tag}-two-entry-lines-only"), found.iter().filter(|&&b| max_line_2d(b) == 2).count());
        for &b in &extra {
            report.witnesses.push(Witness::new("unprinted-b", format!("{tag} extra"), &[plane_support(a), plane_support(b)]));
        }
        if !extra.is_empty() || missing > 0 {
            report.refute(format!(
                "{tag}: {} qualifying B for the printed A, {} printed, {} unprinted, {} printed but not qualifying",
                found.len(),
                printed.len(),
                extra.len(),
                missing
            ));
        }

        for &b in &found {
            let zeros = space.zero_completions(a, b);
            let (c1, c2) = zeros[0];
            let cube = stack([a, b, c1, c2]);
            stacks_checked += 1;
            if has_positive_diagonal(&cube_support(cube)).is_positive() {
                report.refute("mask test and diagonal search disagree on a stack");
            }
            report.witnesses.push(Witness::new("zero-stack", tag.clone(), &stack_supports([a, b, c1, c2])));
            if k == 0 && !zero_row_and_column_are_01(b) {
                prop1_bad += 1;
            }
            if k == 1 {
                prop2_bad += zeros.iter().filter(|(c1, c2)| c1 != c2).count();
                list2_zero_pairs += zeros.len();
            }
        }
    }
    report.count("list-2-zero-pairs", list2_zero_pairs);
    report.count("property-1-counterexamples", prop1_bad);
    report.count("property-2-counterexamples", prop2_bad);
    report.stat("stacks-cross-checked", stacks_checked);
    if prop1_bad > 0 {
        report.refute("property (1) fails for some B of List 1");
    }
    if prop2_bad > 0 {
        report.refute("property (2) fails: a zero stack with C1 != C2");
    }

    report.set_representatives(classes.into_iter().collect());
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Replay predicate for a representative: realizable, a line of three or more.
pub fn is_a_candidate(s: &SupportSet) -> bool {
    s.shape().d() == 2 && s.shape().n() == 4 && s.max_line_count() >= 3 && realize_polystochastic(s).is_some()
}
