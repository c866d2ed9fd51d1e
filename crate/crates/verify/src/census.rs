//! Exhaustive censuses of 3-dimensional sesquialteral supports of order 4.

use std::collections::HashSet;
use std::time::Instant;

use polyperm_core::realize::{is_polystochastic, realize_sesquialteral};
use polyperm_core::{canonical_form, has_positive_diagonal, SupportSet};
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::cube::{apply64, cube_positive, cube_support, group3, sesquialteral_cubes, Cube};
use crate::error::Result;
use crate::report::{EnumerationReport, Witness};

/// Splits `supports` into equivalence classes. Supports are visited in
/// order; the first member of a new class is canonicalized and its whole
/// orbit marked, so later members are skipped without a canonical-form call.
/// Returns the canonical representatives in class-discovery order.
pub fn classify(supports: &[Cube], config: &RunConfig) -> Result<Vec<Cube>> {
    let group = group3();
    let pool = config.pool()?;
    let mut seen: HashSet<Cube> = HashSet::with_capacity(supports.len());
    let mut reps = Vec::new();
    for &s in supports {
        if seen.contains(&s) {
            continue;
        }
        let orbit: Vec<Cube> = pool.install(|| group.par_iter().map(|g| apply64(g, s)).collect());
        seen.extend(orbit);
        reps.push(canonical_form(&cube_support(s)).word());
    }
    Ok(reps)
}

/// Strength-2 orthogonal-array check: doubling the realized entries gives a
/// `{0,1,2}` array whose lines all sum to 2.
fn doubled_lines_sum_to_two(s: &SupportSet) -> bool {
    realize_sesquialteral(s).is_some_and(|m| is_polystochastic(&m))
}

pub fn census_sesquialteral_3d(config: &RunConfig) -> Result<EnumerationReport> {
    let start = Instant::now();
    let mut report = EnumerationReport::new("census-44", config.echo());
    let all = sesquialteral_cubes();
    let reps = classify(&all, config)?;
    let reps: Vec<SupportSet> = reps.iter().map(|&w| cube_support(w)).collect();

    let mut bad = 0;
    for r in &reps {
        let sizes_ok = (16..=32).contains(&r.len()) && r.max_line_count() <= 2 && !r.has_empty_line();
        if !sizes_ok || !doubled_lines_sum_to_two(r) {
            bad += 1;
        }
    }
    let printed: Vec<_> = polyperm_core::catalog::plane_types()
        .into_iter()
        .map(|(name, s)| (name, canonical_form(&s)))
        .collect();
    let printed_found = printed.iter().filter(|(_, c)| reps.contains(c)).count();

    report.count("supports", all.len());
    report.count("classes", reps.len());
    report.count("printed-types-found", printed_found);
    report.count("predicate-failures", bad);
    report.stat("orbit-sweeps", reps.len());
    if reps.len() != 44 {
        report.refute(format!("found {} classes, expected 44", reps.len()));
    }
    if printed_found != printed.len() {
        report.refute("a printed plane type is missing from the census");
    }
    if bad > 0 {
        report.refute("a representative fails the sesquialteral line conditions");
    }
    report.set_representatives(reps);
    report.elapsed = start.elapsed();
    Ok(report)
}

pub fn census_double_perm_3d_positive(config: &RunConfig) -> Result<EnumerationReport> {
    let start = Instant::now();
    let mut report = EnumerationReport::new("census-double3", config.echo());
    let doubles: Vec<Cube> = sesquialteral_cubes().into_iter().filter(|s| s.count_ones() == 32).collect();
    let pool = config.pool()?;
    let zero: Vec<Cube> = pool.install(|| doubles.par_iter().copied().filter(|&s| !cube_positive(s)).collect());
    let mut reps: Vec<SupportSet> = classify(&doubles, config)?.iter().map(|&w| cube_support(w)).collect();
    reps.sort();

    let mut zero_reps = 0;
    for r in &reps {
        match has_positive_diagonal(r).diagonal() {
            Some(dg) => {
                let cells = SupportSet::from_indices(r.shape(), dg.indices())?;
                report.witnesses.push(Witness::new("diagonal-in", format!("class {}", report.witnesses.len()), &[r.clone(), cells]));
            }
            None => zero_reps += 1,
        }
    }
    let f = canonical_form(&polyperm_core::catalog::plane_type("f").expect("type (f) is printed"));
    let h = canonical_form(&polyperm_core::catalog::plane_type("h").expect("type (h) is printed"));

    report.count("supports", doubles.len());
    report.count("classes", reps.len());
    report.count("zero-permanent-supports", zero.len());
    report.count("zero-permanent-classes", zero_reps);
    report.count("contains-f", reps.contains(&f) as u64);
    report.count("contains-h", reps.contains(&h) as u64);
    if !zero.is_empty() || zero_reps > 0 {
        report.refute(format!("{} double permutation supports have zero permanent", zero.len()));
        for &s in zero.iter().take(8) {
            report.witnesses.push(Witness::new("zero-support", "counterexample", &[cube_support(s)]));
        }
    }
    report.set_representatives(reps);
    report.elapsed = start.elapsed();
    Ok(report)
}
